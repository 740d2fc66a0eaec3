"""Exact Smith normal form and abelian invariants over the integers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors (including trivial 1s) plus free rank."""

    divisors: tuple[int, ...]
    free_rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d > 1)

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        parts.extend("Z" for _ in range(self.free_rank))
        return " + ".join(parts) if parts else "0"


def smith_normal_form(
    matrix: list[list[int]], want_transforms: bool = False
):
    """Diagonalize an integer matrix M as U @ M @ V = D with d_i | d_{i+1}.

    Returns (D, U, V) when want_transforms is set, else just D.  All
    arithmetic is exact; entries may be arbitrarily large Python ints.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    A = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = [[int(i == j) for j in range(m)] for i in range(m)] if want_transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if want_transforms else None

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        if U is not None:
            U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in A:
            row[i] -= q * row[j]
        if V is not None:
            for row in V:
                row[i] -= q * row[j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # find a pivot
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility fix-up: pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t]:
                    row_op(t, i, -1)  # add row i to row t, then restart clearing
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if A[t][t] < 0:
                A[t] = [-x for x in A[t]]
                if U is not None:
                    U[t] = [-x for x in U[t]]
            t += 1
    if want_transforms:
        return A, U, V
    return A


def elementary_divisors(matrix: list[list[int]]) -> tuple[tuple[int, ...], int]:
    """(divisor chain d1 | d2 | ..., rank) of an integer matrix."""
    if not matrix or not matrix[0]:
        return (), 0
    D = smith_normal_form(matrix)
    divisors = tuple(
        abs(D[i][i]) for i in range(min(len(D), len(D[0]))) if D[i][i]
    )
    return divisors, len(divisors)


def abelian_invariants(matrix: list[list[int]], n_generators: int) -> AbelianInvariants:
    """Invariants of Z^g / (row space of `matrix`), g = n_generators."""
    if not matrix:
        return AbelianInvariants((), n_generators)
    D = smith_normal_form(matrix)
    divisors = []
    rank_hit = 0
    for i in range(min(len(D), len(D[0]))):
        d = D[i][i]
        if d:
            divisors.append(abs(d))
            rank_hit += 1
    free = n_generators - rank_hit
    return AbelianInvariants(tuple(divisors), free)
