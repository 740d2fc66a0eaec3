"""The binary icosahedral group as exact unit quaternions.

Components live in the field of rationals extended by sqrt(5), with exact
Fraction coordinates -- no floating point.  The 120 units are the 24
Hurwitz-style elements plus the 96 even coordinate permutations of
(0, +-1, +-1/phi, +-phi)/2, phi the golden ratio.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .finite import FiniteGroup, GroupError, Perm, group_closure


class Q5:
    """x + y*sqrt(5) with exact rational x, y."""

    __slots__ = ("x", "y")

    def __init__(self, x, y=0):
        self.x = Fraction(x)
        self.y = Fraction(y)

    def __add__(self, o):
        return Q5(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return Q5(self.x - o.x, self.y - o.y)

    def __mul__(self, o):
        return Q5(self.x * o.x + 5 * self.y * o.y, self.x * o.y + self.y * o.x)

    def __neg__(self):
        return Q5(-self.x, -self.y)

    def __eq__(self, o):
        return isinstance(o, Q5) and self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def key(self):
        return (self.x, self.y)

    def __repr__(self):
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}r5"
        return f"{self.x}+{self.y}r5"


Q0 = Q5(0)
Q1 = Q5(1)
HALF = Q5(Fraction(1, 2))
# phi/2 and 1/(2 phi) = (phi - 1)/2
PHI_HALF = Q5(Fraction(1, 4), Fraction(1, 4))
IPHI_HALF = Q5(Fraction(-1, 4), Fraction(1, 4))


class Icosian:
    """A quaternion w + x i + y j + z k with Q5 components."""

    __slots__ = ("q",)

    def __init__(self, w, x, y, z):
        self.q = (w, x, y, z)

    def __mul__(self, o):
        a, b, c, d = self.q
        e, f, g, h = o.q
        return Icosian(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __neg__(self):
        return Icosian(*(-c for c in self.q))

    def __eq__(self, o):
        return isinstance(o, Icosian) and self.q == o.q

    def __hash__(self):
        return hash(self.q)

    def key(self):
        return tuple(c.key() for c in self.q)

    def norm(self) -> Q5:
        return (
            self.q[0] * self.q[0]
            + self.q[1] * self.q[1]
            + self.q[2] * self.q[2]
            + self.q[3] * self.q[3]
        )

    def __repr__(self):
        return "<" + ",".join(repr(c) for c in self.q) + ">"


ICOSIAN_ONE = Icosian(Q1, Q0, Q0, Q0)


def _unit_icosians() -> list[Icosian]:
    out = []
    for i in range(4):
        for s in (1, -1):
            comps = [Q0] * 4
            comps[i] = Q5(s)
            out.append(Icosian(*comps))
    for signs in product((1, -1), repeat=4):
        out.append(
            Icosian(*(Q5(Fraction(s, 2)) for s in signs))
        )
    base = [Q0, Q1, IPHI_HALF * Q5(2), PHI_HALF * Q5(2)]  # 0, 1, 1/phi, phi
    half = Q5(Fraction(1, 2))
    even_perms = [p for p in _all_perms(4) if Perm(p).is_even]
    seen = set()
    for p in even_perms:
        for signs in product((1, -1), repeat=4):
            comps = []
            for pos in range(4):
                v = base[p[pos]] * half
                comps.append(v * Q5(signs[pos]) if v != Q0 else Q0)
            ic = Icosian(*comps)
            if ic not in seen:
                seen.add(ic)
                out.append(ic)
    return out


def _all_perms(n):
    if n == 1:
        return [(0,)]
    out = []
    for rest in _all_perms(n - 1):
        for i in range(n):
            out.append(rest[:i] + (n - 1,) + rest[i:])
    return out


def icosian_group() -> FiniteGroup:
    """The 120 unit icosians, verified multiplicatively closed."""
    units = _unit_icosians()
    if len(units) != 120:
        raise GroupError(f"expected 120 units, built {len(units)}")
    for u in units:
        if u.norm() != Q1:
            raise GroupError(f"non-unit quaternion {u!r}")
    return group_closure(units, bound=121, name="2I")


def icosian_involution_lemma() -> bool:
    """x^2 = 1 and x != 1 forces x = -1 among the unit icosians."""
    units = _unit_icosians()
    sols = [u for u in units if u * u == ICOSIAN_ONE]
    return sorted(u.key() for u in sols) == sorted(
        u.key() for u in (ICOSIAN_ONE, -ICOSIAN_ONE)
    )
