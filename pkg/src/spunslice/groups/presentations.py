"""Finitely presented groups from knot diagrams and their covers.

Words are tuples of nonzero signed integers: +i is generator i, -i its
inverse (generators are 1-based).  A presentation may mark some generators
as meridians (conjugates of a fixed meridian class); meridian-marked
generators all carry weight 1 in the abelianization, which the index-2
rewriting below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..diagrams import PDCode, PlatError, SymmetricUnion, build_embedding
from ..covers import wirtinger_relations
from .snf import AbelianInvariants, abelian_invariants

Word = tuple[int, ...]


def invert(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Word) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class GroupPresentation:
    """<x_1..x_n | relators>, optionally with meridian-marked generators."""

    n_generators: int
    relators: tuple[Word, ...]
    meridians: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > self.n_generators:
                    raise ValueError(f"relator letter {x} out of range")
        for m in self.meridians:
            if not 1 <= m <= self.n_generators:
                raise ValueError(f"meridian index {m} out of range")

    def abelianized_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.n_generators
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows

    def simplified(self) -> "GroupPresentation":
        """Free reduction plus removal of empty/duplicate relators."""
        seen = set()
        rels = []
        for r in self.relators:
            r2 = free_reduce(r)
            if not r2:
                continue
            # canonical form under cyclic rotation and inversion, for dedup only
            def rotations(w):
                return [w[i:] + w[:i] for i in range(len(w))]

            cands = rotations(r2) + rotations(invert(r2))
            key = min(cands)
            if key in seen:
                continue
            seen.add(key)
            rels.append(r2)
        return GroupPresentation(self.n_generators, tuple(rels), self.meridians)


def abelianization(pres: GroupPresentation) -> AbelianInvariants:
    return abelian_invariants(pres.abelianized_matrix(), pres.n_generators)


def wirtinger(pd: PDCode) -> GroupPresentation:
    """Wirtinger presentation of the knot group from a PD code.

    One generator per arc (all meridians), one relator per crossing:
    x_over^s x_in x_over^-s x_out^-1 with s the crossing sign.  The
    0-crossing unknot gives <x_1 | >.
    """
    if not pd.crossings:
        return GroupPresentation(1, (), frozenset({1}))
    ngen, _arc, relations = wirtinger_relations(pd)
    relators = []
    for over, s, ain, cout in relations:
        o = over + 1
        relators.append((s * o, ain + 1, -s * o, -(cout + 1)))
    return GroupPresentation(ngen, tuple(relators), frozenset(range(1, ngen + 1)))


def cobordism_presentation(su: SymmetricUnion) -> GroupPresentation:
    """Fundamental group of the twist-cobordism complement.

    Start from the Wirtinger presentation of the untwisted union (the
    connected sum with the mirror image) and add, for every twisted bridge
    region j (bridge 1 included), one relator x_a x_b^-1 identifying the
    meridians of the two strands that meet at the region's first twist
    crossing -- one from the base copy and one from the mirror copy.
    """
    emb = build_embedding(su.untwisted)
    pres = wirtinger(emb.pd)
    extra = []
    for site in sorted(su.sites, key=lambda s: s.bridge):
        if site.half_twists == 0:
            continue
        ca, cb = site.columns
        arc_a = emb.arc_at(site.index0, ca)
        arc_b = emb.arc_at(site.index0, cb)
        extra.append((arc_a, -arc_b))
    return GroupPresentation(
        pres.n_generators, pres.relators + tuple(extra), pres.meridians
    )


# ---------------------------------------------------------------------------
# text format: `gens N`, then one relator per line of signed indices


def format_presentation(pres: GroupPresentation) -> str:
    lines = [f"gens {pres.n_generators}"]
    if pres.meridians:
        lines.append("meridians " + " ".join(str(m) for m in sorted(pres.meridians)))
    lines.extend(" ".join(str(x) for x in r) for r in pres.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> GroupPresentation:
    ngen = None
    meridians: frozenset[int] = frozenset()
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "gens":
            if ngen is not None:
                raise PlatError(f"line {lineno}: duplicate gens line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise PlatError(f"line {lineno}: expected 'gens N'")
            ngen = int(parts[1])
            continue
        if ngen is None:
            raise PlatError(f"line {lineno}: 'gens N' must come first")
        if parts[0] == "meridians":
            meridians = frozenset(int(p) for p in parts[1:])
            continue
        try:
            word = tuple(int(p) for p in parts)
        except ValueError:
            raise PlatError(f"line {lineno}: bad relator letter") from None
        if any(x == 0 for x in word):
            raise PlatError(f"line {lineno}: generator index 0 is invalid")
        relators.append(word)
    if ngen is None:
        raise PlatError("missing 'gens N' line")
    return GroupPresentation(ngen, tuple(relators), meridians)


# ---------------------------------------------------------------------------
# index-2 rewriting


def _rewrite_index2(word: Word, start: int, gen_map) -> tuple[Word, int]:
    """Rewrite a word through the index-2 subgroup with transversal {1, m}.

    gen_map(i, coset) gives the subgroup generator index (or 0 for the
    dropped trivial one) of x_i entering at the given coset.  Returns the
    rewritten word and the ending coset.
    """
    out: list[int] = []
    u = start
    for x in word:
        i = abs(x)
        if x > 0:
            g = gen_map(i, u)
            if g:
                out.append(g)
            u ^= 1
        else:
            v = u ^ 1
            g = gen_map(i, v)
            if g:
                out.append(-g)
            u = v
    return tuple(out), u


def reidemeister_schreier_index2(pres: GroupPresentation):
    """Presentation of the kernel of the onto-Z/2 map sending meridians to 1.

    Requires every generator to be meridian-marked (weight 1), so the map
    x_i -> 1 in Z/2 is well defined on all relators.  Uses the Schreier
    transversal {1, x_1}.  Subgroup generators: a_i = x_i x_1^-1 entering at
    coset 0 (a_1 trivial, dropped) and b_i = x_1 x_i entering at coset 1.

    Returns (presentation, meridian_square_words) where the k-th entry of
    meridian_square_words is the rewritten word of x_k^2, ready to serve as
    a branch relator.
    """
    if pres.meridians != frozenset(range(1, pres.n_generators + 1)):
        raise PlatError("index-2 rewriting needs all generators meridian-marked")
    n = pres.n_generators
    for r in pres.relators:
        if sum(1 if x > 0 else -1 for x in r) % 2:
            raise PlatError("relator has odd meridian weight; no onto-Z/2 map")

    # subgroup generator numbering: a_i (i >= 2) -> i - 1, b_i -> n - 1 + i
    def gen_map(i: int, coset: int) -> int:
        if coset == 0:
            return 0 if i == 1 else i - 1
        return n - 1 + i

    new_relators = []
    for r in pres.relators:
        for start in (0, 1):
            w, end = _rewrite_index2(r, start, gen_map)
            if end != start:
                raise PlatError("relator left the subgroup; inconsistent weights")
            w = free_reduce(w)
            if w:
                new_relators.append(w)
    squares = []
    for i in range(1, n + 1):
        w, end = _rewrite_index2((i, i), 0, gen_map)
        if end != 0:
            raise PlatError("meridian square left the subgroup")
        squares.append(free_reduce(w))
    sub = GroupPresentation(2 * n - 1, tuple(new_relators))
    return sub, tuple(squares)


def branched_cover_presentation(pres: GroupPresentation) -> GroupPresentation:
    """pi_1 of the double cover branched over the knot.

    The unbranched index-2 presentation plus one relator per meridian
    square (the branching fills the lifted meridian annuli with discs).
    """
    sub, squares = reidemeister_schreier_index2(pres)
    return GroupPresentation(
        sub.n_generators, sub.relators + tuple(w for w in squares if w)
    ).simplified()
