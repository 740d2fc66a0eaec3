"""Plat presentations of knots and their planar diagram data.

A plat word on 2b strands is a braid word whose plat closure (caps joining
strands (1,2), (3,4), ... at top and bottom) is a knot or link.  This module
validates plat words, converts them to PD codes with a fixed orientation and
sign convention, extracts the chord diagram of the associated (1,1)-tangle,
and builds the diagrams of twisted mirror doubles ("symmetric unions").

Conventions used throughout:

* Braid letters act top-to-bottom.  The letter (k, +1) crosses strands in
  columns k and k+1 with the NW-SE strand passing over; (k, -1) has the
  NE-SW strand passing over.
* PD tuples are (a, b, c, d, sign): the four edge labels counterclockwise
  around the crossing starting from the incoming under-edge a, so c is the
  outgoing under-edge.  sign = +1 exactly when the over-strand runs d -> b.
* Orientation and edge labels come from traversing the knot starting inside
  the leftmost top cap, leaving through its right half (down column 2).
* The (1,1)-tangle of a plat is the knot cut open inside top cap 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class PlatError(ValueError):
    """Raised for structurally invalid plat words or closures."""


# ---------------------------------------------------------------------------
# core value types


@dataclass(frozen=True)
class PlatWord:
    """A braid word on an even number of strands, read top to bottom."""

    strands: int
    word: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 2 or self.strands % 2:
            raise PlatError("strand count must be even and >= 2")
        for k, s in self.word:
            if not 1 <= k <= self.strands - 1:
                raise PlatError(f"generator index {k} out of range 1..{self.strands - 1}")
            if s not in (-1, 1):
                raise PlatError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "word", tuple((int(k), int(s)) for k, s in self.word))

    @property
    def bridges(self) -> int:
        return self.strands // 2

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class PDCode:
    """Planar diagram code: crossings as (a, b, c, d, sign) tuples.

    Edge labels run 1..2n and each label occurs exactly twice across all
    tuples.  The empty code is the 0-crossing unknot diagram.
    """

    crossings: tuple[tuple[int, int, int, int, int], ...]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)

    def validate(self):
        """Check the label-multiset and connectivity invariants."""
        counts: dict[int, int] = {}
        for tup in self.crossings:
            a, b, c, d, s = tup
            if s not in (-1, 1):
                raise PlatError(f"crossing sign must be +-1 in {tup}")
            for e in (a, b, c, d):
                counts[e] = counts.get(e, 0) + 1
        if not self.crossings:
            return
        labels = sorted(counts)
        if labels != list(range(1, self.n_edges + 1)):
            raise PlatError("edge labels must be exactly 1..2n")
        if any(v != 2 for v in counts.values()):
            bad = [e for e, v in counts.items() if v != 2]
            raise PlatError(f"edge labels {bad} do not occur exactly twice")
        # connectivity of the 4-valent graph via shared edges
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        owner: dict[int, int] = {}
        for i, (a, b, c, d, _s) in enumerate(self.crossings):
            for e in (a, b, c, d):
                if e in owner:
                    ra, rb = find(owner[e]), find(i)
                    if ra != rb:
                        parent[ra] = rb
                else:
                    owner[e] = i
        roots = {find(i) for i in range(len(self.crossings))}
        if len(roots) != 1:
            raise PlatError("diagram graph is disconnected")


@dataclass(frozen=True)
class ChordDiagram:
    """Chord diagram of a (1,1)-tangle: marked points 1..2n on an interval.

    chords[i] = (a, b) where a is the endpoint at which the tangle core
    passes over and b where it passes under; signs[i] is the crossing sign.
    """

    n: int
    chords: tuple[tuple[int, int], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        seen = sorted(p for ch in self.chords for p in ch)
        if seen != list(range(1, 2 * self.n + 1)):
            raise PlatError("chord endpoints must partition 1..2n")
        if len(self.signs) != self.n:
            raise PlatError("need one sign per chord")

    def interleaves(self, i: int, j: int) -> bool:
        """True when chords i and j cross (endpoints strictly interleave)."""
        a, b = sorted(self.chords[i])
        c, d = sorted(self.chords[j])
        return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class TwistVector:
    """Integer half-twist counts, one per bridge (top cap) of a plat."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(t) for t in self.entries))

    def require_even(self):
        for j, t in enumerate(self.entries, start=1):
            if t % 2:
                raise PlatError(
                    f"twist entry t_{j} = {t} is odd; only the even family is supported"
                )

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class PlatDiagram:
    """A validated plat word plus its strand permutation and component count."""

    plat: PlatWord
    permutation: tuple[int, ...]  # permutation[c-1] = column where top-column c exits
    components: int


def strand_permutation(plat: PlatWord) -> tuple[int, ...]:
    pos = list(range(plat.strands))  # pos[i] = current column (0-based) of strand i
    col = list(range(plat.strands))  # inverse
    for k, _s in plat.word:
        a, b = col[k - 1], col[k]
        col[k - 1], col[k] = b, a
        pos[a], pos[b] = k, k - 1
    # strand entering at top column c exits at bottom column pos[c]
    return tuple(p + 1 for p in pos)


def closure_components(plat: PlatWord) -> int:
    perm = strand_permutation(plat)
    n = plat.strands
    seen = [False] * (n + 1)
    comps = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        comps += 1
        c = start
        while not seen[c]:
            seen[c] = True
            d = perm[c - 1]  # follow strand down
            d = d + 1 if d % 2 else d - 1  # bottom cap
            e = perm.index(d) + 1  # back up the strand ending there
            seen[e] = True
            c = e + 1 if e % 2 else e - 1  # top cap
    return comps


def validate_plat(plat: PlatWord) -> PlatDiagram:
    """Check the closure is a knot; reject links naming the component count."""
    comps = closure_components(plat)
    if comps != 1:
        raise PlatError(f"plat closure has {comps} components, expected a knot (1)")
    return PlatDiagram(plat, strand_permutation(plat), comps)


def mirror(plat: PlatWord) -> PlatWord:
    """Mirror image: reversed word with all letter signs inverted."""
    return PlatWord(plat.strands, tuple((k, -s) for k, s in reversed(plat.word)))


# ---------------------------------------------------------------------------
# planar embedding sweep
#
# The sweep walks the word top to bottom maintaining, per column, the open
# strand hanging there.  Wires record maximal diagram edges between crossing
# ports (caps are interior to wires and remembered in `vias`).

_DIAG = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
_CCW = ("NE", "NW", "SW", "SE")  # counterclockwise port order at a crossing


@dataclass
class _Wire:
    ends: list  # [(port, column), (port, column)]
    vias: list  # cap markers ('top', j) / ('bot', i) the wire runs through


@dataclass
class Embedding:
    """Planar data for a plat diagram: wires, ports, and a knot traversal."""

    plat: PlatWord
    wires: list = field(default_factory=list)
    port_wire: dict = field(default_factory=dict)
    snapshots: list = field(default_factory=list)  # dangling state before each letter
    edge_order: list = field(default_factory=list)  # wire index per traversal label
    edge_label: dict = field(default_factory=dict)  # wire index -> 1-based label
    passages: list = field(default_factory=list)  # (crossing, enter_port, exit_port)
    pd: PDCode | None = None
    edge_arc: dict = field(default_factory=dict)  # edge label -> arc id (1-based)

    def cap_edge_label(self, which: str, j: int) -> int:
        for wi, w in enumerate(self.wires):
            if (which, j) in w.vias:
                return self.edge_label[wi]
        raise PlatError(f"no wire through cap ({which}, {j})")

    def wire_at(self, letter_index: int, column: int) -> int:
        """Wire index of the strand hanging at `column` just before letter_index."""
        state = self.snapshots[letter_index]
        kind, val = state[column - 1]
        if kind == "term":
            return self.port_wire[val[0]]
        # untouched cap column: the wire through that top cap
        j = val
        for wi, w in enumerate(self.wires):
            if ("top", j) in w.vias:
                return wi
        raise PlatError("dangling column resolves to no wire")

    def arc_at(self, letter_index: int, column: int) -> int:
        wi = self.wire_at(letter_index, column)
        return self.edge_arc[self.edge_label[wi]]


def _sweep(plat: PlatWord) -> Embedding:
    emb = Embedding(plat)
    S = plat.strands
    # dangling[c] = ('term', port) strand ends above at a crossing port, or
    #               ('peer', (other_col, vias)) still open through a top cap.
    dangling: list = [None] * (S + 1)
    for j in range(1, S // 2 + 1):
        left, right = 2 * j - 1, 2 * j
        dangling[left] = ("peer", (right, [("top", j)]))
        dangling[right] = ("peer", (left, [("top", j)]))

    def snapshot():
        out = []
        for c in range(1, S + 1):
            kind, val = dangling[c]
            if kind == "term":
                out.append(("term", val))
            else:
                out.append(("cap", val[1][0][1]))  # top cap index
        return tuple(out)

    def close(term_a, col_a, term_b, col_b, vias):
        wi = len(emb.wires)
        emb.wires.append(_Wire([(term_a, col_a), (term_b, col_b)], list(vias)))
        for t in (term_a, term_b):
            if t is not None:
                emb.port_wire[t] = wi

    def consume(col, port):
        kind, val = dangling[col]
        dangling[col] = None
        if kind == "term":
            prev_port, prev_col, vias = val
            close(prev_port, prev_col, port, col, vias)
        else:
            other, vias = val
            dangling[other] = ("term", (port, col, vias))

    for idx, (k, _s) in enumerate(plat.word):
        emb.snapshots.append(snapshot())
        consume(k, (idx, "NW"))
        consume(k + 1, (idx, "NE"))
        dangling[k] = ("term", ((idx, "SW"), k, []))
        dangling[k + 1] = ("term", ((idx, "SE"), k + 1, []))
    emb.snapshots.append(snapshot())

    for i in range(1, S // 2 + 1):
        left, right = 2 * i - 1, 2 * i
        a, b = dangling[left], dangling[right]
        if a is None or b is None:
            raise PlatError("internal sweep error")
        if a[0] == "peer" and b[0] == "peer":
            ac, avias = a[1]
            if ac == right:
                raise PlatError("closed split circle in plat (link, not knot)")
            bc, bvias = b[1]
            merged = avias + [("bot", i)] + bvias
            dangling[ac] = ("peer", (bc, merged))
            dangling[bc] = ("peer", (ac, merged))
        elif a[0] == "peer":
            ac, avias = a[1]
            bp, bcol, bvias = b[1]
            dangling[ac] = ("term", (bp, bcol, bvias + [("bot", i)] + avias))
        elif b[0] == "peer":
            bc, bvias = b[1]
            ap, acol, avias = a[1]
            dangling[bc] = ("term", (ap, acol, avias + [("bot", i)] + bvias))
        else:
            ap, acol, avias = a[1]
            bp, bcol, bvias = b[1]
            close(ap, acol, bp, bcol, avias + [("bot", i)] + bvias)
        dangling[left] = dangling[right] = None
    return emb


def _traverse(emb: Embedding):
    """Orient the knot and label wires 1..2n in traversal order."""
    plat = emb.plat
    if not plat.word:
        return
    start = None
    for wi, w in enumerate(emb.wires):
        if ("top", 1) in w.vias:
            start = wi
            break
    if start is None:
        raise PlatError("no wire through top cap 1")
    # leave the cut through the right half of cap 1: head for the end that
    # consumed the higher column among the wire's two cap-adjacent ends
    (pa, ca), (pb, cb) = emb.wires[start].ends
    first_port = pa if ca > cb else pb

    emb.edge_label[start] = 1
    emb.edge_order.append(start)
    port = first_port
    n2 = 2 * len(plat.word)
    for _step in range(n2):
        ci, corner = port
        exit_corner = _DIAG[corner]
        exit_port = (ci, exit_corner)
        emb.passages.append((ci, port, exit_port))
        nwire = emb.port_wire[exit_port]
        if nwire == start:
            break
        emb.edge_label[nwire] = len(emb.edge_order) + 1
        emb.edge_order.append(nwire)
        (pa, ca), (pb, cb) = emb.wires[nwire].ends
        port = pb if pa == exit_port else pa
    if len(emb.passages) != n2:
        raise PlatError("traversal did not close after visiting every crossing twice")


def _build_pd(emb: Embedding):
    plat = emb.plat
    if not plat.word:
        emb.pd = PDCode(())
        return
    enter_at: dict[tuple[int, str], int] = {}  # port -> traversal time (1-based)
    for t, (_ci, pin, _pout) in enumerate(emb.passages, start=1):
        enter_at[pin] = t

    def label_of(port):
        return emb.edge_label[emb.port_wire[port]]

    crossings = []
    for ci, (k, s) in enumerate(plat.word):
        over_pair = ("NW", "SE") if s == 1 else ("NE", "SW")
        under_pair = ("NE", "SW") if s == 1 else ("NW", "SE")
        under_in = next(c for c in under_pair if (ci, c) in enter_at)
        # CCW cycle starting at the incoming under corner
        i0 = _CCW.index(under_in)
        cyc = [_CCW[(i0 + t) % 4] for t in range(4)]
        a = label_of((ci, cyc[0]))
        b = label_of((ci, cyc[1]))
        c = label_of((ci, cyc[2]))
        d = label_of((ci, cyc[3]))
        over_in = next(cn for cn in over_pair if (ci, cn) in enter_at)
        sign = 1 if over_in == cyc[3] else -1
        crossings.append((a, b, c, d, sign))
    emb.pd = PDCode(tuple(crossings))

    # Wirtinger arcs: merge the two over-edges at every crossing
    n_edges = emb.pd.n_edges
    parent = list(range(n_edges + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d, _s in emb.pd.crossings:
        ra, rb = find(b), find(d)
        if ra != rb:
            parent[ra] = rb
    reps: dict[int, int] = {}
    for e in range(1, n_edges + 1):
        r = find(e)
        if r not in reps:
            reps[r] = len(reps) + 1
        emb.edge_arc[e] = reps[r]


def build_embedding(plat: PlatWord) -> Embedding:
    """Full planar bookkeeping for a validated plat: wires, PD, arcs."""
    validate_plat(plat)
    if not plat.word:
        emb = Embedding(plat)
        emb.pd = PDCode(())
        return emb
    emb = _sweep(plat)
    _traverse(emb)
    _build_pd(emb)
    return emb


def plat_to_pd(plat: PlatWord) -> PDCode:
    """PD code of the plat closure (empty word gives the 0-crossing unknot)."""
    return build_embedding(plat).pd


# ---------------------------------------------------------------------------
# chord diagram of the cut-open tangle


def chord_diagram_of_tangle(plat: PlatWord) -> ChordDiagram:
    """Chord diagram of the (1,1)-tangle obtained by cutting inside top cap 1.

    Endpoints 1..2n are the crossing passages in traversal order; each chord
    pairs the over and under passage of one crossing, over endpoint first.
    """
    emb = build_embedding(plat)
    if not plat.word:
        return ChordDiagram(0, (), ())
    over_time: dict[int, int] = {}
    under_time: dict[int, int] = {}
    for t, (ci, pin, _pout) in enumerate(emb.passages, start=1):
        k, s = plat.word[ci]
        over_pair = ("NW", "SE") if s == 1 else ("NE", "SW")
        if pin[1] in over_pair:
            over_time[ci] = t
        else:
            under_time[ci] = t
    chords = []
    signs = []
    for ci in range(len(plat.word)):
        chords.append((over_time[ci], under_time[ci]))
        signs.append(emb.pd.crossings[ci][4])
    return ChordDiagram(len(plat.word), tuple(chords), tuple(signs))


def bridge_regions(plat: PlatWord) -> dict[int, int | None]:
    """Map bridge j -> decker annulus region index of its cap arc.

    Bridge 1 carries the cut and corresponds to the two polar discs, so it
    has no annulus; it maps to None.
    """
    emb = build_embedding(plat)
    out: dict[int, int | None] = {1: None}
    for j in range(2, plat.bridges + 1):
        out[j] = emb.cap_edge_label("top", j) - 1
    return out


# ---------------------------------------------------------------------------
# symmetric unions (twisted mirror doubles)


@dataclass(frozen=True)
class BandSite:
    """Where band j's twist region lives in the doubled diagram.

    letter_index points at the first twist letter in the twisted word (or
    the insertion position when t_j = 0); columns are the two strand columns
    meeting at that first crossing -- the left column carries a mirror-copy
    strand and the right column a base-copy strand.  index0 is the matching
    position in the untwisted word.
    """

    bridge: int
    letter_index: int
    index0: int
    columns: tuple[int, int]
    half_twists: int


@dataclass(frozen=True)
class SymmetricUnion:
    """Result of doubling a plat with per-bridge twist regions."""

    base: PlatWord
    tv: TwistVector
    knot: PlatWord
    untwisted: PlatWord
    sites: tuple[BandSite, ...]


def _pair_move_right(c: int) -> list[tuple[int, int]]:
    # slide a turnback pair from (c, c+1) one column right, passing under
    return [(c + 1, -1), (c, -1)]


def _pair_move_left(c: int) -> list[tuple[int, int]]:
    # slide a turnback pair from (c, c+1) one column left, passing under
    return [(c - 1, 1), (c, 1)]


def _pair_pass_right(c: int) -> list[tuple[int, int]]:
    # pair at (c, c+1) passes under the pair at (c+2, c+3)
    return _pair_move_right(c) + _pair_move_right(c + 1)


def _pair_pass_left(c: int) -> list[tuple[int, int]]:
    # pair at (c, c+1) passes under the pair at (c-2, c-1)
    return _pair_move_left(c) + _pair_move_left(c - 1)


def _band_half_twist(c: int, s: int) -> list[tuple[int, int]]:
    """One half twist of the band whose edges are the turnbacks at
    (c, c+1) and (c+2, c+3): the two 2-cables cross coherently once.

    The two turnback pairs swap columns, so an even number of half twists
    returns them to their starting positions -- which is exactly why only
    even twist vectors yield well-formed unions here.
    """
    return [(c + 1, s), (c, s), (c + 2, s), (c + 1, s)]


def build_symmetric_union(plat: PlatWord, tv: TwistVector) -> SymmetricUnion:
    """Double the plat across a horizontal mirror and twist the bridge bands.

    The output plat on 4b-2 strands stacks the mirror image above the
    original.  The two copies are glued along the strands of top cap 1 (the
    cut).  For j >= 2 the two bridge-j turnbacks (the upper copy's dying cap
    and the lower copy's born cap) are the edges of one band of the standard
    ribbon disc of the untwisted union; t_j half-twists of that band wind
    the two turnbacks around each other coherently t_j times while they are
    adjacent, after which both are routed to the plat boundary.  t_1
    half-twists go on the gluing strands instead (the cut band).  With
    tv = 0 this is the plain mirror-double diagram of the connected sum
    with the mirror image.
    """
    validate_plat(plat)
    if len(tv) != plat.bridges:
        raise PlatError(
            f"twist vector length {len(tv)} != bridge count {plat.bridges}"
        )
    tv.require_even()
    b = plat.bridges
    S = 4 * b - 2

    def assemble(twists: TwistVector):
        word: list[tuple[int, int]] = []
        sites: dict[int, tuple[int, tuple[int, int]]] = {}
        word.extend((k, -s) for k, s in reversed(plat.word))
        # conveyor: for each bridge j = 2..b bring the lower copy's cap pair
        # (parked at the extra columns) next to the upper copy's dying pair,
        # twist, then park the dying pair on the right.
        for j in range(2, b + 1):
            # incoming pair starts at (2b+1, 2b+2) and walks left to (2j+1, 2j+2)
            pos = 2 * b + 1
            while pos > 2 * j + 1:
                word.extend(_pair_pass_left(pos))
                pos -= 2
            sites[j] = (len(word), (2 * j, 2 * j + 1))
            t = twists.entries[j - 1]
            s = -1 if t > 0 else 1
            for _ in range(abs(t)):
                word.extend(_band_half_twist(2 * j - 1, s))
            # dying pair at (2j-1, 2j) passes the incoming pair, then keeps
            # going right past everything still waiting, and parks at
            # columns (S - 2j + 3, S - 2j + 4).
            pos = 2 * j - 1
            while pos < S - 2 * j + 3:
                word.extend(_pair_pass_right(pos))
                pos += 2
        sites[1] = (len(word), (1, 2))
        # same handedness convention as the band gadget: positive twists
        # cross with the NE-SW strand on top
        t1 = twists.entries[0]
        word.extend((1, -1 if t1 > 0 else 1) for _ in range(abs(t1)))
        word.extend(plat.word)
        return word, sites

    zero = TwistVector((0,) * b)
    word_t, sites_t = assemble(tv)
    word_0, sites_0 = assemble(zero)
    knot = PlatWord(S, tuple(word_t))
    untwisted = PlatWord(S, tuple(word_0))
    validate_plat(knot)
    validate_plat(untwisted)
    band_sites = tuple(
        BandSite(
            bridge=j,
            letter_index=sites_t[j][0],
            index0=sites_0[j][0],
            columns=sites_t[j][1],
            half_twists=tv.entries[j - 1],
        )
        for j in sorted(sites_t)
    )
    return SymmetricUnion(plat, tv, knot, untwisted, band_sites)


# ---------------------------------------------------------------------------
# plat text format


def parse_plat(text: str) -> PlatWord:
    """Parse the plat file format: `strands N` then one `g<k> +|-` per line."""
    strands = None
    word: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "strands":
            if strands is not None:
                raise PlatError(f"line {ln}: duplicate strands line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise PlatError(f"line {ln}: expected 'strands N'")
            strands = int(parts[1])
            continue
        if strands is None:
            raise PlatError(f"line {ln}: 'strands N' must come first")
        if len(parts) != 2 or not parts[0].startswith("g"):
            raise PlatError(f"line {ln}: expected 'g<k> +|-'")
        try:
            k = int(parts[0][1:])
        except ValueError:
            raise PlatError(f"line {ln}: bad generator {parts[0]!r}") from None
        if parts[1] not in ("+", "-"):
            raise PlatError(f"line {ln}: sign must be + or -")
        word.append((k, 1 if parts[1] == "+" else -1))
    if strands is None:
        raise PlatError("missing 'strands N' line")
    return PlatWord(strands, tuple(word))


def format_plat(plat: PlatWord) -> str:
    lines = [f"strands {plat.strands}"]
    lines.extend(f"g{k} {'+' if s == 1 else '-'}" for k, s in plat.word)
    return "\n".join(lines) + "\n"
