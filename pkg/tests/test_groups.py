"""Presentations, coset enumeration, finite-group structure, hom counting.

The third determinant route lives here: |H1| of the branched double cover
via subgroup rewriting plus Smith normal form must agree with the two
diagrammatic routes from test_covers.py.
"""

import pytest
from hypothesis import given, settings, strategies as st

from conftest import DETERMINANTS, FIG8, T35, TREFOIL, UNKNOT
from spunslice.diagrams import (
    PlatError,
    PlatWord,
    TwistVector,
    build_symmetric_union,
    plat_to_pd,
)
from spunslice.groups import (
    FiniteGroup,
    GroupPresentation,
    abelianization,
    alternating_group,
    branched_cover_presentation,
    cobordism_presentation,
    collapse_check,
    cyclic_group,
    elementary_divisors,
    format_presentation,
    hom_count,
    hom_count_brute,
    icosian_group,
    icosian_involution_lemma,
    iso_check,
    parse_presentation,
    regular_representation,
    reidemeister_schreier_index2,
    sl2_f5,
    sl2_f5_matrix_count,
    smith_normal_form,
    structure_report,
    su2_obstruction,
    symmetric_group,
    todd_coxeter,
    wirtinger,
)


@pytest.fixture(scope="module")
def trefoil_group():
    return wirtinger(plat_to_pd(TREFOIL))


@pytest.fixture(scope="module")
def battery():
    return [symmetric_group(3), alternating_group(4), symmetric_group(4), alternating_group(5)]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def test_elementary_divisors_frozen_example():
    assert elementary_divisors([[2, 4], [4, 2]]) == ((2, 6), 2)


def test_smith_normal_form_transforms_multiply_out():
    a = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    d, u, v = smith_normal_form(a, want_transforms=True)
    n = len(a)
    prod = [
        [sum(u[i][k] * a[k][l] * v[l][j] for k in range(n) for l in range(n)) for j in range(n)]
        for i in range(n)
    ]
    assert prod == [list(row) for row in d] or prod == [
        [d[i][j] for j in range(n)] for i in range(n)
    ]


@st.composite
def int_matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    return [
        [draw(st.integers(-6, 6)) for _ in range(cols)] for _ in range(rows)
    ]


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_divisor_chain_divides(matrix):
    divisors, rank = elementary_divisors(matrix)
    assert rank == len(divisors)
    assert all(d > 0 for d in divisors)
    for a, b in zip(divisors, divisors[1:]):
        assert b % a == 0


@settings(max_examples=60, deadline=None)
@given(int_matrices(), st.randoms(use_true_random=False))
def test_divisors_invariant_under_row_and_column_moves(matrix, rng):
    want = elementary_divisors(matrix)
    moved = [row[:] for row in matrix]
    for _ in range(4):
        if rng.random() < 0.5 and len(moved) > 1:
            i, j = rng.randrange(len(moved)), rng.randrange(len(moved))
            if i != j:
                c = rng.choice([-2, -1, 1, 2])
                moved[i] = [x + c * y for x, y in zip(moved[i], moved[j])]
        elif len(moved[0]) > 1:
            i, j = rng.randrange(len(moved[0])), rng.randrange(len(moved[0]))
            if i != j:
                c = rng.choice([-2, -1, 1, 2])
                for row in moved:
                    row[i] += c * row[j]
    assert elementary_divisors(moved) == want


# ---------------------------------------------------------------------------
# knot group presentations
# ---------------------------------------------------------------------------

def test_trefoil_wirtinger_shape(trefoil_group):
    w = trefoil_group
    assert w.n_generators == 3
    assert sorted(w.meridians) == [1, 2, 3]
    assert len(w.relators) == 3
    assert all(len(r) == 4 for r in w.relators)
    ab = abelianization(w)
    assert ab.free_rank == 1 and ab.torsion == ()


def test_index_two_subgroup_of_trefoil_group(trefoil_group):
    sub, _squares = reidemeister_schreier_index2(trefoil_group)
    assert sub.n_generators == 2 * trefoil_group.n_generators - 1
    ab = abelianization(sub)
    assert ab.free_rank == 1 and ab.torsion == (3,)


@pytest.mark.parametrize(
    "plat,torsion",
    [(UNKNOT, ()), (TREFOIL, (3,)), (FIG8, (5,)), (T35, ())],
    ids=["unknot", "trefoil", "fig8", "t35"],
)
def test_branched_cover_first_homology(plat, torsion):
    pres = branched_cover_presentation(wirtinger(plat_to_pd(plat)))
    ab = abelianization(pres)
    assert ab.free_rank == 0
    assert ab.torsion == torsion


def test_square_knot_branched_cover_homology():
    sq = build_symmetric_union(TREFOIL, TwistVector((0, 0))).knot
    ab = abelianization(branched_cover_presentation(wirtinger(plat_to_pd(sq))))
    assert ab.torsion == (3, 3)
    assert ab.order == 9


def test_third_determinant_route_matches_the_other_two():
    from spunslice.covers import goeritz_determinant

    for name in ("unknot", "kink", "trefoil", "figure8", "t25", "k5-2"):
        plat, det = DETERMINANTS[name]
        pd = plat_to_pd(plat)
        ab = abelianization(branched_cover_presentation(wirtinger(pd)))
        assert ab.order == det == goeritz_determinant(pd)


# ---------------------------------------------------------------------------
# presentation parsing
# ---------------------------------------------------------------------------

def test_presentation_round_trip(trefoil_group):
    assert parse_presentation(format_presentation(trefoil_group)) == trefoil_group


def test_presentation_parse_errors():
    with pytest.raises(PlatError, match="expected 'gens N'"):
        parse_presentation("gens a\nrels a5")
    with pytest.raises(PlatError, match="missing 'gens N' line"):
        parse_presentation("")
    with pytest.raises(PlatError, match="generator index 0"):
        parse_presentation("gens 2\n1 0 -2")
    with pytest.raises(PlatError, match="bad relator letter"):
        parse_presentation("gens 2\n1 x")


# ---------------------------------------------------------------------------
# coset enumeration
# ---------------------------------------------------------------------------

def test_cyclic_enumeration_completes():
    r = todd_coxeter(GroupPresentation(1, ((1, 1, 1, 1, 1),)))
    assert r.status == "complete" and r.complete
    assert r.index == 5


def test_binary_icosahedral_presentation_has_order_120():
    pres = GroupPresentation(
        2, ((1, 2, 1, 2, -1, -1, -1), (1, 1, 1, -2, -2, -2, -2, -2))
    )
    r = todd_coxeter(pres)
    assert r.complete and r.index == 120
    g = FiniteGroup(regular_representation(r), name="binary-icosahedral")
    assert g.order == 120
    assert len(g.involutions) == 1


def test_enumeration_of_an_infinite_index_subgroup_is_inconclusive(trefoil_group):
    # the trefoil group is infinite, so enumerating all cosets of the
    # trivial subgroup must exhaust any finite budget
    r = todd_coxeter(trefoil_group, max_cosets=50)
    assert r.status == "inconclusive"
    assert not r.complete
    assert r.index is None


def test_branched_torus_cover_is_the_binary_icosahedral_group():
    pres = branched_cover_presentation(wirtinger(plat_to_pd(T35)))
    r = todd_coxeter(pres, max_cosets=500_000)
    assert r.complete and r.index == 120
    cover = FiniteGroup(regular_representation(r), name="coverG")
    assert iso_check(cover, sl2_f5()) is not None
    assert structure_report(cover).perfect


# ---------------------------------------------------------------------------
# finite group structure
# ---------------------------------------------------------------------------

def test_standard_group_orders():
    assert symmetric_group(3).order == 6
    assert alternating_group(4).order == 12
    assert symmetric_group(4).order == 24
    assert alternating_group(5).order == 60
    assert cyclic_group(7).order == 7


def test_special_linear_group_structure():
    sl = sl2_f5()
    assert sl.order == 120
    assert sl2_f5_matrix_count() == 120
    rep = structure_report(sl)
    assert rep.involution_count == 1
    assert rep.center_order == 2
    assert rep.normal_subgroup_orders == (1, 2, 120)
    assert rep.perfect and not rep.simple
    assert len(rep.quotients) == 1
    quotient, _ = rep.quotients[0]
    assert quotient.order == 60
    assert iso_check(quotient, alternating_group(5)) is not None


def test_alternating_five_structure():
    rep = structure_report(alternating_group(5))
    assert rep.order == 60
    assert rep.simple and rep.perfect
    assert rep.involution_count == 15
    assert rep.quotients == ()


def test_su2_obstruction_verdicts():
    assert su2_obstruction(alternating_group(5)) == "no-nontrivial-rep"
    assert su2_obstruction(sl2_f5()) == "embeds-possible"
    assert su2_obstruction(cyclic_group(7)) == "embeds-possible"


def test_unit_quaternion_model():
    assert icosian_involution_lemma()
    icosian = icosian_group()
    assert icosian.order == 120
    assert len(icosian.involutions) == 1
    assert iso_check(icosian, sl2_f5()) is not None
    assert structure_report(icosian).class_sizes == structure_report(sl2_f5()).class_sizes


def test_iso_check_positive_result_is_an_isomorphism():
    g = symmetric_group(3)
    mapping = iso_check(g, g)
    assert mapping is not None
    assert sorted(mapping) == list(range(g.order))
    for a in range(g.order):
        for b in range(g.order):
            assert mapping[g.op(a, b)] == g.op(mapping[a], mapping[b])


def test_iso_check_rejects_nonisomorphic_groups():
    assert iso_check(symmetric_group(3), cyclic_group(6)) is None
    assert iso_check(alternating_group(4), cyclic_group(12)) is None


# ---------------------------------------------------------------------------
# homomorphism counting
# ---------------------------------------------------------------------------

def test_trefoil_hom_counts_match_brute_force(trefoil_group):
    g = symmetric_group(3)
    pruned = hom_count(trefoil_group, g)
    unpruned = hom_count(trefoil_group, g, prune_conjugacy=False)
    brute = hom_count_brute(trefoil_group, g)
    assert pruned.exact and pruned.count == 12
    assert unpruned.count == 12
    assert brute == 12


def test_trefoil_hom_counts_into_the_battery(trefoil_group, battery):
    counts = [hom_count(trefoil_group, g).count for g in battery]
    assert counts == [12, 36, 96, 360]


def test_hom_count_respects_its_node_budget(trefoil_group):
    hc = hom_count(trefoil_group, alternating_group(5), node_budget=10)
    assert hc.status == "inconclusive"
    assert hc.count is None


@settings(max_examples=20, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-2, 2).filter(lambda x: x != 0), min_size=1, max_size=4),
        min_size=0,
        max_size=2,
    )
)
def test_pruned_and_brute_hom_counts_agree(relators):
    pres = GroupPresentation(2, tuple(tuple(r) for r in relators))
    g = symmetric_group(3)
    assert hom_count(pres, g).count == hom_count_brute(pres, g)


# ---------------------------------------------------------------------------
# cobordism presentations and the collapse check
# ---------------------------------------------------------------------------

def test_zero_twist_cobordism_adds_no_relators(trefoil_group):
    su0 = build_symmetric_union(TREFOIL, TwistVector((0, 0)))
    cob = cobordism_presentation(su0)
    base = wirtinger(plat_to_pd(su0.untwisted))
    assert len(cob.relators) == len(base.relators)


def test_twisted_cobordism_adds_one_relator_per_band(trefoil_group):
    su = build_symmetric_union(TREFOIL, TwistVector((2, 2)))
    cob = cobordism_presentation(su)
    base = wirtinger(plat_to_pd(su.untwisted))
    assert len(cob.relators) - len(base.relators) == 2
    ab = abelianization(cob)
    assert ab.free_rank == 1 and ab.torsion == ()


def test_untwisted_trefoil_union_is_distinguished(trefoil_group, battery):
    su0 = build_symmetric_union(TREFOIL, TwistVector((0, 0)))
    rep = collapse_check(cobordism_presentation(su0), trefoil_group, battery)
    assert rep.verdict == "distinguished"
    assert rep.rows == (
        ("S3", 30, 12), ("A4", 132, 36), ("S4", 432, 96), ("A5", 2220, 360),
    )


def test_twisted_trefoil_union_collapses_consistently(trefoil_group, battery):
    su = build_symmetric_union(TREFOIL, TwistVector((2, 2)))
    rep = collapse_check(cobordism_presentation(su), trefoil_group, battery)
    assert rep.verdict == "consistent-collapse"
    assert rep.rows == (
        ("S3", 12, 12), ("A4", 36, 36), ("S4", 96, 96), ("A5", 360, 360),
    )


def test_collapse_check_reports_budget_exhaustion(trefoil_group, battery):
    su = build_symmetric_union(TREFOIL, TwistVector((2, 2)))
    rep = collapse_check(
        cobordism_presentation(su), trefoil_group, battery[:1], node_budget=10
    )
    assert rep.verdict == "inconclusive"
    assert rep.rows == (("S3", None, None),)
