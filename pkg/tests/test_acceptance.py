"""Acceptance criteria; the terminal summary prints one line per criterion."""

import random

import pytest

from conehodge import catalog
from conehodge.cone import (
    ConeSetup,
    c_invariant_closed_form,
    c_invariant_vanishing_route,
    hrh_invariant,
    intersection_cohomology_of_cone,
    invariant_report,
    local_cohomology_profile,
)
from conehodge.determinantal import (
    DeterminantalCase,
    QPolynomial,
    codim_and_lcdef,
    expected_codim,
    grid_cases,
    is_hypersurface_case,
    lcdef_gen_pos,
    local_cohomology_poly,
    ncci_locus,
    q_binomial,
    Family,
)
from conehodge.hodge import (
    ConnectivityError,
    DualityError,
    HodgeDiamond,
    LefschetzError,
    SymmetryError,
    lefschetz_kernel_by_summands,
    lefschetz_cokernel_by_summands,
    lefschetz_power_cokernel,
    lefschetz_power_kernel,
    primitive_decomposition,
    reconstruct_from_primitive,
    validate_diamond,
)
from conehodge.levels import INF, NEG, ExtendedLevel
from conehodge.lyubeznik import (
    c_from_table,
    classical_lyubeznik,
    hodge_lyubeznik_table,
    hrh_from_table,
    smooth_point_table,
)
from conehodge.verify import random_primitive

from oracles import cokernel_by_dimensions, ih_by_subtraction, kernel_by_dimensions

SWEEP = catalog.SWEEP_NAMES


def _cone(name, rank):
    diamond = catalog.get(name).diamond
    prim = primitive_decomposition(diamond)
    setup = ConeSetup.for_bundle(diamond.dim, rank)
    return diamond, prim, setup


def _nonzero(ih):
    return {j: hs.as_dict() for j, hs in ih.items() if not hs.is_zero()}


# -- 1 ------------------------------------------------------------------------------------


XYZW = [("p1xp1", 1), ("p1", 2)]


@pytest.mark.criterion(1, "xy-zw: both presentations agree exactly")
@pytest.mark.parametrize("name,rank", XYZW)
def test_xy_minus_zw_invariants(name, rank):
    diamond, prim, setup = _cone(name, rank)
    assert setup.n == 3
    inv = invariant_report(prim, setup)
    assert inv.lcdef == 0
    assert inv.c == INF
    assert inv.hrh == ExtendedLevel.finite(0)

    ih = intersection_cohomology_of_cone(prim, diamond, rank)
    assert _nonzero(ih.ih) == {0: {(0, 0): 1}, 2: {(1, 1): 1}}

    table = hodge_lyubeznik_table(prim, setup)
    assert table.entries == {(3, 3, 0, 0): 1}
    assert table.intersection_entries == {(1, -1, -1): 1, (3, 0, 0): 1}


@pytest.mark.criterion(1, "xy-zw: both presentations agree exactly")
def test_xy_minus_zw_presentations_identical():
    outs = []
    for name, rank in XYZW:
        diamond, prim, setup = _cone(name, rank)
        inv = invariant_report(prim, setup)
        table = hodge_lyubeznik_table(prim, setup)
        ih = intersection_cohomology_of_cone(prim, diamond, rank)
        outs.append((inv.lcdef, inv.c, inv.hrh, _nonzero(ih.ih), table.entries, table.intersection_entries))
    assert outs[0] == outs[1]


# -- 2 ------------------------------------------------------------------------------------


@pytest.mark.criterion(2, "route agreement for c and HRH over the catalog sweep")
@pytest.mark.parametrize("name", SWEEP)
def test_route_agreement(name):
    diamond = catalog.get(name).diamond
    prim = primitive_decomposition(diamond)
    for delta in (0, 1, 2):
        for q in (1, 2):
            setup = ConeSetup(diamond.dim, delta, q)
            closed = c_invariant_closed_form(prim, setup).level
            vanishing = c_invariant_vanishing_route(prim, setup).level
            table = hodge_lyubeznik_table(prim, setup)
            assert closed == vanishing == c_from_table(table), (name, delta, q)
            hrh = hrh_invariant(prim, setup, closed)
            assert hrh == hrh_from_table(table, closed), (name, delta, q)


# -- 3 ------------------------------------------------------------------------------------


@pytest.mark.criterion(3, "Lefschetz kernel/cokernel closed forms equal brute force")
@pytest.mark.parametrize("name", SWEEP)
def test_lefschetz_oracle(name):
    diamond = catalog.get(name).diamond
    prim = primitive_decomposition(diamond)
    d = diamond.dim
    for j in range(1, 2 * d + 3):
        for c in range(1, d + 2):
            ker = lefschetz_power_kernel(prim, j, c)
            cok = lefschetz_power_cokernel(prim, j, c)
            assert ker == lefschetz_kernel_by_summands(prim, j, c)
            assert cok == lefschetz_cokernel_by_summands(prim, j, c)
            assert ker[d + c - j].as_dict() == kernel_by_dimensions(diamond, j, c), (j, c)
            assert cok[d - c + j].as_dict() == cokernel_by_dimensions(diamond, j, c), (j, c)


# -- 4 ------------------------------------------------------------------------------------


@pytest.mark.criterion(4, "CCI inequality never violated; P^3 rank 2 is sharp")
@pytest.mark.parametrize("name", SWEEP)
def test_inequality_never_violated(name):
    diamond = catalog.get(name).diamond
    prim = primitive_decomposition(diamond)
    for delta in (0, 1, 2):
        for q in (1, 2):
            inv = invariant_report(prim, ConeSetup(diamond.dim, delta, q))
            if inv.c >= ExtendedLevel.finite(0) and not inv.ncci_codim.is_inf:
                assert inv.lcdef_gen_pos + 2 * inv.c.value + 3 <= inv.ncci_codim.value
            assert inv.inequality_verdict != "violated"


@pytest.mark.criterion(4, "CCI inequality never violated; P^3 rank 2 is sharp")
def test_inequality_sharp_for_p3_rank_two():
    _, prim, setup = _cone("p3", 2)
    inv = invariant_report(prim, setup)
    assert (inv.lcdef_gen_pos, inv.c, inv.ncci_codim) == (2, ExtendedLevel.finite(0), ExtendedLevel.finite(5))
    assert inv.lcdef_gen_pos + 2 * inv.c.value + 3 == 5 == setup.n
    assert inv.inequality_verdict == "holds"


# -- 5 ------------------------------------------------------------------------------------


@pytest.mark.criterion(5, "determinantal polynomials, hypersurface branches, grid sweep")
def test_generic_three_by_three_rank_one():
    case = DeterminantalCase.generic(3, 3, 1)
    poly = local_cohomology_poly(case)
    assert poly.terms() == {
        0: QPolynomial({4: 1, 6: 1}),
        1: QPolynomial({4: 1}),
    }
    assert codim_and_lcdef(case) == (4, 2)
    assert lcdef_gen_pos(case) == 2 == 3 + 3 - 2 - 2


@pytest.mark.criterion(5, "determinantal polynomials, hypersurface branches, grid sweep")
@pytest.mark.parametrize(
    "case",
    [DeterminantalCase.generic(n, n, n - 1) for n in (2, 3, 4, 5)]
    + [DeterminantalCase.skew(2 * m, m - 1) for m in (2, 3, 4)]
    + [DeterminantalCase.symmetric(n, n - 1) for n in (3, 4, 5, 6)],
    ids=lambda c: c.label(),
)
def test_hypersurface_branches(case):
    assert is_hypersurface_case(case)
    _, lcdef = codim_and_lcdef(case)
    assert lcdef == 0
    assert lcdef_gen_pos(case) == 0
    assert ncci_locus(case) is None


@pytest.mark.criterion(5, "determinantal polynomials, hypersurface branches, grid sweep")
def test_determinantal_grid():
    seen = 0
    for case in grid_cases():
        poly = local_cohomology_poly(case)
        assert poly.min_degree() == expected_codim(case), case.label()
        if case.family is Family.SYMMETRIC and case.p < 2:
            continue
        _, lcdef = codim_and_lcdef(case)
        assert lcdef_gen_pos(case) <= lcdef, case.label()
        seen += 1
    assert seen == 35 + 12 + 10  # generic, skew, symmetric with p >= 2


# -- 6 ------------------------------------------------------------------------------------


@pytest.mark.criterion(6, "cones over P^n via O(d) degenerate to the smooth-point table")
@pytest.mark.parametrize("name", ["p1", "p2", "p3", "p4"])
def test_projective_space_cone(name):
    diamond, prim, setup = _cone(name, 1)
    table = hodge_lyubeznik_table(prim, setup)
    assert table.entries == smooth_point_table(setup.n).entries
    assert table.intersection_entries == {(setup.n, 0, 0): 1}
    inv = invariant_report(prim, setup)
    assert inv.c == INF and inv.hrh == INF
    ih = intersection_cohomology_of_cone(prim, diamond, 1)
    assert _nonzero(ih.ih) == {0: {(0, 0): 1}}


# -- 7 ------------------------------------------------------------------------------------


@pytest.mark.criterion(7, "elliptic cone: HRH neg, c inf, top weight piece of type (2,1)+(1,2)")
def test_elliptic_cone():
    _, prim, setup = _cone("elliptic", 1)
    inv = invariant_report(prim, setup)
    assert inv.hrh == NEG
    assert inv.c == INF
    profile = local_cohomology_profile(prim, setup)
    top = profile.topweight_untwisted
    assert top.weight == 3
    assert top.total() == 2
    assert top.as_dict() == {(2, 1): 1, (1, 2): 1}
    # the ambient twist q = 1 moves it to weight 5
    assert profile.topweight_H0.as_dict() == {(3, 2): 1, (2, 3): 1}


# -- 8 ------------------------------------------------------------------------------------


@pytest.mark.criterion(8, "validation, primitive roundtrip, q-binomial shape")
@pytest.mark.parametrize(
    "err,numbers",
    [
        (DualityError, {(0, 0): 1, (1, 1): 2, (2, 2): 0}),
        (LefschetzError, {(0, 0): 1, (1, 1): 0, (2, 2): 1}),
        (SymmetryError, {(0, 0): 1, (1, 1): 2, (2, 0): 1, (2, 2): 1}),
        (ConnectivityError, {(0, 0): 2, (1, 1): 2, (2, 2): 2}),
    ],
    ids=["duality", "lefschetz", "symmetry", "connectivity"],
)
def test_validation_catches_injected_violation(err, numbers):
    with pytest.raises(err):
        validate_diamond(HodgeDiamond.from_numbers(2, numbers))


@pytest.mark.criterion(8, "validation, primitive roundtrip, q-binomial shape")
def test_primitive_roundtrip_randomized():
    rng = random.Random(1234)
    for _ in range(200):
        prim = random_primitive(rng, max_dim=5)
        diamond = validate_diamond(reconstruct_from_primitive(prim))
        assert primitive_decomposition(diamond) == prim


@pytest.mark.criterion(8, "validation, primitive roundtrip, q-binomial shape")
def test_q_binomial_symmetric_and_unimodal():
    for a in range(13):
        for b in range(a + 1):
            coeffs = [q_binomial(a, b)[e] for e in range(b * (a - b) + 1)]
            assert coeffs == coeffs[::-1]
            peak = coeffs.index(max(coeffs))
            assert coeffs[: peak + 1] == sorted(coeffs[: peak + 1])
            assert coeffs[peak:] == sorted(coeffs[peak:], reverse=True)


# -- supporting oracles ---------------------------------------------------------------------


@pytest.mark.criterion(1, "xy-zw: both presentations agree exactly")
def test_xy_minus_zw_ih_matches_subtraction_oracle():
    for name, rank in XYZW:
        diamond, prim, _ = _cone(name, rank)
        assert _nonzero(intersection_cohomology_of_cone(prim, diamond, rank).ih) == ih_by_subtraction(diamond, rank)


@pytest.mark.criterion(6, "cones over P^n via O(d) degenerate to the smooth-point table")
def test_smooth_point_classical_numbers():
    assert classical_lyubeznik(smooth_point_table(3)) == {(3, 3): 1}
