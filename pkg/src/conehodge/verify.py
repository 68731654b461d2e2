"""
Self-check suites run by `conehodge verify`.

Each suite returns how many cases it looked at and a list of failures; a
failure message names the smallest input that broke the property.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import catalog
from .cone import ConeSetup, c_invariant_closed_form, c_invariant_vanishing_route
from .determinantal import (
    Family,
    codim_and_lcdef,
    expected_codim,
    grid_cases,
    is_hypersurface_case,
    lcdef_gen_pos,
    local_cohomology_poly,
    ncci_locus,
    q_binomial,
)
from .hodge import (
    ConnectivityError,
    DiamondError,
    DualityError,
    HodgeDiamond,
    LefschetzError,
    PrimitiveDecomposition,
    PureHodgeStructure,
    SymmetryError,
    lefschetz_cokernel_by_summands,
    lefschetz_kernel_by_summands,
    lefschetz_power_cokernel,
    lefschetz_power_kernel,
    primitive_decomposition,
    reconstruct_from_primitive,
    validate_diamond,
)
from .report import build_cone_report


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)


def random_primitive(rng: random.Random, max_dim: int = 4, max_entry: int = 3) -> PrimitiveDecomposition:
    """Random Hodge-symmetric primitive data with H^0_prim = Q(0)."""
    d = rng.randint(1, max_dim)
    prim = [PureHodgeStructure(0, {(0, 0): 1})]
    for k in range(1, d + 1):
        dims = {}
        for p in range(k // 2 + 1):
            v = rng.randint(0, max_entry) if rng.random() < 0.5 else 0
            if v:
                dims[(p, k - p)] = v
                dims[(k - p, p)] = v
        prim.append(PureHodgeStructure(k, dims))
    return PrimitiveDecomposition(d, tuple(prim))


def corrupted_fixture() -> HodgeDiamond:
    """P^2 with h^{1,1} removed: h^0 -> h^2 can no longer be injective."""
    return HodgeDiamond.from_numbers(2, {(0, 0): 1, (2, 2): 1})


def _sweep_diamonds(extra=()) -> list[tuple[str, HodgeDiamond]]:
    return [(name, catalog.get(name).diamond) for name in catalog.SWEEP_NAMES] + list(extra)


def suite_structure(extra=(), rounds: int = 200, seed: int = 20240601) -> SuiteResult:
    res = SuiteResult("structure")
    base = catalog.get("p1xp1").diamond.numbers()
    injections = {
        DualityError: {**base, (2, 2): 0},
        LefschetzError: {(0, 0): 1, (2, 2): 1, (1, 1): 0},
        SymmetryError: {**base, (2, 0): 1},
        ConnectivityError: {**base, (0, 0): 2, (2, 2): 2},
    }
    for err, numbers in injections.items():
        try:
            validate_diamond(HodgeDiamond.from_numbers(2, numbers))
            caught = None
        except DiamondError as exc:
            caught = exc
        res.expect(type(caught) is err, f"{err.__name__} not raised for {numbers}, got {caught!r}")

    rng = random.Random(seed)
    for i in range(rounds):
        prim = random_primitive(rng)
        diamond = reconstruct_from_primitive(prim)
        try:
            validate_diamond(diamond)
            back = primitive_decomposition(diamond)
            ok = back == prim
        except DiamondError:
            ok = False
        res.expect(ok, f"round {i}: primitive data {prim.prim} does not survive the roundtrip")

    for name, diamond in _sweep_diamonds(extra):
        try:
            validate_diamond(diamond)
            ok = reconstruct_from_primitive(primitive_decomposition(diamond)) == diamond
            msg = "roundtrip changed the diamond"
        except DiamondError as exc:
            ok, msg = False, str(exc)
        res.expect(ok, f"{name}: {msg}")
    return res


def suite_lefschetz(extra=()) -> SuiteResult:
    res = SuiteResult("lefschetz")
    for name, diamond in _sweep_diamonds(extra):
        try:
            prim = primitive_decomposition(diamond)
        except DiamondError as exc:
            res.expect(False, f"{name}: {exc}")
            continue
        d = diamond.dim
        for j in range(1, 2 * d + 3):
            for c in range(1, d + 2):
                res.expect(
                    lefschetz_power_kernel(prim, j, c) == lefschetz_kernel_by_summands(prim, j, c),
                    f"{name}: kernel of L^{j} with c={c}",
                )
                res.expect(
                    lefschetz_power_cokernel(prim, j, c) == lefschetz_cokernel_by_summands(prim, j, c),
                    f"{name}: cokernel of L^{j} with c={c}",
                )
    return res


def suite_routes(extra=()) -> SuiteResult:
    res = SuiteResult("routes")
    for name, diamond in _sweep_diamonds(extra):
        for delta in (0, 1, 2):
            for q in (1, 2):
                try:
                    rep = build_cone_report(diamond, delta=delta, embed_codim=q, source=name)
                except DiamondError as exc:
                    res.expect(False, f"{name}: {exc}")
                    continue
                for ch in rep.checks:
                    res.expect(ch.agree, f"{name} delta={delta} q={q}: {ch.name}: {ch.left} != {ch.right}")
    return res


def suite_saturation(seed: int = 7, rounds: int = 150) -> SuiteResult:
    """Both c routes also agree when the assumed HRH bound of the base is finite."""
    res = SuiteResult("saturation")
    rng = random.Random(seed)
    for i in range(rounds):
        prim = random_primitive(rng)
        for delta in (0, 1, 2):
            for k in (0, 1, 2, "inf"):
                setup = ConeSetup(prim.dim, delta, 1, k)
                a = c_invariant_closed_form(prim, setup).level
                b = c_invariant_vanishing_route(prim, setup).level
                res.expect(a == b and a.saturated == b.saturated,
                           f"round {i} delta={delta} k={k}: {a} vs {b} for {prim.prim}")
    return res


def suite_presentation() -> SuiteResult:
    res = SuiteResult("presentation")
    for name in catalog.SWEEP_NAMES:
        diamond = catalog.get(name).diamond
        if diamond.dim > 2:
            continue
        for rank in (1, 2, 3):
            rep = build_cone_report(diamond, rank=rank, source=name)
            for ch in rep.checks:
                res.expect(ch.agree, f"{name} rank={rank}: {ch.name}: {ch.left} != {ch.right}")
    rep = build_cone_report(catalog.get("p3").diamond, rank=2, source="p3")
    for ch in rep.checks:
        res.expect(ch.agree, f"p3 rank=2: {ch.name}: {ch.left} != {ch.right}")
    return res


def suite_inequality(extra=()) -> SuiteResult:
    res = SuiteResult("inequality")
    for name, diamond in _sweep_diamonds(extra):
        for delta in (0, 1, 2):
            for q in (1, 2):
                try:
                    inv = build_cone_report(diamond, delta=delta, embed_codim=q, source=name).invariants
                except DiamondError as exc:
                    res.expect(False, f"{name}: {exc}")
                    continue
                res.expect(inv.inequality_verdict != "violated",
                           f"{name} delta={delta} q={q}: {inv.lcdef_gen_pos} + 2*{inv.c} + 3 > {inv.ncci_codim}")
    inv = build_cone_report(catalog.get("p3").diamond, rank=2).invariants
    res.expect(inv.lcdef_gen_pos + 2 * inv.c.value + 3 == inv.ncci_codim.value == 5,
               "p3 rank 2 should attain equality 2 + 0 + 3 = 5")
    return res


def suite_determinantal() -> SuiteResult:
    res = SuiteResult("determinantal")
    for case in grid_cases():
        poly = local_cohomology_poly(case)
        res.expect(poly.is_nonnegative(), f"{case.label()}: negative class in {poly}")
        res.expect(poly.min_degree() == expected_codim(case),
                   f"{case.label()}: lowest degree {poly.min_degree()} != codim {expected_codim(case)}")
        res.expect(all(v > 0 for v in poly.at_one().values()), f"{case.label()}: empty [D_s] multiplicity")
        if case.family is Family.SYMMETRIC and case.p < 2:
            continue
        _, lcdef = codim_and_lcdef(case)
        res.expect(lcdef_gen_pos(case) <= lcdef, f"{case.label()}: lcdef_gen^>0 > lcdef")
        if is_hypersurface_case(case):
            res.expect(lcdef == 0 and ncci_locus(case) is None,
                       f"{case.label()}: hypersurface case should be CCI with lcdef 0")
    return res


def suite_qbinomial(limit: int = 12) -> SuiteResult:
    res = SuiteResult("qbinomial")
    for a in range(limit + 1):
        for b in range(a + 1):
            poly = q_binomial(a, b)
            top = b * (a - b)
            coeffs = [poly[e] for e in range(top + 1)]
            res.expect(coeffs == coeffs[::-1], f"({a},{b}) not symmetric: {coeffs}")
            peak = coeffs.index(max(coeffs))
            res.expect(
                all(x <= y for x, y in zip(coeffs[:peak], coeffs[1:peak + 1]))
                and all(x >= y for x, y in zip(coeffs[peak:], coeffs[peak + 1:])),
                f"({a},{b}) not unimodal: {coeffs}",
            )
            res.expect(poly == q_binomial(a, a - b), f"({a},{b}) differs from ({a},{a - b})")
    return res


SUITES = {
    "structure": suite_structure,
    "lefschetz": suite_lefschetz,
    "routes": suite_routes,
    "saturation": suite_saturation,
    "presentation": suite_presentation,
    "inequality": suite_inequality,
    "determinantal": suite_determinantal,
    "qbinomial": suite_qbinomial,
}

# suites that accept additional (name, diamond) inputs
TAKES_EXTRA = {"structure", "lefschetz", "routes", "inequality"}


def run_suites(names=None, extra=()) -> list[SuiteResult]:
    out = []
    for name in names or SUITES:
        fn = SUITES[name]
        out.append(fn(extra) if name in TAKES_EXTRA else fn())
    return out
