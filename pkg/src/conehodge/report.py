"""Full cone report with a ledger of route-pair cross-checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catalog
from .cone import (
    ConeSetup,
    c_invariant_vanishing_route,
    generation_levels,
    generation_levels_from_profile,
    intersection_cohomology_of_cone,
    invariant_report,
    local_cohomology_profile,
    pushforward_decomposition,
)
from .hodge import HodgeDiamond, PureHodgeStructure, lefschetz_power_kernel, primitive_decomposition
from .lyubeznik import c_from_table, hodge_lyubeznik_table, hrh_from_table


@dataclass
class CrossCheck:
    name: str
    left: object
    right: object

    @property
    def agree(self) -> bool:
        return self.left == self.right


@dataclass
class ConeReport:
    source: str
    rank: int | None
    setup: ConeSetup
    diamond: HodgeDiamond
    profile: object
    invariants: object
    table: object
    ih: dict[int, PureHodgeStructure]
    generation: dict
    pushforward: object
    checks: list[CrossCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.agree for ch in self.checks)


def intersection_lambda_from_kernels(prim, setup: ConeSetup) -> dict[tuple[int, int, int], int]:
    """I-lambda_r read off ker(L^r) on H^{n-r}(Z~): piece (x, y) sits at (-y, -x)."""
    out = {}
    for r in range(1, setup.n + 1):
        ker = lefschetz_power_kernel(prim, r, setup.c_exc)[setup.n - r]
        for (x, y), v in ker.items():
            out[(r, -y, -x)] = v
    return dict(sorted(out.items()))


def build_cone_report(diamond: HodgeDiamond, *, rank: int | None = None, delta: int | None = None,
                      embed_codim: int = 1, hrh_base=None, source: str = "<diamond>") -> ConeReport:
    """Everything about the cone; exactly one of `rank` (bundle on the base) or
    `delta` (exceptional locus of codimension delta + 1) must be given."""
    if (rank is None) == (delta is None):
        raise ValueError("give exactly one of rank or delta")
    if rank is not None:
        setup = ConeSetup.for_bundle(diamond.dim, rank, embed_codim, hrh_base if hrh_base is not None else "inf")
    else:
        setup = ConeSetup(diamond.dim, delta, embed_codim, hrh_base if hrh_base is not None else "inf")
    prim = primitive_decomposition(diamond)
    profile = local_cohomology_profile(prim, setup)
    inv = invariant_report(prim, setup)
    table = hodge_lyubeznik_table(prim, setup)
    gen = generation_levels(prim, setup)
    push = pushforward_decomposition(diamond, setup)

    checks = [
        CrossCheck("c: closed form vs vanishing families", inv.c, c_invariant_vanishing_route(prim, setup).level),
        CrossCheck("c: closed form vs Hodge-Lyubeznik table", inv.c, c_from_table(table)),
        CrossCheck("HRH: closed form vs Hodge-Lyubeznik table", inv.hrh, hrh_from_table(table, inv.c)),
        CrossCheck("generation levels: primitive minima vs twisted profile", gen,
                   generation_levels_from_profile(profile)),
        CrossCheck("I-lambda: theorem vs Lefschetz kernels", table.intersection_entries,
                   intersection_lambda_from_kernels(prim, setup)),
        CrossCheck("Hodge-Lyubeznik table invariants", [], table.check_invariants()),
        CrossCheck("HRH <= c", True, inv.hrh <= inv.c),
        CrossCheck("pushforward identity", True, push.identity_holds),
        CrossCheck("inequality not violated", True, inv.inequality_verdict != "violated"),
    ]

    ih = push.ih
    if rank is not None:
        cone_ih = intersection_cohomology_of_cone(prim, diamond, rank).ih
        checks.append(CrossCheck("IH: primitive formula vs pushforward", _nonzero(cone_ih), _nonzero(push.ih)))
        ih = cone_ih
        if rank > 1:
            blown = catalog.product(diamond, catalog.projective_space(rank - 1))
            bprim = primitive_decomposition(blown)
            bsetup = ConeSetup(blown.dim, 0, embed_codim, setup.hrh_base)
            binv = invariant_report(bprim, bsetup)
            bpush = pushforward_decomposition(blown, bsetup)
            checks += [
                CrossCheck("presentation: lcdef", inv.lcdef, binv.lcdef),
                CrossCheck("presentation: c", inv.c, binv.c),
                CrossCheck("presentation: HRH", inv.hrh, binv.hrh),
                CrossCheck("presentation: IH", _nonzero(cone_ih), _nonzero(bpush.ih)),
                CrossCheck("presentation: Hodge-Lyubeznik table", table.entries,
                           hodge_lyubeznik_table(bprim, bsetup).entries),
            ]
    return ConeReport(source, rank, setup, diamond, profile, inv, table, ih, gen, push, checks)


def _nonzero(table: dict[int, PureHodgeStructure]) -> dict[int, dict]:
    return {j: hs.as_dict() for j, hs in sorted(table.items()) if not hs.is_zero()}


def cone_report_for(name_or_entry, **kwargs) -> ConeReport:
    entry = catalog.get(name_or_entry) if isinstance(name_or_entry, str) else name_or_entry
    kwargs.setdefault("hrh_base", entry.hrh_bound)
    return build_cone_report(entry.diamond, source=entry.name, **kwargs)
