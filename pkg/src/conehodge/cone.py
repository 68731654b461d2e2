"""
Invariants of an isolated singularity obtained by contracting a smooth
exceptional locus Z~ of codimension c = delta + 1 to a point.

The basic example contracts the zero section of E^* for an ample bundle E
of rank e on Y: then Z~ = Y, d = dim Y and delta = e - 1.  Blowing up the
vertex instead gives the same X with Z~ = P(E) and delta = 0.

All outputs are dimension tables computed from the primitive cohomology
of Z~, and each invariant has two independent routes so that callers can
cross-check them.

Notation: n = dim X = d + delta + 1, and q = embed_codim is the
codimension of X in a smooth ambient space (it only shifts weights).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hodge import (
    HodgeDiamond,
    PrimitiveDecomposition,
    PureHodgeStructure,
    direct_sum,
    tate_twist,
)
from .levels import INF, NEG, ZERO, ExtendedLevel, clamp_to_bound, level_min


@dataclass(frozen=True)
class ConeSetup:
    d: int
    delta: int
    embed_codim: int = 1
    hrh_base: ExtendedLevel = INF

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("the exceptional locus must have dimension d >= 1")
        if self.delta < 0:
            raise ValueError("delta must be >= 0")
        if self.embed_codim < 1:
            raise ValueError("embedding codimension must be >= 1")
        if not isinstance(self.hrh_base, ExtendedLevel):
            object.__setattr__(self, "hrh_base", ExtendedLevel.parse(self.hrh_base))
        if self.hrh_base.is_neg:
            raise ValueError("hrh_base must be >= 0")

    @classmethod
    def for_bundle(cls, d: int, rank: int, embed_codim: int = 1, hrh_base=INF) -> "ConeSetup":
        """Contraction of the zero section of E^* for an ample bundle E of the given
        rank on a d-dimensional base; the exceptional locus is the base itself."""
        if rank < 1:
            raise ValueError("bundle rank must be >= 1")
        return cls(d, rank - 1, embed_codim, hrh_base)

    @property
    def n(self) -> int:
        return self.d + self.delta + 1

    @property
    def c_exc(self) -> int:
        return self.delta + 1


@dataclass(frozen=True)
class Summand:
    """H^{degree}_prim(Z~) twisted by `twist`."""

    degree: int
    twist: int
    structure: PureHodgeStructure


@dataclass(frozen=True)
class LocalCohomologyProfile:
    """Gr^W of H^{q+j}_X(O) at the isolated point, as twisted primitive pieces.

    `by_j[j]` lists the summands for 1 <= j <= n-2 (empty lists omitted).
    `topweight_untwisted` is Gr^W_{n+1} H^0 of the local D-module quotient
    before the ambient twist by (-q); `topweight_H0` includes it.
    """

    setup: ConeSetup
    by_j: dict[int, tuple[Summand, ...]]
    topweight_untwisted: PureHodgeStructure
    topweight_H0: PureHodgeStructure

    def weight(self, j: int) -> int:
        return self.setup.n + j + 1 + 2 * self.setup.embed_codim

    def structure(self, j: int) -> PureHodgeStructure:
        return direct_sum(self.weight(j), (s.structure for s in self.by_j.get(j, ())))

    def is_empty(self) -> bool:
        return not self.by_j


def _nonzero(prim: PrimitiveDecomposition, k: int) -> bool:
    return 0 <= k <= prim.dim and not prim[k].is_zero()


def profile_terms(prim: PrimitiveDecomposition, setup: ConeSetup, j: int) -> list[tuple[int, int]]:
    """(primitive degree, index r) for the summands of H^{q+j}, before dropping zeros."""
    d, delta = setup.d, setup.delta
    if delta <= j:
        return [(d - (j - delta + 2 * r), r) for r in range(delta + 1)]
    return [(d - (delta - j + 2 * r), r) for r in range(j + 1)]


def local_cohomology_profile(prim: PrimitiveDecomposition, setup: ConeSetup) -> LocalCohomologyProfile:
    if prim.dim != setup.d:
        raise ValueError(f"primitive data has dimension {prim.dim}, setup says d={setup.d}")
    d, delta, q, n = setup.d, setup.delta, setup.embed_codim, setup.n
    by_j = {}
    for j in range(1, n - 1):
        out = []
        for k, r in profile_terms(prim, setup, j):
            if not _nonzero(prim, k):
                continue
            t = -q - j - r - 1 if delta <= j else -q - delta - r - 1
            out.append(Summand(k, t, tate_twist(prim[k], t)))
        if out:
            by_j[j] = tuple(out)
    top = prim[d - delta] if d - delta >= 0 else PureHodgeStructure.zero(d - delta)
    untwisted = tate_twist(top, -delta - 1)
    return LocalCohomologyProfile(setup, by_j, untwisted, tate_twist(untwisted, -q))


def lcdef_from_profile(profile: LocalCohomologyProfile) -> tuple[int, int, ExtendedLevel]:
    """(lcdef, lcdef_gen^{>0}, codim of the non-CCI locus)."""
    lcdef = max(profile.by_j, default=0)
    ncci = ExtendedLevel.finite(profile.setup.n) if lcdef > 0 else INF
    return lcdef, lcdef, ncci


# -- c(X) ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LevelResult:
    level: ExtendedLevel
    note: str = ""


def c_invariant_closed_form(prim: PrimitiveDecomposition, setup: ConeSetup) -> LevelResult:
    """c(X) by the case split on (delta, d)."""
    d, delta, k = setup.d, setup.delta, setup.hrh_base
    if local_cohomology_profile(prim, setup).is_empty():
        note = "override: CCI" if (delta > 0 and d > 1) or delta > 1 else "CCI"
        return LevelResult(INF, note)
    if (delta > 0 and d > 1) or (delta > 1 and d == 1):
        ok = all(prim[d - b].hodge_filtration_vanishes(d - b) for b in range(d))
        return LevelResult(ZERO if ok else NEG)
    if delta == 1 and d == 1:
        return LevelResult(INF if prim[1].is_zero() else NEG)
    # delta == 0: largest l with F^{d-b-l} H^{d-b}_prim = 0 for 0 < b < d
    best = None
    for b in range(1, d):
        top = prim[d - b].max_p()
        if top is not None:
            bound = d - b - 1 - top
            best = bound if best is None else min(best, bound)
    if best is None:
        return LevelResult(INF, "CCI")
    return LevelResult(clamp_to_bound(ExtendedLevel.finite(best), k))


def vanishing_conditions(prim: PrimitiveDecomposition, setup: ConeSetup, l: int) -> list[tuple[int, int]]:
    """(filtration level, primitive degree) pairs that must satisfy F^level = 0 for c >= l."""
    d, delta, n = setup.d, setup.delta, setup.n
    out = []
    for j in range(max(delta, 1), n - 1):
        for r in range(delta + 1):
            out.append((n - l - r - j - 1, d - (j - delta + 2 * r)))
    for j in range(1, min(delta, n - 1)):
        for r in range(j + 1):
            out.append((n - l - r - delta - 1, d - (delta - j + 2 * r)))
    return out


def c_invariant_vanishing_route(prim: PrimitiveDecomposition, setup: ConeSetup) -> LevelResult:
    """c(X) as the largest l for which both vanishing families hold."""
    degrees = {k for _, k in vanishing_conditions(prim, setup, 0)}
    if not any(_nonzero(prim, k) for k in degrees):
        return LevelResult(INF, "all conditions vacuous")

    def holds(l):
        return all(
            not _nonzero(prim, k) or prim[k].hodge_filtration_vanishes(level)
            for level, k in vanishing_conditions(prim, setup, l)
        )

    if not holds(0):
        return LevelResult(NEG)
    # the assumed bound only enters the delta = 0 branch
    k = setup.hrh_base if setup.delta == 0 else INF
    l = 0
    # a nonzero space has F^p != 0 once p <= its top Hodge index, so this stops by n + 1
    while True:
        if not k.is_inf and l >= k.value:
            return LevelResult(ExtendedLevel("fin", k.value, True))
        if not holds(l + 1):
            return LevelResult(ExtendedLevel.finite(l))
        l += 1


# -- HRH(X) -------------------------------------------------------------------------


def middle_bound(prim: PrimitiveDecomposition) -> ExtendedLevel:
    """Largest l with F^{d-l} H^d_prim = 0."""
    d = prim.dim
    top = prim[d].max_p()
    if top is None:
        return INF
    return ExtendedLevel.finite(d - top - 1)


def hrh_invariant(prim: PrimitiveDecomposition, setup: ConeSetup, c: ExtendedLevel) -> ExtendedLevel:
    if setup.delta > 0:
        return ZERO if c >= ZERO else NEG
    return clamp_to_bound(level_min(c, middle_bound(prim)), setup.hrh_base)


# -- generation levels -----------------------------------------------------------------

ZERO_MODULE = "zero-module"


def _mu(prim: PrimitiveDecomposition, k: int):
    return prim[k].min_p() if 0 <= k <= prim.dim else None


def generation_levels(prim: PrimitiveDecomposition, setup: ConeSetup) -> dict[int, int | str]:
    """Generation level of the Hodge filtration on each nonzero graded piece;
    key 0 is the top weight piece of H^q, key j the piece of H^{q+j}."""
    d, delta, n = setup.d, setup.delta, setup.n
    out: dict[int, int | str] = {}
    mu = _mu(prim, d - delta)
    out[0] = ZERO_MODULE if mu is None else d - mu
    for j in range(1, n - 1):
        vals = [_mu(prim, k) + r for k, r in profile_terms(prim, setup, j) if _mu(prim, k) is not None]
        if not vals:
            out[j] = ZERO_MODULE
        elif delta <= j:
            out[j] = d - (j - delta) - min(vals)
        else:
            out[j] = d - min(vals)
    return out


def generation_levels_from_profile(profile: LocalCohomologyProfile) -> dict[int, int | str]:
    """Same levels read off the twisted summands: gl = n + q - (lowest p)."""
    setup = profile.setup
    shift = setup.n + setup.embed_codim
    out: dict[int, int | str] = {}
    top = profile.topweight_H0.min_p()
    out[0] = ZERO_MODULE if top is None else shift - top
    for j in range(1, setup.n - 1):
        low = profile.structure(j).min_p()
        out[j] = ZERO_MODULE if low is None else shift - low
    return out


# -- intersection cohomology --------------------------------------------------------------


@dataclass(frozen=True)
class ConeIntersectionCohomology:
    n: int
    ih: dict[int, PureHodgeStructure]
    ih_c: dict[int, PureHodgeStructure]

    def dims(self) -> dict[int, int]:
        return {j: hs.total() for j, hs in self.ih.items() if not hs.is_zero()}


def _dual_table(ih: dict[int, PureHodgeStructure], n: int) -> dict[int, PureHodgeStructure]:
    out = {}
    for j in range(2 * n + 1):
        src = ih.get(2 * n - j, PureHodgeStructure.zero(2 * n - j))
        out[j] = PureHodgeStructure(j, {(n - p, n - q): v for (p, q), v in src.items()})
    return out


def intersection_cohomology_of_cone(
    prim: PrimitiveDecomposition, diamond: HodgeDiamond, rank: int
) -> ConeIntersectionCohomology:
    """IH^j and IH_c^j of the cone over (Y, E), rank E = `rank`, from the
    primitive cohomology of the base Y."""
    if rank < 1:
        raise ValueError("bundle rank must be >= 1")
    d, e = diamond.dim, rank
    n = d + e
    ih = {}
    for j in range(2 * n + 1):
        if j <= d:
            parts = [tate_twist(prim[j - 2 * a], -a) for a in range(e) if 0 <= j - 2 * a <= d]
        elif j < d + e:
            parts = [tate_twist(prim[2 * d - j - 2 * a], d - a - j)
                     for a in range(d + e - j) if 0 <= 2 * d - j - 2 * a <= d]
        else:
            parts = []
        ih[j] = direct_sum(j, parts)
    return ConeIntersectionCohomology(n, ih, _dual_table(ih, n))


@dataclass(frozen=True)
class PushforwardSummand:
    shift: int  # appears as [shift]
    degree: int  # H^degree(Z~)
    twist: int
    structure: PureHodgeStructure


@dataclass(frozen=True)
class PushforwardReport:
    summands: tuple[PushforwardSummand, ...]
    ih: dict[int, PureHodgeStructure]
    identity_holds: bool
    notes: tuple[str, ...] = field(default=())


def pushforward_decomposition(diamond: HodgeDiamond, setup: ConeSetup) -> PushforwardReport:
    """Decomposition of f_* of the constant complex on the resolution: IC_X plus
    skyscrapers H^{n+l}(Z~) at shifts -l..l.  IH of X is what is left of
    H^j(X~) = H^j(Z~) after removing the skyscraper contributions; the
    identity check asks that this be a genuine structure vanishing for j >= n."""
    if diamond.dim != setup.d:
        raise ValueError("diamond dimension does not match the setup")
    d, n = setup.d, setup.n
    span = d - setup.c_exc
    summands = [PushforwardSummand(0, n, 0, diamond[n])]
    for l in range(1, span + 1):
        summands.append(PushforwardSummand(-l, n + l, 0, diamond[n + l]))
        summands.append(PushforwardSummand(l, n + l, l, tate_twist(diamond[n + l], l)))
    summands.sort(key=lambda s: (s.shift, s.degree))

    contributions: dict[int, list[PureHodgeStructure]] = {}
    for s in summands:
        # a skyscraper V[shift] contributes V to hypercohomology degree n - shift
        contributions.setdefault(n - s.shift, []).append(s.structure)
    ih, ok, notes = {}, True, []
    for j in range(2 * d + 1):
        rest = dict(diamond[j].as_dict())
        for part in contributions.get(j, []):
            for pq, v in part.items():
                rest[pq] = rest.get(pq, 0) - v
        if any(v < 0 for v in rest.values()):
            ok = False
            notes.append(f"degree {j}: skyscrapers exceed H^{j}(Z~)")
            rest = {pq: max(v, 0) for pq, v in rest.items()}
        ih[j] = PureHodgeStructure(j, rest)
        if j >= n and not ih[j].is_zero():
            ok = False
            notes.append(f"degree {j}: IH^{j} of an affine cone should vanish")
    return PushforwardReport(tuple(summands), ih, ok, tuple(notes))


# -- the inequality -------------------------------------------------------------------------

HOLDS, VIOLATED, NOT_APPLICABLE = "holds", "violated", "not-applicable"


@dataclass(frozen=True)
class InvariantReport:
    lcdef: int
    lcdef_gen_pos: int
    c: ExtendedLevel
    hrh: ExtendedLevel
    ncci_codim: ExtendedLevel
    c_note: str = ""
    inequality_verdict: str = ""


def cci_inequality_report(report: InvariantReport) -> str:
    """lcdef_gen^{>0} + 2c + 3 <= codim of the non-CCI locus, when c >= 0 and the locus is nonempty."""
    if report.c.is_neg or report.ncci_codim.is_inf:
        return NOT_APPLICABLE
    if report.c.is_inf:
        return NOT_APPLICABLE
    lhs = report.lcdef_gen_pos + 2 * report.c.value + 3
    return HOLDS if lhs <= report.ncci_codim.value else VIOLATED


def invariant_report(prim: PrimitiveDecomposition, setup: ConeSetup) -> InvariantReport:
    profile = local_cohomology_profile(prim, setup)
    lcdef, gen_pos, ncci = lcdef_from_profile(profile)
    c = c_invariant_closed_form(prim, setup)
    hrh = hrh_invariant(prim, setup, c.level)
    rep = InvariantReport(lcdef, gen_pos, c.level, hrh, ncci, c.note)
    return InvariantReport(lcdef, gen_pos, c.level, hrh, ncci, c.note, cci_inequality_report(rep))
