"""
Pure Hodge structures, Hodge diamonds and the Lefschetz package.

Everything here is dimension bookkeeping: a pure structure is a sparse
table (p, q) -> dim supported on p + q = weight, and a diamond is the
list of such tables for H^0 .. H^{2d} of a smooth (or rational homology
manifold) projective variety with a fixed ample class L.

Tate twist convention: M(k) moves (p, q) to (p - k, q - k) and the
weight w to w - 2k.  So a negative twist raises Hodge types.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping


class PureHodgeStructure:
    """Bigraded dimension table of a pure Hodge structure of one weight."""

    __slots__ = ("weight", "_dims")

    def __init__(self, weight: int, dims: Mapping[tuple[int, int], int] | None = None):
        table = {}
        for (p, q), n in (dims or {}).items():
            p, q, n = int(p), int(q), int(n)
            if p + q != weight:
                raise ValueError(f"type ({p},{q}) does not have weight {weight}")
            if n < 0:
                raise ValueError(f"negative dimension {n} at ({p},{q})")
            if n:
                table[(p, q)] = table.get((p, q), 0) + n
        self.weight = int(weight)
        self._dims = dict(sorted(table.items()))

    @classmethod
    def zero(cls, weight: int) -> "PureHodgeStructure":
        return cls(weight)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self._dims.get(pq, 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._dims.items())

    def types(self) -> list[tuple[int, int]]:
        return list(self._dims)

    def total(self) -> int:
        return sum(self._dims.values())

    def is_zero(self) -> bool:
        return not self._dims

    def max_p(self) -> int | None:
        """Largest p with a nonzero (p, q) piece, or None for the zero space."""
        return max((p for p, _ in self._dims), default=None)

    def min_p(self) -> int | None:
        return min((p for p, _ in self._dims), default=None)

    def hodge_filtration_vanishes(self, level: int) -> bool:
        """True iff F^level = 0, i.e. no piece (p, q) with p >= level."""
        top = self.max_p()
        return top is None or top < level

    def is_symmetric(self) -> bool:
        return all(self[(q, p)] == n for (p, q), n in self.items())

    def twist(self, k: int) -> "PureHodgeStructure":
        return tate_twist(self, k)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._dims)

    def __add__(self, other: "PureHodgeStructure") -> "PureHodgeStructure":
        if other.weight != self.weight:
            raise ValueError(f"cannot add weights {self.weight} and {other.weight}")
        out = dict(self._dims)
        for pq, n in other.items():
            out[pq] = out.get(pq, 0) + n
        return PureHodgeStructure(self.weight, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PureHodgeStructure):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.weight == other.weight and self._dims == other._dims

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(())
        return hash((self.weight, tuple(self._dims.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({p},{q}):{n}" for (p, q), n in self.items())
        return f"PureHodgeStructure(w={self.weight}; {body or '0'})"


def direct_sum(weight: int, parts: Iterable[PureHodgeStructure]) -> PureHodgeStructure:
    out = PureHodgeStructure.zero(weight)
    for part in parts:
        if part.is_zero():
            continue
        out = out + part
    return out


def tate_twist(hs: PureHodgeStructure, k: int) -> PureHodgeStructure:
    """M(k): weight w -> w - 2k, (p, q) -> (p - k, q - k)."""
    return PureHodgeStructure(
        hs.weight - 2 * k, {(p - k, q - k): n for (p, q), n in hs.items()}
    )


@dataclass(frozen=True)
class GradedMixedHodge:
    """Weight-graded pieces Gr^W_w of a mixed object, keyed by w."""

    pieces: tuple[tuple[int, PureHodgeStructure], ...] = ()

    def __post_init__(self):
        for w, hs in self.pieces:
            if hs.weight != w and not hs.is_zero():
                raise ValueError(f"piece keyed {w} has weight {hs.weight}")

    @classmethod
    def single(cls, hs: PureHodgeStructure) -> "GradedMixedHodge":
        return cls(((hs.weight, hs),))

    def __getitem__(self, w: int) -> PureHodgeStructure:
        for key, hs in self.pieces:
            if key == w:
                return hs
        return PureHodgeStructure.zero(w)

    def weights(self) -> list[int]:
        return [w for w, _ in self.pieces]

    def total(self) -> int:
        return sum(hs.total() for _, hs in self.pieces)


# -- diamonds ----------------------------------------------------------------


class DiamondError(ValueError):
    """Base class for rejected diamonds; `where` is the first bad (k, p, q)."""

    kind = "invalid diamond"

    def __init__(self, where: tuple[int, int, int], detail: str = ""):
        self.where = where
        k, p, q = where
        msg = f"{self.kind} at degree {k}, type ({p},{q})"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class DualityError(DiamondError):
    kind = "Poincare duality violation"


class LefschetzError(DiamondError):
    kind = "hard Lefschetz violation"


class SymmetryError(DiamondError):
    kind = "Hodge symmetry violation"


class ConnectivityError(DiamondError):
    kind = "disconnected (h^0 is not one-dimensional at (0,0))"


@dataclass(frozen=True)
class HodgeDiamond:
    """H^0 .. H^{2d} of a d-dimensional variety as pure structures."""

    dim: int
    levels: tuple[PureHodgeStructure, ...]

    @classmethod
    def from_numbers(cls, dim: int, numbers: Mapping[tuple[int, int], int]) -> "HodgeDiamond":
        """Build from h^{p,q}; the degree of each entry is p + q."""
        per_degree: dict[int, dict] = {k: {} for k in range(2 * dim + 1)}
        for (p, q), n in numbers.items():
            if not 0 <= p + q <= 2 * dim:
                raise ValueError(f"h^{{{p},{q}}} outside degrees 0..{2 * dim}")
            per_degree[p + q][(p, q)] = n
        return cls(dim, tuple(PureHodgeStructure(k, per_degree[k]) for k in range(2 * dim + 1)))

    def h(self, k: int, p: int, q: int) -> int:
        if not 0 <= k <= 2 * self.dim or p + q != k:
            return 0
        return self.levels[k][(p, q)]

    def __getitem__(self, k: int) -> PureHodgeStructure:
        if 0 <= k <= 2 * self.dim:
            return self.levels[k]
        return PureHodgeStructure.zero(k)

    def betti(self) -> list[int]:
        return [hs.total() for hs in self.levels]

    def numbers(self) -> dict[tuple[int, int], int]:
        out = {}
        for hs in self.levels:
            out.update(hs.as_dict())
        return out


def point_diamond() -> HodgeDiamond:
    return HodgeDiamond(0, (PureHodgeStructure(0, {(0, 0): 1}),))


def validate_diamond(raw: HodgeDiamond) -> HodgeDiamond:
    """Return `raw` unchanged if it satisfies connectivity, Hodge symmetry,
    Poincare duality and hard Lefschetz; otherwise raise the matching
    DiamondError naming the first failing (k, p, q)."""
    d = raw.dim
    if d < 0 or len(raw.levels) != 2 * d + 1:
        raise ValueError(f"expected {2 * d + 1} levels for dimension {d}, got {len(raw.levels)}")
    for k, hs in enumerate(raw.levels):
        if hs.weight != k and not hs.is_zero():
            raise ValueError(f"level {k} carries weight {hs.weight}")

    h0 = raw.levels[0]
    if h0.as_dict() != {(0, 0): 1}:
        bad = next(iter(h0.types()), (0, 0))
        raise ConnectivityError((0, *bad), f"h^0 = {h0.as_dict()}")

    for k, hs in enumerate(raw.levels):
        for (p, q), n in hs.items():
            if hs[(q, p)] != n:
                raise SymmetryError((k, p, q), f"h^{{{p},{q}}}={n} but h^{{{q},{p}}}={hs[(q, p)]}")

    for k in range(2 * d + 1):
        for p, q in _types_at(raw, k):
            a, b = raw.h(k, p, q), raw.h(2 * d - k, d - p, d - q)
            if a != b:
                raise DualityError((k, p, q), f"{a} versus {b} in degree {2 * d - k}")

    for k in range(d):
        for p, q in _types_at(raw, k):
            a, b = raw.h(k, p, q), raw.h(k + 2, p + 1, q + 1)
            if a > b:
                raise LefschetzError((k, p, q), f"L: {a} -> {b} cannot be injective")
    return raw


def _types_at(diamond: HodgeDiamond, k: int) -> list[tuple[int, int]]:
    # every type that is nonzero in degree k or in its dual/Lefschetz partners
    d = diamond.dim
    seen = set(diamond[k].types())
    seen |= {(d - p, d - q) for p, q in diamond[2 * d - k].types()}
    return sorted(seen)


# -- primitive decomposition ---------------------------------------------------


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """Primitive pieces H^k_prim for k = 0..dim."""

    dim: int
    prim: tuple[PureHodgeStructure, ...]

    def __getitem__(self, k: int) -> PureHodgeStructure:
        if 0 <= k <= self.dim:
            return self.prim[k]
        return PureHodgeStructure.zero(k)

    def h(self, p: int, q: int) -> int:
        """h_prim^{p,q}, read in degree p + q."""
        return self[p + q][(p, q)]

    def positive_degrees_vanish(self) -> bool:
        return all(self[k].is_zero() for k in range(1, self.dim + 1))


def primitive_decomposition(diamond: HodgeDiamond) -> PrimitiveDecomposition:
    d = diamond.dim
    prim = []
    for k in range(d + 1):
        dims = {}
        for p, q in set(diamond[k].types()) | {(p + 1, q + 1) for p, q in diamond[k - 2].types()}:
            n = diamond.h(k, p, q) - diamond.h(k - 2, p - 1, q - 1)
            if n < 0:
                raise LefschetzError((k, p, q), f"primitive dimension {n}")
            dims[(p, q)] = n
        prim.append(PureHodgeStructure(k, dims))
    return PrimitiveDecomposition(d, tuple(prim))


def lefschetz_summands(d: int, m: int) -> list[tuple[int, int]]:
    """Pairs (k, a) with H^m = sum of L^a H^k_prim, so k + 2a = m, a <= d - k."""
    out = []
    for a in range(0, m // 2 + 1):
        k = m - 2 * a
        if 0 <= k <= d and a <= d - k:
            out.append((k, a))
    return out


def reconstruct_from_primitive(prim: PrimitiveDecomposition) -> HodgeDiamond:
    d = prim.dim
    levels = []
    for m in range(2 * d + 1):
        levels.append(direct_sum(m, (tate_twist(prim[k], -a) for k, a in lefschetz_summands(d, m))))
    return HodgeDiamond(d, tuple(levels))


# -- kernels and cokernels of L^j --------------------------------------------------
#
# c is the codimension of the exceptional locus.  The two maps are
#   kernel   of L^j : H^{d+c-j} -> H^{d+c+j}, weight d + c - j
#   cokernel of L^j : H^{d-c-j} -> H^{d-c+j}, weight d - c + j


def lefschetz_power_kernel(prim: PrimitiveDecomposition, j: int, c: int) -> GradedMixedHodge:
    """Closed form for ker(L^j) on H^{d+c-j} as a sum of twisted primitive pieces."""
    if j < 1 or c < 0:
        raise ValueError("need j >= 1 and c >= 0")
    d = prim.dim
    weight = d + c - j
    if weight < 0:
        return GradedMixedHodge.single(PureHodgeStructure.zero(weight))
    if c <= j:
        parts = [tate_twist(prim[d + c - j - 2 * r], -r) for r in range(c)
                 if 0 <= d + c - j - 2 * r <= d]
    else:
        parts = [tate_twist(prim[d + j - c - 2 * r], j - c - r) for r in range(j)
                 if 0 <= d + j - c - 2 * r <= d]
    return GradedMixedHodge.single(direct_sum(weight, parts))


def lefschetz_power_cokernel(prim: PrimitiveDecomposition, j: int, c: int) -> GradedMixedHodge:
    """Closed form for coker(L^j : H^{d-c-j} -> H^{d-c+j})."""
    if j < 1 or c < 0:
        raise ValueError("need j >= 1 and c >= 0")
    d = prim.dim
    weight = d - c + j
    if weight > 2 * d:
        return GradedMixedHodge.single(PureHodgeStructure.zero(weight))
    if c > j:
        parts = [tate_twist(prim[d + j - c - 2 * r], -r) for r in range(j)
                 if 0 <= d + j - c - 2 * r <= d]
    else:
        parts = [tate_twist(prim[d + c - j - 2 * r], c - j - r) for r in range(c)
                 if 0 <= d + c - j - 2 * r <= d]
    return GradedMixedHodge.single(direct_sum(weight, parts))


def lefschetz_kernel_by_summands(prim: PrimitiveDecomposition, j: int, c: int) -> GradedMixedHodge:
    """ker(L^j) on H^{d+c-j}, found by sending each L^a P_k to L^{a+j} P_k
    and keeping the summands that die (a + j > d - k)."""
    d = prim.dim
    m = d + c - j
    parts = [tate_twist(prim[k], -a) for k, a in lefschetz_summands(d, m) if a + j > d - k]
    return GradedMixedHodge.single(direct_sum(m, parts))


def lefschetz_cokernel_by_summands(prim: PrimitiveDecomposition, j: int, c: int) -> GradedMixedHodge:
    """coker(L^j) onto H^{d-c+j}: summand L^a P_k is hit iff a >= j."""
    d = prim.dim
    m = d - c + j
    parts = [tate_twist(prim[k], -a) for k, a in lefschetz_summands(d, m) if a < j]
    return GradedMixedHodge.single(direct_sum(m, parts))


# -- products ----------------------------------------------------------------------


def kunneth_product(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Diamond of a product: convolution of the bigraded tables."""
    dims: dict[tuple[int, int], int] = {}
    for (ka, ha), (kb, hb) in product(enumerate(a.levels), enumerate(b.levels)):
        for ((p1, q1), n1), ((p2, q2), n2) in product(ha.items(), hb.items()):
            key = (p1 + p2, q1 + q2)
            dims[key] = dims.get(key, 0) + n1 * n2
    return HodgeDiamond.from_numbers(a.dim + b.dim, dims)
