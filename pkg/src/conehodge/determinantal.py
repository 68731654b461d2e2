"""
Local cohomology of determinantal varieties in the Grothendieck group.

For Z_p inside a space of matrices X the generating polynomial
H_p(q) = sum_j [H^j_{Z_p}(O_X)] q^j is a formal combination of the simple
D-module classes [D_s] with coefficients in Z[q].  The closed forms for the
four matrix families are evaluated exactly, and the derived invariants
(codimension, lcdef, lcdef_gen^{>0}, non-CCI locus, range of c) are
cross-checked against the polynomial wherever they can be read off it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Mapping

from .levels import INF, ExtendedLevel


class QPolynomial:
    """Sparse Laurent polynomial in q with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(v) for e, v in sorted((coeffs or {}).items()) if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def __call__(self, x):
        return sum(v * x ** e for e, v in self._c.items())

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient of polynomials (nonnegative exponents) that must divide exactly."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("exact_div expects ordinary polynomials")
        rem = dict(self._c)
        lead = other.max_degree()
        out: dict[int, int] = {}
        while rem and max(rem) >= lead:
            top = max(rem)
            k, r = divmod(rem[top], other[lead])
            if r:
                raise ValueError("division is not exact over the integers")
            out[top - lead] = k
            for e, v in other._c.items():
                e += top - lead
                rem[e] = rem.get(e, 0) - k * v
                if not rem[e]:
                    del rem[e]
        if rem:
            raise ValueError("division leaves a remainder")
        return QPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self._c.items()))

    def __repr__(self) -> str:
        return f"QPolynomial({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e, v in self._c.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                coef = str(v)
            elif v == 1:
                coef = ""
            elif v == -1:
                coef = "-"
            else:
                coef = f"{v}*"
            terms.append(coef + mono if mono else coef)
        return " + ".join(terms).replace("+ -", "- ")


def substitute(poly: QPolynomial, power: int) -> QPolynomial:
    """q -> q^power."""
    if power == 0:
        raise ValueError("power must be nonzero")
    return QPolynomial({e * power: v for e, v in poly.coeffs().items()})


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial [a choose b]_q via the q-Pascal rule
    [a, b] = [a-1, b-1] + q^b [a-1, b]."""
    if a < 0 or b < 0 or b > a:
        raise ValueError(f"q_binomial needs a >= b >= 0, got ({a}, {b})")
    if b == 0 or b == a:
        return QPolynomial.one()
    return q_binomial(a - 1, b - 1) + QPolynomial.monomial(b) * q_binomial(a - 1, b)


class GrothendieckClassPoly:
    """Formal sum over classes [D_s] with QPolynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, QPolynomial] | None = None):
        self._terms = {s: poly for s, poly in sorted((terms or {}).items()) if not poly.is_zero()}

    def terms(self) -> dict[int, QPolynomial]:
        return dict(self._terms)

    def __getitem__(self, s: int) -> QPolynomial:
        return self._terms.get(s, QPolynomial())

    def __add__(self, other: "GrothendieckClassPoly") -> "GrothendieckClassPoly":
        out = dict(self._terms)
        for s, poly in other._terms.items():
            out[s] = out.get(s, QPolynomial()) + poly
        return GrothendieckClassPoly(out)

    def exponents(self) -> set[int]:
        return {e for poly in self._terms.values() for e in poly.coeffs()}

    def min_degree(self) -> int:
        return min(self.exponents())

    def max_degree(self) -> int:
        return max(self.exponents())

    def at_one(self) -> dict[int, int]:
        return {s: poly(1) for s, poly in self._terms.items()}

    def is_nonnegative(self) -> bool:
        return all(v >= 0 and e >= 0 for poly in self._terms.values() for e, v in poly.coeffs().items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothendieckClassPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"[D_{s}]*({poly})" for s, poly in self._terms.items())

    __repr__ = __str__


class Family(Enum):
    GENERIC = "generic"
    ODD_SKEW = "odd_skew"
    EVEN_SKEW = "even_skew"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class DeterminantalCase:
    """Z_p in a matrix space.

    GENERIC: m x n matrices with m >= n, rank <= p, 0 < p < n.
    ODD_SKEW / EVEN_SKEW: skew n x n, n = 2m+1 or 2m, rank <= 2p, 0 < p < m.
    SYMMETRIC: symmetric n x n, rank <= p, 0 < p < n (p >= 2 for the
    invariant corollaries, since Z_1 is a rational homology manifold).
    """

    family: Family
    n: int
    p: int
    m: int | None = None

    def __post_init__(self):
        f, n, p = self.family, self.n, self.p
        if f is Family.GENERIC:
            if self.m is None or self.m < n:
                raise ValueError("generic case needs m >= n")
            if not 0 < p < n:
                raise ValueError(f"generic case needs 0 < p < n, got p={p}, n={n}")
        elif f in (Family.ODD_SKEW, Family.EVEN_SKEW):
            parity = 1 if f is Family.ODD_SKEW else 0
            if n % 2 != parity or n < 1:
                raise ValueError(f"{f.value} needs n of parity {parity}")
            half = n // 2
            if self.m is not None and self.m != half:
                raise ValueError(f"skew half-size must be {half}")
            object.__setattr__(self, "m", half)
            if not 0 < p < half:
                raise ValueError(f"skew case needs 0 < p < {half}")
        else:
            if self.m is not None:
                raise ValueError("symmetric case takes no m")
            if not 0 < p < n:
                raise ValueError(f"symmetric case needs 0 < p < n, got p={p}, n={n}")

    @classmethod
    def generic(cls, m: int, n: int, p: int) -> "DeterminantalCase":
        return cls(Family.GENERIC, n, p, m)

    @classmethod
    def skew(cls, n: int, p: int) -> "DeterminantalCase":
        return cls(Family.ODD_SKEW if n % 2 else Family.EVEN_SKEW, n, p)

    @classmethod
    def symmetric(cls, n: int, p: int) -> "DeterminantalCase":
        return cls(Family.SYMMETRIC, n, p)

    def label(self) -> str:
        if self.family is Family.GENERIC:
            return f"generic m={self.m} n={self.n} p={self.p}"
        return f"{self.family.value} n={self.n} p={self.p}"


def local_cohomology_poly(case: DeterminantalCase) -> GrothendieckClassPoly:
    f, n, p, m = case.family, case.n, case.p, case.m
    terms: dict[int, QPolynomial] = {}
    if f is Family.GENERIC:
        for s in range(p + 1):
            shift = (n - p) ** 2 + (n - s) * (m - n)
            terms[s] = QPolynomial.monomial(shift) * substitute(q_binomial(n - s - 1, p - s), 2)
    elif f is Family.ODD_SKEW:
        for s in range(p + 1):
            shift = 2 * (m - p) ** 2 + (m - p) + 2 * (p - s)
            terms[s] = QPolynomial.monomial(shift) * substitute(q_binomial(m - 1 - s, p - s), 4)
    elif f is Family.EVEN_SKEW:
        for s in range(p + 1):
            shift = 2 * (m - p) ** 2 - (m - p)
            terms[s] = QPolynomial.monomial(shift) * substitute(q_binomial(m - 1 - s, p - s), 4)
    else:
        for l in range(p // 2 + 1):
            shift = 1 + comb(n - p + 2 * l + 1, 2) - comb(2 * l + 2, 2)
            binom = substitute(q_binomial((n - p + 2 * l - 1) // 2, l), -4)
            poly = QPolynomial.monomial(shift) * binom
            if not poly.is_polynomial():
                raise ArithmeticError(f"negative exponent survives in {case.label()}: {poly}")
            terms[p - 2 * l] = terms.get(p - 2 * l, QPolynomial()) + poly
    out = GrothendieckClassPoly(terms)
    if not out.is_nonnegative():
        raise ArithmeticError(f"non-effective class in {case.label()}: {out}")
    return out


def expected_codim(case: DeterminantalCase) -> int:
    """Standard codimension of Z_p in X."""
    f, n, p, m = case.family, case.n, case.p, case.m
    if f is Family.GENERIC:
        return (m - p) * (n - p)
    if f in (Family.ODD_SKEW, Family.EVEN_SKEW):
        return comb(n - 2 * p, 2)
    return comb(n - p + 1, 2)


def codim_and_lcdef(case: DeterminantalCase) -> tuple[int, int]:
    """Codimension read as the lowest exponent of H_p(q), lcdef as the spread."""
    poly = local_cohomology_poly(case)
    codim = poly.min_degree()
    if codim != expected_codim(case):
        raise ArithmeticError(
            f"{case.label()}: lowest degree {codim} disagrees with codimension {expected_codim(case)}"
        )
    return codim, poly.max_degree() - codim


def is_hypersurface_case(case: DeterminantalCase) -> bool:
    f, n, p, m = case.family, case.n, case.p, case.m
    if f is Family.GENERIC:
        return m == n == p + 1
    if f is Family.EVEN_SKEW:
        return m == p + 1
    if f is Family.SYMMETRIC:
        return n == p + 1
    return False


def _require_symmetric_range(case: DeterminantalCase) -> None:
    if case.family is Family.SYMMETRIC and case.p < 2:
        raise ValueError("symmetric invariants need p >= 2 (Z_1 is a rational homology manifold)")


def lcdef_gen_pos(case: DeterminantalCase) -> int:
    _require_symmetric_range(case)
    f, n, p, m = case.family, case.n, case.p, case.m
    if f is Family.GENERIC:
        value = m + n - 2 * p - 2
    elif f is Family.ODD_SKEW:
        value = 4 * (m - p - 1) + 2
    elif f is Family.EVEN_SKEW:
        value = 4 * (m - p - 1)
    else:
        value = 2 * (n - p - 1)
    _, lcdef = codim_and_lcdef(case)
    if value > lcdef:
        raise ArithmeticError(f"{case.label()}: lcdef_gen^>0 = {value} exceeds lcdef = {lcdef}")
    return value


EMPTY = None


def ncci_locus(case: DeterminantalCase) -> int | None:
    """Index s of the stratum Z_s forming the non-CCI locus, or EMPTY (None)."""
    _require_symmetric_range(case)
    if is_hypersurface_case(case):
        return EMPTY
    if case.family is Family.SYMMETRIC:
        return case.p - 2
    return case.p - 1


def describe_locus(locus: int | None) -> str:
    return "empty" if locus is EMPTY else f"Z_{locus}"


def c_range(case: DeterminantalCase) -> frozenset[ExtendedLevel]:
    """Possible values of c(Z_p); a singleton where it is pinned down."""
    _require_symmetric_range(case)
    if is_hypersurface_case(case):
        return frozenset({INF})
    if case.family is Family.GENERIC:
        return frozenset({ExtendedLevel.finite(0)})
    return frozenset({ExtendedLevel.finite(0), ExtendedLevel.finite(1)})


def stratum_codim(case: DeterminantalCase, s: int) -> int:
    """codim of Z_s inside Z_p (same family, rank parameter s <= p)."""
    f, n, p, m = case.family, case.n, case.p, case.m
    if f is Family.GENERIC:
        dim = lambda r: m * n - (m - r) * (n - r)
    elif f in (Family.ODD_SKEW, Family.EVEN_SKEW):
        dim = lambda r: comb(n, 2) - comb(n - 2 * r, 2)
    else:
        dim = lambda r: comb(n + 1, 2) - comb(n - r + 1, 2)
    return dim(p) - dim(s)


def c_upper_bound(case: DeterminantalCase) -> ExtendedLevel:
    """Largest c allowed by lcdef_gen^{>0} + 2c + 3 <= codim of the non-CCI locus."""
    locus = ncci_locus(case)
    if locus is EMPTY:
        return INF
    room = stratum_codim(case, locus) - lcdef_gen_pos(case) - 3
    return ExtendedLevel.finite(room // 2) if room >= 0 else ExtendedLevel.neg()


def grid_cases(family: str | None = None, generic_max: int = 6, skew_max: int = 9, symmetric_max: int = 6):
    """Every valid case up to the given matrix sizes, optionally one family
    ("generic", "skew" or "symmetric")."""
    if family in (None, "generic"):
        for n in range(2, generic_max + 1):
            for m in range(n, generic_max + 1):
                for p in range(1, n):
                    yield DeterminantalCase.generic(m, n, p)
    if family in (None, "skew"):
        for n in range(3, skew_max + 1):
            for p in range(1, n // 2):
                yield DeterminantalCase.skew(n, p)
    if family in (None, "symmetric"):
        for n in range(2, symmetric_max + 1):
            for p in range(1, n):
                yield DeterminantalCase.symmetric(n, p)
