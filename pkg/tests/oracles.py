"""
Independent reference computations used by the tests.

None of these call the closed forms they are compared against.  They work
from raw Hodge numbers, hard Lefschetz (L^j : H^m -> H^{m+2j} is injective
when m + j <= d and surjective when m + j >= d) and brute-force counting.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from conehodge.hodge import HodgeDiamond, PureHodgeStructure, kunneth_product
from conehodge.levels import INF, ExtendedLevel


def diagonal(d, counts):
    return HodgeDiamond.from_numbers(d, {(p, p): c for p, c in enumerate(counts)})


def pn(n):
    return diagonal(n, [1] * (n + 1))


def kernel_by_dimensions(diamond: HodgeDiamond, j: int, c: int) -> dict:
    """ker(L^j) on H^{d+c-j}, bigraded, from Hodge numbers alone."""
    d = diamond.dim
    m = d + c - j
    if not 0 <= m <= 2 * d:
        return {}
    out = {}
    for (p, q), v in diamond[m].items():
        if m + j >= d:  # L^j surjective, so the kernel is source minus target
            k = v - diamond.h(m + 2 * j, p + j, q + j)
        else:
            k = 0
        if k:
            out[(p, q)] = k
    return out


def cokernel_by_dimensions(diamond: HodgeDiamond, j: int, c: int) -> dict:
    """coker(L^j : H^{d-c-j} -> H^{d-c+j}) from Hodge numbers alone."""
    d = diamond.dim
    m = d - c + j
    if not 0 <= m <= 2 * d:
        return {}
    out = {}
    for (p, q), v in diamond[m].items():
        if m - j <= d:  # source degree m - 2j with (m - 2j) + j <= d: injective
            k = v - diamond.h(m - 2 * j, p - j, q - j)
        else:
            k = 0
        if k:
            out[(p, q)] = k
    return out


def ih_by_subtraction(base: HodgeDiamond, rank: int) -> dict[int, dict]:
    """IH^j of the cone over (Y, E) from H^j(P(E)) minus H^{2n-j}(P(E))(n-j).

    P(E) has the Hodge numbers of Y x P^{rank-1}; X~ retracts onto it and
    the isolated-point correction is the dual class in degrees below n.
    """
    total = kunneth_product(base, pn(rank - 1)) if rank > 1 else base
    n = total.dim + 1
    out = {}
    for j in range(2 * n + 1):
        if j >= n:
            continue
        cur = dict(total[j].as_dict())
        for (p, q), v in total[2 * n - j].items():
            key = (p - (n - j), q - (n - j))
            cur[key] = cur.get(key, 0) - v
        assert all(v >= 0 for v in cur.values()), (j, cur)
        cur = {k: v for k, v in cur.items() if v}
        if cur:
            out[j] = cur
    return out


def c_from_profile_types(profile) -> ExtendedLevel:
    """c(X) read from the Hodge types of H^{q+j}_X(O), j >= 1: the Hodge
    filtration starts at level n + q - 1 - (largest p)."""
    setup = profile.setup
    ps = [p for j in profile.by_j for (p, _), _v in profile.structure(j).items()]
    if not ps:
        return INF
    return ExtendedLevel.finite(setup.n + setup.embed_codim - 1 - max(ps))


def hrh_from_kernels(diamond: HodgeDiamond, delta: int, c: ExtendedLevel) -> ExtendedLevel:
    """min(c, level of I-lambda_1), with I-lambda_1 read from ker(L) on H^{n-1}
    by Hodge numbers; piece (x, y) sits at p = -y."""
    ker = kernel_by_dimensions(diamond, 1, delta + 1)
    if not ker:
        return c
    top = max(-y for (_, y) in ker)
    return min(c, ExtendedLevel.finite(-top - 1))


def partitions_in_box(rows: int, cols: int) -> dict[int, int]:
    """Number of partitions fitting in a rows x cols box, by size."""
    out: dict[int, int] = {}
    for parts in combinations_with_replacement(range(cols + 1), rows):
        size = sum(parts)
        out[size] = out.get(size, 0) + 1
    return out


def q_binomial_by_product(a: int, b: int):
    from conehodge.determinantal import QPolynomial

    num = QPolynomial.one()
    den = QPolynomial.one()
    for i in range(b):
        num = num * (QPolynomial.one() - QPolynomial.monomial(a - i))
        den = den * (QPolynomial.one() - QPolynomial.monomial(i + 1))
    return num.exact_div(den)


def hodge_dict(hs: PureHodgeStructure) -> dict:
    return hs.as_dict()
