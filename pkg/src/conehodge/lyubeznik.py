"""
Hodge-Lyubeznik numbers at the vertex of a contracted exceptional locus.

Indices follow the mixed Hodge module convention:
lambda_{r,s}^{p,q} = dim Gr^F_{-p} Gr^W_{p+q} H^r_x H^{n-s}_X(O), so types are
usually negative.  `classical_view` flips to the decreasing-filtration
picture by (p, q) -> (-p, -q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cone import ConeSetup
from .hodge import PrimitiveDecomposition
from .levels import INF, ExtendedLevel, level_min


@dataclass(frozen=True)
class LyubeznikTable:
    n: int
    entries: dict[tuple[int, int, int, int], int]  # (r, s, p, q) -> lambda
    intersection_entries: dict[tuple[int, int, int], int]  # (r, p, q) -> I-lambda

    def __post_init__(self):
        for table in (self.entries, self.intersection_entries):
            for key, v in table.items():
                if v <= 0:
                    raise ValueError(f"stored entry {key} must be positive, got {v}")

    def check_invariants(self) -> list[str]:
        """Support and symmetry rules every table from this module satisfies."""
        bad = []
        n = self.n
        for (r, s, p, q), v in self.entries.items():
            if s < n and (r != 0 or p + q != 1 - s):
                bad.append(f"lambda_{r},{s}^{p},{q} outside the s<n support")
            if s == n and r <= 1 and r < n:
                bad.append(f"lambda_{r},{n} should vanish for r <= 1")
            if s == n and self.intersection_entries.get((r, p, q), 0) != v:
                bad.append(f"lambda_{r},{n}^{p},{q} differs from I-lambda")
            if self.entries.get((r, s, q, p), 0) != v:
                bad.append(f"lambda_{r},{s} not symmetric at ({p},{q})")
        for (r, p, q), v in self.intersection_entries.items():
            if r < 1 or p + q != r - n:
                bad.append(f"I-lambda_{r}^{p},{q} outside its support")
            if self.intersection_entries.get((r, q, p), 0) != v:
                bad.append(f"I-lambda_{r} not symmetric at ({p},{q})")
            if r >= 2 and self.entries.get((r, n, p, q), 0) != v:
                bad.append(f"I-lambda_{r}^{p},{q} not copied to lambda_{r},{n}")
        return bad

    def classical_view(self) -> dict[tuple[int, int, int, int], int]:
        return {(r, s, -p, -q): v for (r, s, p, q), v in self.entries.items()}


def _add(table: dict, key, v: int) -> None:
    if v:
        table[key] = table.get(key, 0) + v


def hodge_lyubeznik_table(prim: PrimitiveDecomposition, setup: ConeSetup) -> LyubeznikTable:
    if prim.dim != setup.d:
        raise ValueError("primitive data does not match the setup")
    d, delta, n = setup.d, setup.delta, setup.n
    lam: dict = {}
    ilam: dict = {}

    for s in range(2, n):
        if delta <= n - s:
            # h_prim^{-q-a,-p-a}: a piece (x, y) lands at (p, q) = (-y-a, -x-a)
            for a in range(delta + 1):
                for (x, y), v in prim[s - 1 - 2 * a].items():
                    _add(lam, (0, s, -y - a, -x - a), v)
        else:
            base = n - s - delta
            for a in range(n - s + 1):
                # h_prim^{base-q-a, base-p-a}
                for (x, y), v in prim[2 * (base - a) + s - 1].items():
                    _add(lam, (0, s, base - a - y, base - a - x), v)

    for r in range(1, n + 1):
        if r > delta:
            for a in range(delta + 1):
                for (x, y), v in prim[n - r - 2 * a].items():
                    _add(ilam, (r, -y - a, -x - a), v)
        else:
            for a in range(r):
                # h_prim^{d-a+p, d-a+q}: (x, y) lands at (x-d+a, y-d+a)
                for (x, y), v in prim[2 * d - 2 * a + r - n].items():
                    _add(ilam, (r, x - d + a, y - d + a), v)

    for (r, p, q), v in ilam.items():
        if r >= 2:
            lam[(r, n, p, q)] = v
    return LyubeznikTable(n, dict(sorted(lam.items())), dict(sorted(ilam.items())))


def smooth_point_table(n: int) -> LyubeznikTable:
    """Table at a point where X is a rational homology manifold."""
    return LyubeznikTable(n, {(n, n, 0, 0): 1}, {(n, 0, 0): 1})


def classical_lyubeznik(table: LyubeznikTable) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for (r, s, _, _), v in table.entries.items():
        out[(r, s)] = out.get((r, s), 0) + v
    return dict(sorted(out.items()))


def _level_below(ps) -> ExtendedLevel:
    """Largest k with every p in `ps` satisfying p < -k."""
    ps = list(ps)
    if not ps:
        return INF
    return ExtendedLevel.finite(-max(ps) - 1)


def c_from_table(table: LyubeznikTable) -> ExtendedLevel:
    return _level_below(p for (_, s, p, _) in table.entries if s < table.n)


def hrh_discrepancies(table: LyubeznikTable) -> list[tuple[int, int, int]]:
    n = table.n
    keys = {(r, p, q) for (r, p, q) in table.intersection_entries}
    keys |= {(r, p, q) for (r, s, p, q) in table.entries if s == n}
    return sorted(
        key for key in keys
        if table.entries.get((key[0], n, key[1], key[2]), 0) != table.intersection_entries.get(key, 0)
    )


def hrh_from_table(table: LyubeznikTable, c: ExtendedLevel) -> ExtendedLevel:
    return level_min(c, _level_below(p for (_, p, _) in hrh_discrepancies(table)))
