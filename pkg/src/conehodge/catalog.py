"""
Builtin Hodge diamonds and the JSON diamond file format.

File format::

    {"dim": 2,
     "hodge": [[0, 0, 0, 1], [2, 1, 1, 2]],
     "rhm": true,
     "hrh_bound": "inf"}

Each hodge row is [k, p, q, h^{p,q}] with k = p + q.  Rows for degrees
above the middle may be left out; they are filled in by Poincare duality,
and a row that disagrees with its dual partner is an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .determinantal import q_binomial
from .hodge import HodgeDiamond, kunneth_product, validate_diamond
from .levels import INF, ZERO, ExtendedLevel


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    diamond: HodgeDiamond
    provenance: str
    rhm: bool = True
    hrh_bound: ExtendedLevel = INF


class DiamondParseError(ValueError):
    pass


def _diagonal(d: int, counts: list[int]) -> HodgeDiamond:
    return validate_diamond(HodgeDiamond.from_numbers(d, {(p, p): c for p, c in enumerate(counts)}))


def projective_space(n: int) -> HodgeDiamond:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    return _diagonal(n, [1] * (n + 1))


def curve(genus: int) -> HodgeDiamond:
    if genus < 0:
        raise ValueError("genus must be >= 0")
    numbers = {(0, 0): 1, (1, 1): 1, (1, 0): genus, (0, 1): genus}
    return validate_diamond(HodgeDiamond.from_numbers(1, numbers))


def quadric(n: int) -> HodgeDiamond:
    """Smooth quadric hypersurface of dimension n: P^n numbers plus one extra
    middle class when n is even."""
    if n < 1:
        raise ValueError("quadric needs n >= 1")
    counts = [1] * (n + 1)
    if n % 2 == 0:
        counts[n // 2] += 1
    return _diagonal(n, counts)


def grassmannian(k: int, n: int) -> HodgeDiamond:
    """Gr(k, n): h^{p,p} counts partitions with p cells in a k x (n-k) box."""
    if not 0 < k < n:
        raise ValueError("grassmannian needs 0 < k < n")
    poly = q_binomial(n, k)
    d = k * (n - k)
    return _diagonal(d, [poly[p] for p in range(d + 1)])


def product(*factors: HodgeDiamond) -> HodgeDiamond:
    out = factors[0]
    for f in factors[1:]:
        out = kunneth_product(out, f)
    return validate_diamond(out)


def _builtins() -> dict[str, tuple[HodgeDiamond, str]]:
    out = {}
    for n in (1, 2, 3, 4):
        out[f"p{n}"] = (projective_space(n), f"projective_space({n})")
    for n in (1, 2, 3, 4):
        out[f"quadric{n}"] = (quadric(n), f"quadric({n})")
    for g in (0, 1, 2, 3):
        out[f"curve{g}"] = (curve(g), f"curve({g})")
    out["elliptic"] = (curve(1), "curve(1)")
    out["p1xp1"] = (product(projective_space(1), projective_space(1)), "product(p1, p1)")
    out["p1xe"] = (product(projective_space(1), curve(1)), "product(p1, curve(1))")
    out["p2xp1"] = (product(projective_space(2), projective_space(1)), "product(p2, p1)")
    out["p3xp1"] = (product(projective_space(3), projective_space(1)), "product(p3, p1)")
    out["exp1"] = (product(curve(1), projective_space(1)), "product(curve(1), p1)")
    out["gr24"] = (grassmannian(2, 4), "grassmannian(2, 4)")
    out["gr25"] = (grassmannian(2, 5), "grassmannian(2, 5)")
    return out


_CATALOG = {name: CatalogEntry(name, d, prov) for name, (d, prov) in sorted(_builtins().items())}

# entries swept by the cross-validation suite
SWEEP_NAMES = (
    "p1", "p2", "p3",
    "quadric1", "quadric2", "quadric3", "quadric4",
    "curve0", "curve1", "curve2", "curve3",
    "p1xp1", "p1xe", "gr24",
)


def names() -> list[str]:
    return list(_CATALOG)


def get(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(_CATALOG)}") from None


def entries() -> list[CatalogEntry]:
    return list(_CATALOG.values())


# -- files -----------------------------------------------------------------------------


def parse_diamond(data: dict, source: str = "<data>") -> CatalogEntry:
    if not isinstance(data, dict):
        raise DiamondParseError(f"{source}: top level must be an object")
    try:
        d = data["dim"]
        rows = data["hodge"]
    except KeyError as exc:
        raise DiamondParseError(f"{source}: missing field {exc.args[0]!r}") from None
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise DiamondParseError(f"{source}: field 'dim' must be a nonnegative integer")
    if not isinstance(rows, list):
        raise DiamondParseError(f"{source}: field 'hodge' must be a list")

    rhm = data.get("rhm", True)
    if not isinstance(rhm, bool):
        raise DiamondParseError(f"{source}: field 'rhm' must be true or false")
    default_bound = INF if rhm else ZERO
    try:
        bound = ExtendedLevel.parse(data.get("hrh_bound", default_bound))
    except ValueError:
        raise DiamondParseError(f"{source}: field 'hrh_bound' must be an integer or \"inf\"") from None
    if bound.is_neg:
        raise DiamondParseError(f"{source}: field 'hrh_bound' must be >= 0")

    given: dict[tuple[int, int], int] = {}
    for i, row in enumerate(rows):
        where = f"{source}: hodge[{i}]"
        if (not isinstance(row, list) or len(row) != 4
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in row)):
            raise DiamondParseError(f"{where}: expected [k, p, q, dim] integers, got {row!r}")
        k, p, q, v = row
        if p + q != k:
            raise DiamondParseError(f"{where}: degree {k} does not equal p + q = {p + q}")
        if not 0 <= k <= 2 * d:
            raise DiamondParseError(f"{where}: degree {k} outside 0..{2 * d}")
        if v < 0:
            raise DiamondParseError(f"{where}: negative dimension {v}")
        if given.get((p, q), v) != v:
            raise DiamondParseError(f"{where}: h^{{{p},{q}}} given twice with different values")
        given[(p, q)] = v

    numbers = dict(given)
    for (p, q), v in given.items():
        dual = (d - p, d - q)
        if dual in given and given[dual] != v:
            raise DiamondParseError(
                f"{source}: h^{{{p},{q}}}={v} conflicts with its dual h^{{{dual[0]},{dual[1]}}}={given[dual]}"
            )
        numbers.setdefault(dual, v)
    diamond = validate_diamond(HodgeDiamond.from_numbers(d, numbers))
    name = str(data.get("name", Path(source).stem))
    return CatalogEntry(name, diamond, f"file:{source}", rhm, bound)


def load_entry(path) -> CatalogEntry:
    path = Path(path)
    text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiamondParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_diamond(data, str(path))


def load_diamond(path) -> HodgeDiamond:
    return load_entry(path).diamond


def diamond_to_json(diamond: HodgeDiamond, rhm: bool = True, hrh_bound: ExtendedLevel = INF,
                    name: str | None = None) -> dict:
    rows = [[k, p, q, v] for k, hs in enumerate(diamond.levels) for (p, q), v in hs.items()]
    out = {"dim": diamond.dim, "hodge": rows, "rhm": rhm, "hrh_bound": hrh_bound.to_json()}
    if name:
        out = {"name": name, **out}
    return out


def save_diamond(diamond: HodgeDiamond, path, rhm: bool = True, hrh_bound: ExtendedLevel = INF) -> None:
    Path(path).write_text(json.dumps(diamond_to_json(diamond, rhm, hrh_bound), indent=1) + "\n")
