import json

import pytest

from conehodge import catalog
from conehodge.catalog import DiamondParseError
from conehodge.determinantal import q_binomial
from conehodge.hodge import LefschetzError, kunneth_product
from conehodge.levels import INF, ZERO, ExtendedLevel

from oracles import diagonal, pn


def _write(tmp_path, data, name="x.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return path


class TestBuilders:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_projective_space(self, n):
        assert catalog.projective_space(n) == pn(n)

    def test_curves(self):
        assert catalog.curve(0) == pn(1)
        assert catalog.curve(1) == catalog.get("elliptic").diamond
        assert catalog.curve(2).h(1, 1, 0) == 2

    def test_quadrics(self):
        assert catalog.quadric(2) == kunneth_product(pn(1), pn(1))
        assert catalog.quadric(3) == pn(3)
        assert catalog.quadric(4) == diagonal(4, [1, 1, 2, 1, 1])

    def test_grassmannians(self):
        assert catalog.grassmannian(1, 3) == pn(2)
        assert catalog.grassmannian(2, 4) == diagonal(4, [1, 1, 2, 1, 1])
        g25 = catalog.grassmannian(2, 5)
        assert [g25.h(2 * p, p, p) for p in range(7)] == [q_binomial(5, 2)[e] for e in range(7)]

    def test_grassmannian_duality(self):
        assert catalog.grassmannian(2, 5) == catalog.grassmannian(3, 5)

    def test_product(self):
        assert catalog.product(pn(1), pn(1), pn(1)).betti() == [1, 0, 3, 0, 3, 0, 1]

    @pytest.mark.parametrize("fn,arg", [(catalog.projective_space, 0), (catalog.curve, -1), (catalog.quadric, 0)])
    def test_builders_reject(self, fn, arg):
        with pytest.raises(ValueError):
            fn(arg)


class TestBuiltins:
    def test_names_sorted_and_complete(self):
        names = catalog.names()
        assert names == sorted(names)
        assert set(catalog.SWEEP_NAMES) <= set(names)
        assert {"p1xp1", "elliptic", "p3xp1", "gr24"} <= set(names)

    def test_unknown_name_lists_known(self):
        with pytest.raises(KeyError) as info:
            catalog.get("nope")
        assert "p1xp1" in str(info.value)

    def test_entries_carry_provenance(self):
        assert all(e.provenance for e in catalog.entries())


class TestFiles:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "p2.json"
        catalog.save_diamond(pn(2), path)
        assert catalog.load_diamond(path) == pn(2)

    def test_roundtrip_keeps_flags(self, tmp_path):
        path = tmp_path / "e.json"
        catalog.save_diamond(catalog.curve(1), path, rhm=False, hrh_bound=ExtendedLevel.finite(2))
        entry = catalog.load_entry(path)
        assert (entry.rhm, entry.hrh_bound) == (False, ExtendedLevel.finite(2))
        assert entry.name == "e"

    def test_duality_completion(self, tmp_path):
        path = _write(tmp_path, {"dim": 2, "hodge": [[0, 0, 0, 1], [2, 1, 1, 2]]})
        assert catalog.load_diamond(path) == kunneth_product(pn(1), pn(1))

    def test_conflicting_dual(self, tmp_path):
        path = _write(tmp_path, {"dim": 1, "hodge": [[0, 0, 0, 1], [2, 1, 1, 2]]})
        with pytest.raises(DiamondParseError, match="conflicts with its dual"):
            catalog.load_diamond(path)

    def test_malformed_weight_key(self, tmp_path):
        path = _write(tmp_path, {"dim": 1, "hodge": [[1, 0, 0, 1]]})
        with pytest.raises(DiamondParseError, match="p \\+ q"):
            catalog.load_diamond(path)

    def test_lefschetz_violation(self, tmp_path):
        path = _write(tmp_path, {"dim": 2, "hodge": [[0, 0, 0, 1], [2, 1, 1, 0]]})
        with pytest.raises(LefschetzError):
            catalog.load_diamond(path)

    @pytest.mark.parametrize(
        "data,match",
        [
            ({"hodge": []}, "missing field 'dim'"),
            ({"dim": "2", "hodge": []}, "'dim'"),
            ({"dim": 1, "hodge": [[0, 0, 0]]}, "expected"),
            ({"dim": 1, "hodge": [[0, 0, 0, -1]]}, "negative"),
            ({"dim": 1, "hodge": [[3, 2, 1, 1]]}, "outside"),
            ({"dim": 1, "hodge": [[0, 0, 0, 1]], "rhm": "yes"}, "'rhm'"),
            ({"dim": 1, "hodge": [[0, 0, 0, 1]], "hrh_bound": "neg"}, ">= 0"),
            ([1, 2], "object"),
        ],
    )
    def test_parse_errors(self, tmp_path, data, match):
        with pytest.raises(DiamondParseError, match=match):
            catalog.load_diamond(_write(tmp_path, data))

    def test_json_syntax_error_position(self, tmp_path):
        path = _write(tmp_path, '{"dim": 1,\n "hodge": [}')
        with pytest.raises(DiamondParseError, match="line 2"):
            catalog.load_diamond(path)

    def test_rhm_defaults(self, tmp_path):
        base = {"dim": 1, "hodge": [[0, 0, 0, 1], [1, 1, 0, 1], [1, 0, 1, 1]]}
        assert catalog.load_entry(_write(tmp_path, base, "a.json")).hrh_bound == INF
        entry = catalog.load_entry(_write(tmp_path, {**base, "rhm": False}, "b.json"))
        assert entry.hrh_bound == ZERO
