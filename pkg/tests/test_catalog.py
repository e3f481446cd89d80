import pytest

from osculant.catalog import catalog_expected, catalog_get, catalog_names
from osculant.defects import THEOREMS, defect_report
from osculant.errors import UnknownVariety
from osculant.jets import osc_dim, profile
from osculant.parser import parametrization_to_dict

from conftest import CATALOG

REQUIRED = ["plane_cubic_p3", "veronese2", "v3p2", "segre21", "cone_rnc4", "cone_rnc5",
            "cone_veronese", "cone_v3p2", "tangentdev_rnc3", "tangentdev_rnc4"]


def test_required_names():
    names = catalog_names()
    assert len(names) == len(set(names))
    for n in REQUIRED + [f"rnc({i})" for i in range(1, 7)]:
        assert n in names


@pytest.mark.parametrize("name, k, N, coords", [
    ("rnc(4)", 1, 4, ["u1", "u1^2", "u1^3", "u1^4"]),
    ("cone_veronese", 3, 6, ["u1", "u2", "u1^2", "u1*u2", "u2^2", "u3"]),
    ("tangentdev_rnc4", 2, 4, ["u1 + u2", "u1^2 + 2*u1*u2", "u1^3 + 3*u1^2*u2", "u1^4 + 4*u1^3*u2"]),
])
def test_definitions(name, k, N, coords):
    doc = parametrization_to_dict(catalog_get(name).parametrization)
    assert (doc["k"], doc["N"], doc["coordinates"]) == (k, N, coords)


def test_linear_family():
    p = catalog_get("linear(4, 7)").parametrization
    assert (p.k, p.N, p.name) == (4, 7, "linear(4,7)")
    with pytest.raises(UnknownVariety):
        catalog_get("linear(5,3)")


@pytest.mark.parametrize("bad", ["rnc(7)", "rnc(0)", "hyperboloid", ""])
def test_unknown(bad):
    with pytest.raises(UnknownVariety):
        catalog_get(bad)


@pytest.mark.parametrize("name", CATALOG)
def test_immersion(name):
    p = catalog_get(name).parametrization
    assert osc_dim(p, 1) == p.k


@pytest.mark.parametrize("name", CATALOG)
def test_provenance_present(name):
    entry = catalog_get(name)
    if entry.expected:
        assert entry.provenance["source"] == "symbolic oracle"


@pytest.mark.parametrize("name", CATALOG)
def test_frozen_table_matches_symbolic_mode(name):
    p = catalog_get(name).parametrization
    exp = catalog_expected(name)
    prof = profile(p, 5, "symbolic")
    for t in range(1, 6):
        rep = defect_report(p, t, "symbolic")
        got = {"d": prof[t].d, "delta": prof[t].delta, "Delta": prof[t].Delta, "o": rep.o,
               "h": rep.h, "dual": rep.dual_dim, "tan": rep.tan_dim}
        assert got == {key: exp[key][t - 1] for key in got}
    passing = set()
    for t in range(1, 5):
        for th, check in THEOREMS.items():
            if th in ("A", "chain") and t < 2:
                continue
            v = check(p, t, "symbolic")
            assert v.status != "fail"
            if v.status == "pass":
                passing.add(f"{th}_{t}")
    assert passing == set(exp["pass"])
