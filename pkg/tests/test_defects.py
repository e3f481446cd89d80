import pytest
from hypothesis import given
from hypothesis import strategies as st

from osculant.defects import (
    TheoremVerdict,
    check_jacobian_chain,
    check_theorem_A,
    check_theorem_B,
    defect_report,
    dual_variety_dim,
    gauss_image_dim,
    osculating_defect,
    tan_variety_dim,
    tangent_lemma_check,
)
from osculant.jets import SamplingConfig, osc_dim

from conftest import CATALOG, from_strings, variety
from oracles import Oracle


class TestOsculatingVariety:
    @pytest.mark.parametrize("name, expdim, dim, o", [
        ("veronese2", 4, 4, 0), ("cone_veronese", 6, 5, 1), ("tangentdev_rnc4", 4, 3, 1)])
    def test_tangent_defect_examples(self, name, expdim, dim, o):
        rep = defect_report(variety(name), 1)
        assert (rep.expdim, rep.tan_dim, rep.o) == (expdim, dim, o)
        assert osculating_defect(variety(name), 1) == o

    @pytest.mark.parametrize("name", CATALOG)
    def test_defect_bounds_and_lemma_consequence(self, name):
        p = variety(name)
        for t in range(1, 5):
            tan = tan_variety_dim(p, t)
            assert tan <= min(p.k + osc_dim(p, t), p.N)
            assert tan_variety_dim(p, t - 1) <= osc_dim(p, t)

    def test_order_zero_is_the_variety(self):
        assert tan_variety_dim(variety("cone_v3p2"), 0) == 3


class TestGaussAndDual:
    @pytest.mark.parametrize("name, t, h", [
        ("rnc(4)", 1, 1), ("cone_rnc4", 1, 1), ("cone_veronese", 1, 2), ("tangentdev_rnc4", 1, 1),
        ("veronese2", 1, 2), ("segre21", 1, 3), ("plane_cubic_p3", 2, 0)])
    def test_examples(self, name, t, h):
        assert gauss_image_dim(variety(name), t) == h
        assert gauss_image_dim(variety(name), t, "symbolic") == h

    def test_cone_rnc4_dual(self):
        assert dual_variety_dim(variety("cone_rnc4"), 1) == 2

    def test_full_osculation_has_no_dual(self):
        assert dual_variety_dim(variety("veronese2"), 2) == -1

    @pytest.mark.parametrize("name", CATALOG)
    def test_report_invariants(self, name):
        p = variety(name)
        for t in range(1, 5):
            r = defect_report(p, t)
            assert 0 <= r.o and 0 <= r.h <= p.k
            if r.d < p.N:
                assert p.N - r.d - 1 <= r.dual_dim <= p.N - r.d - 1 + p.k
                assert r.dual_degenerate == (r.dual_dim < p.N - 1 - r.d + p.k)
            else:
                assert r.dual_dim == -1 and r.dual_degenerate is None


@pytest.mark.parametrize("name", CATALOG)
def test_agrees_with_independent_oracle(name):
    from osculant.parser import parametrization_to_dict

    doc = parametrization_to_dict(variety(name))
    oracle = Oracle(doc["k"], doc["coordinates"])
    p = variety(name)
    for t in range(1, 4):
        r = defect_report(p, t)
        assert (r.d, r.tan_dim, r.o, r.h, r.dual_dim) == (
            oracle.d(t), oracle.tan_dim(t), oracle.o(t), oracle.h(t), oracle.dual_dim(t))


class TestTheoremA:
    def test_plane_curve(self):
        v = check_theorem_A(variety("plane_cubic_p3"), 3)
        assert v.applicable and v.passed
        assert v.inputs["ell"] == 1
        assert any("plane curve" in n for n in v.notes)

    def test_cone_rnc4(self):
        v = check_theorem_A(variety("cone_rnc4"), 2)
        assert v.passed and v.inputs["o_prev"] >= 1 and v.inputs["h"] <= 1

    def test_cone_rnc5(self):
        assert check_theorem_A(variety("cone_rnc5"), 3).passed

    def test_developable_note(self):
        v = check_theorem_A(variety("tangentdev_rnc4"), 2)
        assert v.passed and any("developable P^1-bundle" in n for n in v.notes)

    def test_not_applicable_without_small_form(self):
        v = check_theorem_A(variety("cone_veronese"), 2)
        assert not v.applicable and v.status == "not-applicable" and v.passed is None

    def test_capped_expected_dimension_is_not_applicable(self):
        v = check_theorem_A(variety("linear(3,5)"), 2)
        assert not v.applicable and "capped" in v.notes[0]

    def test_needs_order_two(self):
        with pytest.raises(ValueError):
            check_theorem_A(variety("rnc(3)"), 1)


class TestTheoremB:
    def test_cone_veronese_both_directions(self):
        v = check_theorem_B(variety("cone_veronese"), 1)
        assert v.status == "pass"
        assert v.inputs["forward"] is True and v.inputs["reverse"] is True
        assert (v.inputs["ell"], v.inputs["Delta"], v.inputs["jacobian_rank"]) == (1, 2, 2)

    @pytest.mark.parametrize("name", ["cone_rnc4", "tangentdev_rnc4"])
    def test_gate_closed(self, name):
        v = check_theorem_B(variety(name), 1)
        assert v.status == "not-applicable"
        assert "dimension hypothesis" in v.notes[0]

    def test_reverse_with_zero_defect(self):
        v = check_theorem_B(variety("veronese2"), 1)
        assert v.status == "pass" and v.inputs["ell_from_rank"] == 0 and v.inputs["forward"] is None


@pytest.mark.parametrize("name", CATALOG)
def test_theorem_suites(name):
    p = variety(name)
    for t in range(1, 5):
        assert tangent_lemma_check(p, t).status == "pass"
        assert check_theorem_B(p, t).status != "fail"
        if t >= 2:
            assert check_theorem_A(p, t).status != "fail"
            chain = check_jacobian_chain(p, t)
            assert chain.status == "pass" and chain.inputs["points"] == 5


def test_chain_nontrivial_on_cone_v3p2():
    v = check_jacobian_chain(variety("cone_v3p2"), 3)
    assert v.passed and v.inputs["prev_is_proper"] and v.inputs["Delta_prev"] == 2


def test_chain_on_harmonic_surface(harmonic_surface):
    assert check_jacobian_chain(harmonic_surface, 3).passed


def test_verdict_roundtrip():
    v = check_theorem_A(variety("tangentdev_rnc4"), 2)
    assert TheoremVerdict.from_dict(v.to_dict()) == v


@given(st.integers(0, 50))
def test_determinism(seed):
    cfg = SamplingConfig(seed=seed)
    a = from_strings("s", 2, ["u1", "u1^2", "u1^3", "u1^4 + u2"])
    b = from_strings("s", 2, ["u1", "u1^2", "u1^3", "u1^4 + u2"])
    assert defect_report(a, 1, config=cfg) == defect_report(b, 1, config=cfg)
    assert check_theorem_A(a, 2, config=cfg) == check_theorem_A(b, 2, config=cfg)
