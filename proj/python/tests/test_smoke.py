import cmath
import math

import pytest

import fockradial as fr


def test_enumeration_and_quadrature():
    assert fr.enumerate_multi_indices(2, 1) == [[0, 0], [1, 0], [0, 1]]
    nodes, weights = fr.gauss_hermite(20)
    assert len(nodes) == 20
    assert sum(weights) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert fr.shell_weight([1]) == pytest.approx(1 / math.sqrt(2))


def test_hermite_values():
    assert fr.hermite_eval([0], [0.0]) == pytest.approx(math.pi ** -0.25)
    assert fr.hermite_functions(1, 1.0)[1] == pytest.approx(math.sqrt(2) * math.pi ** -0.25 * math.exp(-0.5))


def test_bargmann_monomial_both_paths():
    f = fr.HermiteExpansion.basis((1, 0))
    F = fr.bargmann(f)
    z = [1 + 1j, 2.0]
    assert F(z) == pytest.approx(1 + 1j)
    samples = fr.SampledFunction.from_expansion(f, 24)
    assert fr.bargmann_of_samples(samples, z) == pytest.approx(1 + 1j, abs=1e-12)
    assert fr.inverse_bargmann(F).terms == {(1, 0): 1 + 0j}


def test_isometry_and_normalization():
    f = fr.HermiteExpansion(2, {(0, 0): 1.0, (2, 1): 0.5j, (1, 3): -2.0})
    F = fr.bargmann(f)
    assert fr.a2_inner_quadrature(F, F).real == pytest.approx(f.norm_squared(), rel=1e-10)
    one = fr.FockSeries.basis((0, 0, 0))
    assert abs(fr.a2_inner_quadrature(one, one) - 1) < 1e-10


def test_radial_pipeline():
    f = fr.preset_h2_shell(2)
    report = fr.radial_test(f)
    assert report.is_radial
    profile = fr.extract_profile(f)
    assert profile.c[1] == pytest.approx(1 / math.sqrt(2))
    z = [0.3 + 0.2j, -0.7j]
    w = z[0] ** 2 + z[1] ** 2
    assert fr.bargmann(f)(z) == pytest.approx(fr.eval_F0(profile, w))
    f0 = fr.reduce_dimension(f)
    assert f0.dim == 1
    assert f0.coefficient([2]) == pytest.approx(1.0)
    assert fr.eval_via_E0(f, [1.0, 0.5]) == pytest.approx(fr.eval_F0(profile, 1.25))


def test_not_radial_is_reported():
    f = fr.HermiteExpansion.basis((1, 0))
    report = fr.radial_test(f)
    assert not report.is_radial
    assert report.odd_mass == pytest.approx(1.0)
    with pytest.raises(fr.NotRadialError):
        fr.reduce_dimension(f)


def test_gaussian_closed_form():
    f = fr.synth_gaussian(1.0, 1, 20)
    C = math.pi ** 0.25 / math.sqrt(1.5)
    z = 1.2 - 0.4j
    assert fr.bargmann(f)([z]) == pytest.approx(C * cmath.exp(-z * z / 6), rel=1e-10)


def test_stft_bridge():
    f = fr.HermiteExpansion(1, {(0,): 1.0, (3,): 1 - 1j})
    F = fr.bargmann(f)
    x, xi = [0.4], [-0.9]
    assert fr.stft_from_bargmann(F, x, xi) == pytest.approx(fr.stft_gaussian(f, x, xi), abs=1e-12)
    assert fr.bridge_residual(f, [([0.5], [1.0]), ([-1.0], [0.0])]) < 1e-8


def test_json_round_trip_and_errors():
    f = fr.HermiteExpansion(2, {(2, 0): 1.0, (0, 2): 1.0})
    g = fr.HermiteExpansion.from_json(f.to_json())
    assert g.terms == f.terms
    assert fr.FockSeries.from_json(fr.bargmann(f).to_json()).terms == f.terms
    with pytest.raises(fr.FormatError):
        fr.FockSeries.from_json(f.to_json())
    with pytest.raises(ValueError):
        fr.HermiteExpansion(1, {(1, 1): 1.0})


def test_verify_is_deterministic():
    ok, text = fr.verify(3, ["normalization"])
    assert ok
    assert fr.verify(3, ["normalization"]) == (ok, text)
    assert "monomial" in fr.verification_check_names()
