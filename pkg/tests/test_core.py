"""
Tests for dragon parameters, closed-form points and codings
"""

import math

import numpy as np
import pytest

from dragon_hull.core import (
    DRAGON_PERIOD,
    Coding,
    PointFamily,
    PointLabel,
    apply_word,
    arg,
    candidate_set,
    coded_point,
    compose_affine,
    ensure_finite,
    label,
    make_params,
    map_f1,
    map_f2,
    parse_word,
    point_b,
    point_by_label,
    point_w,
    point_z,
    validate_word,
    vertex_coding,
)
from dragon_hull.errors import DomainError, InvalidSymbolError

PI_4 = math.pi / 4
ETA_4 = math.acos(2.0**-0.75)


@pytest.fixture
def p45():
    return make_params(PI_4)


@pytest.mark.unit
class TestMakeParams:
    """Derived scalars a, |a|, c"""

    def test_quarter_turn_values(self, p45):
        assert p45.a == pytest.approx(0.5 - 0.5j, abs=1e-15)
        assert p45.mod_a == pytest.approx(1 / math.sqrt(2), abs=1e-15)
        assert p45.c == pytest.approx(4 / 3, abs=1e-15)

    @pytest.mark.parametrize("eta", [0.01, 0.3, PI_4, 1.0, math.pi / 3 - 1e-9])
    def test_identities(self, eta):
        residuals = make_params(eta).identity_residuals()
        assert residuals['a_plus_conj'] <= 1e-12
        assert residuals['mod_cos'] <= 1e-12

    @pytest.mark.parametrize("eta", [0.0, -0.1, math.pi / 3, 2.0, float("nan"), float("inf")])
    def test_rejects_out_of_domain(self, eta):
        with pytest.raises(DomainError):
            make_params(eta)

    def test_domain_error_is_value_error(self):
        with pytest.raises(ValueError):
            make_params(5.0)

    def test_ensure_finite_rejects_nan(self):
        with pytest.raises(DomainError):
            ensure_finite(complex(float("nan"), 0.0))

    def test_arg_range(self):
        assert arg(1 + 0j) == 0.0
        assert arg(-1j) == pytest.approx(3 * math.pi / 2)
        assert 0.0 <= arg(complex(1.0, -1e-300)) < 2 * math.pi


@pytest.mark.unit
class TestClosedFormPoints:
    """z_k, w_k, b_k at eta = pi/4"""

    EXPECTED = {
        "b0": 5 / 6 - 0.5j,
        "z0": 2 / 3 - 2j / 3,
        "z1": -2j / 3,
        "z2": -1 / 3 - 1j / 3,
        "z3": -1 / 3 + 0j,
        "z4": -1 / 6 + 1j / 6,
        "w1": 2 / 3 + 1j / 3,
        "w2": 1 + 1j / 3,
        "w3": 7 / 6 + 1j / 6,
        "w4": 7 / 6 + 0j,
    }

    def test_candidate_set_values(self, p45):
        points = candidate_set(p45, 4)
        assert [str(lp.label) for lp in points] == list(self.EXPECTED)
        for lp in points:
            assert abs(lp.value - self.EXPECTED[str(lp.label)]) <= 1e-12

    def test_w0_is_real(self, p45):
        assert abs(point_w(p45, 0) - 1 / 3) <= 1e-12

    def test_candidate_set_size(self, p45):
        for k in range(1, 8):
            assert len(candidate_set(p45, k)) == 2 * k + 2

    def test_candidate_set_needs_positive_k(self, p45):
        with pytest.raises(DomainError):
            candidate_set(p45, 0)

    @pytest.mark.parametrize("eta", [0.2, 0.5, PI_4, 1.0])
    def test_recursions(self, eta):
        p = make_params(eta)
        for k in range(8):
            assert abs(map_f1(p, point_z(p, k)) - point_z(p, k + 1)) <= 1e-12
            assert abs(map_f2(p, point_z(p, k)) - point_w(p, k)) <= 1e-12
            assert abs(map_f2(p, point_w(p, k + 1)) - point_b(p, k)) <= 1e-12

    def test_b1_equals_z0(self, p45):
        assert abs(point_b(p45, 1) - point_z(p45, 0)) <= 1e-12

    def test_point_by_label(self, p45):
        label = PointLabel.parse("w3")
        assert label.family is PointFamily.W and label.index == 3
        assert point_by_label(p45, label) == point_w(p45, 3)

    def test_label_order(self):
        labels = [PointLabel.parse(text) for text in ("w1", "z2", "b0", "z0")]
        assert [str(label) for label in sorted(labels)] == ["b0", "z0", "z2", "w1"]


@pytest.mark.unit
class TestWords:
    """Word parsing, composition and coded points"""

    def test_parse_forms(self):
        assert parse_word("2211") == (2, 2, 1, 1)
        assert parse_word("2,2,1,1") == (2, 2, 1, 1)
        assert parse_word("  ") == ()

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidSymbolError):
            parse_word("2x1")

    def test_validate_rejects_symbol_outside_alphabet(self):
        with pytest.raises(InvalidSymbolError):
            validate_word([1, 3], alphabet_size=2)

    def test_last_symbol_acts_first(self, p45):
        z = 0.3 + 0.1j
        assert apply_word(p45, [1, 2], z) == pytest.approx(map_f1(p45, map_f2(p45, z)))

    def test_compose_affine_matches_apply(self, p45):
        word = (2, 1, 1, 2, 2)
        lin, off = compose_affine(p45, word)
        for z in (0j, 1 + 0j, 0.25 - 0.5j):
            assert abs(lin * z + off - apply_word(p45, word, z)) <= 1e-12

    def test_apply_word_rejects_bad_symbol(self, p45):
        with pytest.raises(InvalidSymbolError):
            apply_word(p45, [1, 0], 0j)

    def test_empty_period_rejected(self):
        with pytest.raises(DomainError):
            Coding(prefix=(1,), period=())

    def test_coding_str(self):
        assert str(Coding.from_strings("21", "2211")) == "21(2211)^inf"

    @pytest.mark.parametrize("eta", [0.3, PI_4, 0.9])
    def test_vertex_codings_reproduce_points(self, eta):
        p = make_params(eta)
        for lp in candidate_set(p, 5):
            coding = vertex_coding(lp.label)
            assert coding.period == DRAGON_PERIOD
            assert abs(coded_point(p, coding) - lp.value) <= 1e-10

    @pytest.mark.parametrize("eta", [0.3, PI_4])
    @pytest.mark.parametrize("family", ["z", "w", "b"])
    def test_long_prefixes_reproduce_points(self, eta, family):
        p = make_params(eta)
        start = 1 if family == "w" else 0
        for k in range(start, 21):
            point_label = label(family, k)
            expected = point_by_label(p, point_label)
            assert abs(coded_point(p, vertex_coding(point_label)) - expected) <= 1e-10


@pytest.mark.unit
class TestFirstPointBounds:
    """Re z_0, Re w_1 and Im w_1 stay inside (0, 1) below eta_4"""

    @pytest.mark.parametrize("eta", np.linspace(1e-3, ETA_4 - 1e-6, 40))
    def test_unit_interval(self, eta):
        p = make_params(float(eta))
        z0, w1 = point_z(p, 0), point_w(p, 1)
        assert 0.0 < z0.real < 1.0
        assert 0.0 < w1.real < 1.0
        assert 0.0 < w1.imag < 1.0
