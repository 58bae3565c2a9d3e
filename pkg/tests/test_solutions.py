"""Base solution families: frozen values, derivative cross-checks, combinations."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from bachelier_symmetries.errors import InvalidParameter, RangeError
from bachelier_symmetries.solutions import (
    BaseCombo,
    ComboSolution,
    ModelParams,
    SolutionTerm,
    eval_combo,
    eval_term,
    eval_term_partials,
)
from bachelier_symmetries.pde_verify import default_step
from bachelier_symmetries.reference_forms import worked_combo

P = ModelParams(r=0.05, sigma=0.2)
P_NEG = ModelParams(r=-0.03, sigma=0.2)
POINTS = [(0.0, 0.1), (0.3, 0.7), (0.8, -1.4), (1.0, 2.0), (0.5, 0.0)]


class TestModelParams:
    def test_accepts_negative_rate(self):
        assert ModelParams(-0.03, 0.2).r == -0.03

    @pytest.mark.parametrize("r,sigma", [(0.0, 0.2), (0.05, 0.0), (0.05, -0.1),
                                         (float("nan"), 0.2), (0.05, float("inf"))])
    def test_rejects_bad_values(self, r, sigma):
        with pytest.raises(InvalidParameter):
            ModelParams(r, sigma)


class TestSolutionTerm:
    @pytest.mark.parametrize("n", [0, -2, -4, -10, -50])
    def test_valid_orders(self, n):
        assert SolutionTerm(1, n).order_n == n

    @pytest.mark.parametrize("q,n", [(0, 0), (5, 0), (1, 1), (1, -3), (1, 2), (1, 0.5)])
    def test_invalid_terms(self, q, n):
        with pytest.raises(InvalidParameter):
            SolutionTerm(q, n)

    def test_degree(self):
        assert SolutionTerm(2, -8).degree == 4

    def test_combo_must_be_nonempty(self):
        with pytest.raises(InvalidParameter):
            BaseCombo(())


class TestFamilyValues:
    @pytest.mark.parametrize("t,S", POINTS)
    def test_class1_order0_is_price(self, t, S):
        assert eval_term(SolutionTerm(1, 0), t, S, P) == pytest.approx(S, rel=1e-15, abs=0.0)

    @pytest.mark.parametrize("t,S", POINTS)
    def test_class2_order0_is_carrier(self, t, S):
        assert eval_term(SolutionTerm(2, 0), t, S, P) == pytest.approx(
            math.exp(P.r * t), rel=1e-15)

    def test_class4_order2_frozen_point(self):
        # e^{4rt - u} (1 - 2u) with u = r (S/sigma)^2 at t=0, S=0.1: u = 0.0125
        value = eval_term(SolutionTerm(4, -2), 0.0, 0.1, P)
        assert value == pytest.approx(math.exp(-0.0125) * 0.975, rel=1e-14)

    @pytest.mark.parametrize("params", [P, P_NEG])
    @pytest.mark.parametrize("t,S", POINTS)
    def test_class4_order2_formula(self, params, t, S):
        u = params.r * (S / params.sigma) ** 2
        expected = math.exp(4.0 * params.r * t - u) * (1.0 - 2.0 * u)
        assert eval_term(SolutionTerm(4, -2), t, S, params) == pytest.approx(
            expected, rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("params", [P, P_NEG])
    @pytest.mark.parametrize("t,S", POINTS)
    def test_class1_order2_formula(self, params, t, S):
        u = params.r * (S / params.sigma) ** 2
        expected = S * (1.0 + (2.0 / 3.0) * u) * math.exp(-2.0 * params.r * t)
        assert eval_term(SolutionTerm(1, -2), t, S, params) == pytest.approx(
            expected, rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("t,S", POINTS)
    def test_class3_order2_formula(self, t, S):
        u = P.r * (S / P.sigma) ** 2
        expected = S * (1.0 - (2.0 / 3.0) * u) * math.exp(5.0 * P.r * t - u)
        assert eval_term(SolutionTerm(3, -2), t, S, P) == pytest.approx(
            expected, rel=1e-13, abs=1e-13)

    def test_coefficient_scales_value(self):
        plain = eval_term(SolutionTerm(2, -4), 0.4, 1.1, P)
        scaled = eval_term(SolutionTerm(2, -4, -3.5), 0.4, 1.1, P)
        assert scaled == pytest.approx(-3.5 * plain, rel=1e-15)

    def test_overflow_guard(self):
        with pytest.raises(RangeError):
            eval_term(SolutionTerm(2, 0), 2.0e4, 0.0, P)


def _fd_partials(term, t, S, params):
    h_t = default_step(t)
    h_s = default_step(t)

    def f(tt, ss):
        return eval_term(term, tt, ss, params)

    c_t = (4.0 * (f(t + h_t / 2, S) - f(t - h_t / 2, S)) / h_t
           - (f(t + h_t, S) - f(t - h_t, S)) / (2.0 * h_t)) / 3.0
    c_s = (4.0 * (f(t, S + h_s / 2) - f(t, S - h_s / 2)) / h_s
           - (f(t, S + h_s) - f(t, S - h_s)) / (2.0 * h_s)) / 3.0
    centre = f(t, S)
    coarse = (f(t, S + h_s) - 2.0 * centre + f(t, S - h_s)) / h_s**2
    fine = (f(t, S + h_s / 2) - 2.0 * centre + f(t, S - h_s / 2)) / (h_s / 2) ** 2
    return c_t, c_s, (4.0 * fine - coarse) / 3.0


class TestPartials:
    @pytest.mark.parametrize("t,S", POINTS)
    def test_linear_member(self, t, S):
        c, c_t, c_s, c_ss = eval_term_partials(SolutionTerm(1, 0), t, S, P)
        assert (c, c_t, c_s, c_ss) == (pytest.approx(S), 0.0, pytest.approx(1.0), 0.0)

    def test_carrier_member(self):
        c, c_t, c_s, c_ss = eval_term_partials(SolutionTerm(2, 0), 0.7, -1.2, P)
        assert c_t == pytest.approx(P.r * math.exp(P.r * 0.7), rel=1e-14)
        assert c_s == 0.0 and c_ss == 0.0

    def test_frozen_cross_check_point(self):
        c, c_t, c_s, c_ss = eval_term_partials(SolutionTerm(4, -2), 0.3, 0.7, P)
        f_t, f_s, f_ss = _fd_partials(SolutionTerm(4, -2), 0.3, 0.7, P)
        assert c_t == pytest.approx(f_t, rel=1e-7)
        assert c_s == pytest.approx(f_s, rel=1e-7)
        assert c_ss == pytest.approx(f_ss, rel=1e-7)

    @pytest.mark.parametrize("q", [1, 2, 3, 4])
    @pytest.mark.parametrize("n", [0, -2, -4, -6, -8])
    def test_all_members_match_finite_differences(self, q, n):
        term = SolutionTerm(q, n)
        for t, S in ((0.25, 0.9), (0.75, -1.6)):
            c_t, c_s, c_ss = eval_term_partials(term, t, S, P)[1:]
            f_t, f_s, f_ss = _fd_partials(term, t, S, P)
            for exact, numeric in ((c_t, f_t), (c_s, f_s), (c_ss, f_ss)):
                assert abs(exact - numeric) <= 1e-7 * max(1.0, abs(exact))


class TestCombos:
    def test_single_term_combo_matches_term(self):
        term = SolutionTerm(3, -4, 2.5)
        combo = BaseCombo((term,))
        assert eval_combo(combo, 0.4, 1.3, P) == eval_term(term, 0.4, 1.3, P)

    def test_worked_combo_at_origin(self):
        # S-prefixed members vanish, carriers are 1: 1 + 3 + 7 + 9 = 20
        assert eval_combo(worked_combo(), 0.0, 0.0, P) == pytest.approx(20.0, rel=1e-15)

    @given(st.floats(min_value=-8.0, max_value=8.0, allow_nan=False))
    @settings(max_examples=60)
    def test_scaling_linearity(self, alpha):
        combo = worked_combo()
        scaled = BaseCombo(tuple(
            SolutionTerm(term.class_q, term.order_n, alpha * term.coeff)
            for term in combo.terms))
        base = eval_combo(combo, 0.6, -0.8, P)
        assert eval_combo(scaled, 0.6, -0.8, P) == pytest.approx(
            alpha * base, rel=1e-13, abs=1e-12)

    def test_combo_solution_is_callable_with_partials(self):
        f = ComboSolution(worked_combo(), P)
        assert f(0.0, 0.0) == pytest.approx(20.0)
        c, c_t, c_s, c_ss = f.partials(0.2, 0.5)
        assert c == pytest.approx(f(0.2, 0.5), rel=1e-15)

    def test_promotes_bare_term(self):
        f = ComboSolution(SolutionTerm(1, 0), P)
        assert f(0.9, 1.7) == pytest.approx(1.7)
