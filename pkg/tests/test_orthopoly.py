import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ellipse.ellipse import BernsteinEllipse
from jacobi_ellipse.errors import DomainError
from jacobi_ellipse.orthopoly import (
    GegenbauerParam,
    JacobiParams,
    cheb_T,
    cheb_U,
    gegenbauer_eval,
    gegenbauer_leading_coeff,
    gegenbauer_prefactor,
    gegenbauer_recurrence,
    gegenbauer_zeros,
    jacobi_def_sum_condition,
    jacobi_eval,
    jacobi_eval_def_sum,
    jacobi_interval_max,
    jacobi_leading_coeff,
)

params = st.tuples(st.floats(-0.95, 4), st.floats(-0.95, 4))


class TestParams:
    def test_constraint_message(self):
        with pytest.raises(DomainError, match="alpha must exceed -1"):
            JacobiParams(-1, 0)
        with pytest.raises(DomainError, match="beta must exceed -1"):
            JacobiParams(0, -1.2)

    def test_classifiers(self):
        assert JacobiParams(0.3, 0.3).is_gegenbauer
        assert JacobiParams(-0.5, -0.5).is_cheb_first
        assert JacobiParams(0.5, 0.5).is_cheb_second
        assert not JacobiParams(0.5, 0.4).is_gegenbauer

    def test_gegenbauer_param(self):
        assert GegenbauerParam(1.5).jacobi == JacobiParams(1.0, 1.0)
        with pytest.raises(DomainError):
            GegenbauerParam(-0.5)


class TestJacobiEval:
    def test_low_degree(self):
        assert jacobi_eval(JacobiParams(0, 0), 2, 1) == 1
        x = np.linspace(-1, 1, 11)
        np.testing.assert_allclose(jacobi_eval(JacobiParams(1, 0), 1, x), (3 * x + 1) / 2)
        p = JacobiParams(0.7, -0.2)
        assert jacobi_eval(p, 0, 0.3 + 2j) == 1
        assert jacobi_eval(p, 1, 0.3) == pytest.approx(0.5 * (p.ab + 2) * 0.3 + 0.5 * (p.alpha - p.beta))

    def test_against_high_precision_def_sum(self, oracle):
        re, im = oracle["jacobi_0.3_-0.2_7_0.4+0.1i"]
        assert jacobi_eval(JacobiParams(0.3, -0.2), 7, 0.4 + 0.1j) == pytest.approx(complex(re, im), rel=1e-13)

    def test_def_sum_examples(self, oracle):
        z = np.array([0.1, 1.5 + 0.2j, -2j])
        assert np.all(jacobi_eval_def_sum(JacobiParams(0.4, 0.1), 0, z) == 1)
        np.testing.assert_allclose(jacobi_eval_def_sum(JacobiParams(0, 0), 2, z), (3 * z**2 - 1) / 2, rtol=1e-14)
        re, im = oracle["jacobi_1_2_3_0.5"]
        assert jacobi_eval_def_sum(JacobiParams(1, 2), 3, 0.5) == pytest.approx(complex(re, im), rel=1e-14)
        assert jacobi_eval(JacobiParams(1, 2), 3, 0.5) == pytest.approx(complex(re, im), rel=1e-14)

    def test_def_sum_degree_cap(self):
        with pytest.raises(DomainError):
            jacobi_eval_def_sum(JacobiParams(0, 0), 65, 0.5)

    @given(params, st.integers(0, 20), st.floats(-1, 1))
    def test_reflection(self, ab, n, x):
        a, b = ab
        lhs = jacobi_eval(JacobiParams(a, b), n, -x)
        rhs = (-1) ** n * jacobi_eval(JacobiParams(b, a), n, x)
        scale = max(1.0, abs(jacobi_interval_max(JacobiParams(a, b), n).value) if n else 1.0)
        assert abs(lhs - rhs) <= 1e-12 * scale

    def test_recurrence_matches_definition_where_well_conditioned(self):
        rng = np.random.default_rng(1)
        checked = 0
        for _ in range(300):
            p = JacobiParams(*rng.uniform(-0.9, 3, 2))
            n = int(rng.integers(0, 41))
            z = complex(*rng.uniform(-3, 3, 2))
            if abs(z) > 3 or jacobi_def_sum_condition(p, n, z) > 1e4:
                continue
            ref = jacobi_eval_def_sum(p, n, z)
            assert abs(jacobi_eval(p, n, z) - ref) <= 1e-10 * max(1, abs(ref))
            checked += 1
        assert checked > 100


class TestGegenbauer:
    def test_examples(self, oracle):
        z = np.array([0.3, 1 + 1j])
        np.testing.assert_allclose(gegenbauer_eval(GegenbauerParam(1), 1, z), 2 * z, rtol=1e-15)
        assert gegenbauer_eval(GegenbauerParam(1), 3, 0.5) == pytest.approx(-1, rel=1e-14)
        g = GegenbauerParam(0.25)
        assert gegenbauer_eval(g, 5, 0.9) == pytest.approx(oracle["gegenbauer_0.25_5_0.9"], rel=1e-13)
        assert gegenbauer_recurrence(g, 5, 0.9) == pytest.approx(oracle["gegenbauer_0.25_5_0.9"], rel=1e-13)

    def test_lambda_zero_rejected(self):
        with pytest.raises(DomainError):
            gegenbauer_eval(GegenbauerParam(0.0), 3, 0.5)

    def test_prefactor_does_not_overflow(self):
        # Gamma(406) alone overflows a double; the log form stays finite
        pref = gegenbauer_prefactor(GegenbauerParam(3.0), 400)
        ref = math.lgamma(3.5) + math.lgamma(406) - math.lgamma(6) - math.lgamma(403.5)
        assert pref.sign == 1 and pref.log_magnitude == pytest.approx(ref, abs=1e-11)

    def test_small_lambda_limit_is_chebyshev(self):
        lam = 1e-6
        x = np.linspace(-1, 1, 21)
        for n in range(1, 11):
            approx = (n / 2) * gegenbauer_eval(GegenbauerParam(lam), n, x) / lam
            np.testing.assert_allclose(approx.real, cheb_T(n, x).real, atol=1e-4)

    def test_leading_coefficient(self):
        # C_n^1 = U_n, leading coefficient 2^n
        assert gegenbauer_leading_coeff(GegenbauerParam(1.0), 7).to_float() == pytest.approx(128)


class TestChebyshev:
    def test_examples(self):
        assert cheb_T(3, u=2.0) == pytest.approx(4.0625)
        assert cheb_T(3, 1.25) == pytest.approx(4.0625)
        assert cheb_U(1, 0.75j) == pytest.approx(1.5j)
        th = np.random.default_rng(2).uniform(0, 2 * np.pi, 100)
        np.testing.assert_allclose(cheb_T(5, np.cos(th)).real, np.cos(5 * th), atol=1e-13)

    def test_u_form_matches_recurrence(self):
        th = np.linspace(0, 2 * np.pi, 50, endpoint=False)
        for rho in (1.2, 2.0, 3.0):
            e = BernsteinEllipse(rho)
            u, z = e.u(th), e.z(th)
            for n in range(0, 15):
                np.testing.assert_allclose(cheb_T(n, u=u), cheb_T(n, z), rtol=1e-12, atol=1e-12)
                np.testing.assert_allclose(cheb_U(n, u=u), cheb_U(n, z), rtol=1e-12, atol=1e-12)


class TestLeadingCoefficient:
    def test_examples(self):
        assert jacobi_leading_coeff(JacobiParams(0, 0), 2).to_float() == pytest.approx(1.5)
        assert jacobi_leading_coeff(JacobiParams(0.3, 2), 0).to_float() == 1.0

    def test_chebyshev_first(self):
        # P_3^{(-1/2,-1/2)} = (1/2)_3 / 3! * T_3, and T_3 has leading coefficient 4
        c = math.exp(math.lgamma(3.5) - math.lgamma(0.5) - math.lgamma(4))
        assert jacobi_leading_coeff(JacobiParams(-0.5, -0.5), 3).to_float() == pytest.approx(4 * c)

    def test_matches_polynomial(self):
        p = JacobiParams(0.6, 1.4)
        n = 9
        big = 1e4
        ratio = jacobi_eval(p, n, big) / big**n
        assert ratio.real == pytest.approx(jacobi_leading_coeff(p, n).to_float(), rel=1e-3)


class TestIntervalMax:
    def test_endpoint_cases(self):
        r = jacobi_interval_max(JacobiParams(1, 0), 3)
        assert r.value == pytest.approx(4.0, rel=1e-14) and r.location == 1.0
        r = jacobi_interval_max(JacobiParams(0, 0), 5)
        assert r.value == pytest.approx(1) and set(r.locations) == {1.0, -1.0}
        assert jacobi_interval_max(JacobiParams(0, 1), 3).location == -1.0

    def test_interior_case(self):
        p = JacobiParams(-0.8, -0.8)
        r = jacobi_interval_max(p, 3)
        assert abs(r.location) < 1
        x = np.linspace(-1, 1, 100_001)
        dense = np.max(np.abs(jacobi_eval(p, 3, x)))
        assert r.value >= dense * (1 - 1e-12)
        assert jacobi_interval_max(p, 4).locations == pytest.approx((0.0,), abs=1e-6)
        assert r.value == pytest.approx(dense, rel=1e-8)
        # symmetric parameters: both mirror-image maximisers are reported
        assert len(r.locations) == 2 and r.locations[0] == pytest.approx(-r.locations[1], abs=1e-6)

    def test_rejects_degree_zero(self):
        with pytest.raises(DomainError):
            jacobi_interval_max(JacobiParams(0, 0), 0)


class TestGegenbauerZeros:
    def test_u3(self):
        np.testing.assert_allclose(gegenbauer_zeros(GegenbauerParam(1), 3), [math.sqrt(2) / 2, 0, -math.sqrt(2) / 2], atol=1e-15)

    def test_chebyshev_first_limit(self):
        expected = [math.cos((2 * k - 1) * math.pi / 8) for k in range(1, 5)]
        np.testing.assert_allclose(gegenbauer_zeros(GegenbauerParam(0.0), 4), expected, atol=1e-14)

    def test_against_polynomial_roots(self, oracle):
        np.testing.assert_allclose(gegenbauer_zeros(GegenbauerParam(2), 6), oracle["gegenbauer_zeros_2_6"], atol=1e-13)
        np.testing.assert_allclose(gegenbauer_zeros(GegenbauerParam(1), 6), oracle["gegenbauer_zeros_1_6"], atol=1e-13)

    @given(st.floats(-0.45, 6).filter(lambda v: abs(v) > 1e-3), st.integers(1, 25))
    def test_structure(self, lam, n):
        z = gegenbauer_zeros(GegenbauerParam(lam), n)
        assert len(z) == n
        assert np.all(np.diff(z) < 0) and np.all(np.abs(z) < 1)
        np.testing.assert_allclose(z, -z[::-1], atol=1e-15)
        vals = np.abs(gegenbauer_eval(GegenbauerParam(lam), n, z))
        scale = np.max(np.abs(gegenbauer_eval(GegenbauerParam(lam), n, np.linspace(-1, 1, 201))))
        assert np.all(vals <= 1e-12 * scale)

    def test_monotone_in_lambda(self):
        for n in (5, 8, 13):
            zs = [gegenbauer_zeros(GegenbauerParam(lam), n) for lam in (0.5, 1, 2, 4)]
            for lo, hi in zip(zs, zs[1:]):
                assert np.all(hi[: n // 2] < lo[: n // 2])
