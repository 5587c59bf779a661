import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrig import special as sp
from gentrig.errors import DomainError

mp.mp.dps = 40


class TestLnGamma:
    def test_at_one_and_two(self):
        assert abs(sp.ln_gamma(1.0)) <= 1e-14
        assert abs(sp.ln_gamma(2.0)) <= 1e-14

    def test_at_half(self):
        # log sqrt(pi), minted from the 40-digit reference
        assert sp.ln_gamma(0.5) == pytest.approx(
            0.5723649429247000870717136756765293558, abs=1e-14
        )

    @pytest.mark.parametrize("x", [1e-3, 0.02, 0.7, 1.0, 3.7, 8.0, 55.0,
                                   1234.5, 1e6])
    def test_relative_accuracy_against_oracle(self, x):
        ref = float(mp.loggamma(mp.mpf(x)))
        scale = max(abs(ref), 1.0)
        assert abs(sp.ln_gamma(x) - ref) <= 1e-14 * scale

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            sp.ln_gamma(0.0)
        with pytest.raises(DomainError):
            sp.ln_gamma(-1.5)


class TestDigamma:
    def test_at_one_is_minus_euler(self):
        assert sp.digamma(1.0) == pytest.approx(-sp.EULER_GAMMA, abs=1e-13)

    def test_at_half(self):
        assert sp.digamma(0.5) == pytest.approx(
            -1.9635100260214234794409763329987555672, abs=1e-13
        )

    def test_quarter_spacing_gives_pi(self):
        assert sp.digamma(0.75) - sp.digamma(0.25) == pytest.approx(
            math.pi, abs=1e-12
        )

    @pytest.mark.parametrize("x", [1e-3, 0.3, 1.0, 5.99, 6.0, 47.0, 1e6])
    def test_against_oracle(self, x):
        ref = float(mp.digamma(mp.mpf(x)))
        assert abs(sp.digamma(x) - ref) <= 1e-13 * max(1.0, abs(ref))

    @given(st.floats(min_value=0.5, max_value=50.0))
    @settings(max_examples=200, deadline=None)
    def test_recurrence(self, x):
        assert abs(sp.digamma(x + 1.0) - sp.digamma(x) - 1.0 / x) <= 1e-12

    @pytest.mark.parametrize("x", [0.05, 0.21, 0.5, 0.77, 0.93])
    def test_reflection(self, x):
        lhs = sp.digamma(1.0 - x) - sp.digamma(x)
        assert abs(lhs - math.pi / math.tan(math.pi * x)) <= 1e-10

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            sp.digamma(-0.5)


class TestBetaPochhammer:
    def test_trivial_values(self):
        assert sp.beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)
        assert sp.beta(1.0, 0.25) == pytest.approx(4.0, rel=1e-13)

    def test_half_half_is_pi(self):
        assert sp.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)

    @pytest.mark.parametrize("x,y", [(0.3, 2.2), (7.0, 0.01), (150.0, 3.5)])
    def test_symmetry_is_exact(self, x, y):
        assert sp.beta(x, y) == sp.beta(y, x)

    @pytest.mark.parametrize("x,y", [(1e-3, 1e-3), (0.5, 2.0), (40.0, 900.0)])
    def test_against_oracle(self, x, y):
        ref = float(mp.beta(mp.mpf(x), mp.mpf(y)))
        assert sp.beta(x, y) == pytest.approx(ref, rel=1e-12)

    def test_pochhammer(self):
        assert sp.pochhammer_ln(2.7, 0) == 0.0
        assert sp.pochhammer_ln(1.0, 5) == pytest.approx(math.log(120), rel=1e-14)
        assert sp.pochhammer_ln(0.5, 3) == pytest.approx(
            math.log(1.875), rel=1e-14
        )

    def test_pochhammer_domain(self):
        with pytest.raises(DomainError):
            sp.pochhammer_ln(-1.0, 2)
        with pytest.raises(DomainError):
            sp.pochhammer_ln(1.0, -1)


class TestPiP:
    def test_p2_is_pi(self):
        assert sp.pi_p(2.0) == math.pi

    def test_p4(self):
        assert sp.pi_p(4.0) == pytest.approx(math.pi / math.sqrt(2.0), rel=1e-14)

    def test_p1000(self):
        # sine formula cross-checked against the beta route and the
        # 40-digit reference 2.000003289871921831713...
        assert sp.pi_p(1000.0) == pytest.approx(2.000003289871921831713, rel=1e-13)
        assert sp.pi_p(1000.0, "beta") == pytest.approx(sp.pi_p(1000.0), rel=1e-12)

    @pytest.mark.parametrize("p", [1.05, 1.5, 2.0, math.e, 4.0, 10.0, 100.0])
    def test_route_agreement(self, p):
        ref = sp.pi_p(p, "sine")
        assert sp.pi_p(p, "beta") == pytest.approx(ref, rel=1e-10)
        assert sp.pi_p(p, "limit") == pytest.approx(ref, rel=1e-10)

    def test_rejects_p_at_most_one(self):
        with pytest.raises(DomainError):
            sp.pi_p(1.0)
        with pytest.raises(DomainError):
            sp.pi_p(0.5)


class TestEndpointConstants:
    def test_b2_is_quarter_pi(self):
        assert sp.b_p(2.0) == pytest.approx(math.pi / 4.0, abs=1e-12)

    def test_b1_is_log2(self):
        assert sp.b_p(1.0) == pytest.approx(math.log(2.0), abs=1e-12)

    def test_b3_oracle(self):
        assert sp.b_p(3.0) == pytest.approx(
            0.8356488482647210533371034597001107668, abs=1e-13
        )

    @pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 3.0, 7.0])
    def test_b_routes_agree(self, p):
        assert sp.b_p(p) == pytest.approx(sp.b_p(p, "hyp"), rel=1e-10)

    def test_c_values(self):
        assert sp.c_p(1.0) == pytest.approx(math.log(2.0), abs=1e-13)
        assert sp.c_p(2.0) == pytest.approx(math.log(1.0 + math.sqrt(2.0)),
                                            abs=1e-13)
        assert sp.c_p(3.0) == pytest.approx(
            0.9377069905753388607248276686515959242, abs=1e-13
        )

    @pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 3.0, 7.0])
    def test_limits_match_the_functions(self, p):
        from gentrig.invtrig import FnId, eval_fn

        assert abs(sp.b_p(p) - eval_fn(FnId.ARCTAN, p, 1.0).value) <= 1e-9
        assert abs(sp.c_p(p) - eval_fn(FnId.ARCSINH, p, 1.0).value) <= 1e-9


class TestRConst:
    def test_at_one_one(self):
        assert abs(sp.r_const(1.0, 1.0)) <= 1e-13

    def test_at_one_half(self):
        assert sp.r_const(1.0, 0.5) == pytest.approx(2.0 * math.log(2.0),
                                                     abs=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            sp.r_const(0.0, 1.0)
