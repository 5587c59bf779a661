import json

import pytest

from gentrig import certify as ct
from gentrig.errors import DomainError, MixedTargets, UnknownClaim


def _small_grid(spec, n_p=6, n_x=25, mf=10.0):
    p_vals = ct._clamp_p(spec, ct.default_p_values(spec, n_p))
    x_vals = ct.linspace(1e-3, 0.999, n_x)
    return ct.GridSpec(p_vals, x_vals, mf)


class TestClaimRegistry:
    def test_every_registered_claim_runs(self):
        ids = [s.id for s in ct.list_claims()]
        assert len(ids) == len(set(ids))
        assert "T2.1a" in ids and "T3.2" in ids and "L1.2" in ids

    def test_unknown_claim(self):
        with pytest.raises(UnknownClaim):
            ct.certify_inequality("NOPE")
        with pytest.raises(UnknownClaim):
            ct.certify_monotonicity("T2.1a")

    def test_policies(self):
        assert ct.get_claim("T2.1a").policy == "assert"
        assert ct.get_claim("E2.9").policy == "report"
        assert ct.get_claim("T2.3d").policy == "report"


class TestPointwise:
    @pytest.mark.parametrize("claim", ["T2.1a", "T2.1b", "T2.1e", "T2.2a",
                                       "T2.2b", "T2.6_I2", "T2.6_gap",
                                       "T3.1", "T3.2"])
    def test_holds_on_small_grid(self, claim):
        spec = ct.get_claim(claim)
        rep = ct.certify_inequality(claim, _small_grid(spec))
        assert rep.status == "holds"
        assert not rep.violations
        assert rep.points_checked > 0
        assert rep.min_margin > 0.0

    def test_vacuous_on_empty_intersection(self):
        spec = ct.get_claim("T2.2b")  # p in (0, 1)
        grid = ct.GridSpec([1.5, 2.0, 4.0], [0.1, 0.5], 10.0)
        rep = ct.certify_inequality("T2.2b", grid)
        assert rep.status == "vacuous"
        assert rep.points_checked == 0

    def test_reported_claim_records_failures(self):
        spec = ct.get_claim("E2.9")
        rep = ct.certify_inequality("E2.9", _small_grid(spec, 4, 12))
        assert rep.status == "reported"
        assert rep.violations  # the printed upper multiplier sits below
        v = rep.violations[0]
        assert v.margin < 0.0
        assert set(v.params) == {"p", "x"}

    def test_corrected_counterpart_holds(self):
        spec = ct.get_claim("E2.9_corrected")
        rep = ct.certify_inequality("E2.9_corrected", _small_grid(spec, 4, 12))
        assert rep.status == "holds"

    def test_skip_accounting_is_honest(self):
        # the second-order margin claim cannot resolve deep small-x
        # large-p points in double precision; they must be skipped, not
        # asserted either way
        spec = ct.get_claim("T2.1a")
        grid = ct.GridSpec([18.0, 20.0], ct.linspace(1e-3, 0.2, 20), 10.0)
        rep = ct.certify_inequality("T2.1a", grid)
        assert rep.status in ("holds", "vacuous")
        assert rep.skipped > 0
        assert not rep.violations


class TestPair:
    def test_quotient_bounds(self):
        spec = ct.get_claim("T2.3q1")
        grid = ct.GridSpec(
            ct._clamp_p(spec, [1.2, 2.0, 6.0]),
            ct.linspace(1e-3, 0.999, 10), 10.0)
        rep = ct.certify_inequality("T2.3q1", grid)
        assert rep.status == "holds"
        assert rep.points_checked == 3 * 100

    def test_printed_difference_upper_fails_low_p(self):
        spec = ct.get_claim("T2.3d")
        grid = ct.GridSpec([1.5, 2.0], ct.linspace(1e-3, 0.999, 10), 10.0)
        rep = ct.certify_inequality("T2.3d", grid)
        assert rep.status == "reported"
        assert rep.violations

    def test_alternative_constant_holds(self):
        spec = ct.get_claim("T2.3d_upper_alt")
        grid = ct.GridSpec([1.5, 2.0, 8.0], ct.linspace(1e-3, 0.999, 10), 10.0)
        rep = ct.certify_inequality("T2.3d_upper_alt", grid)
        assert not rep.violations

    def test_convexity_skips_diagonal(self):
        spec = ct.get_claim("T2.4a")
        grid = ct.GridSpec([1.0, 1.5, 2.0], ct.linspace(1e-3, 0.999, 8), 10.0)
        rep = ct.certify_inequality("T2.4a", grid)
        assert rep.status == "holds"
        assert rep.points_checked == 3 * (8 * 8 - 8)


class TestGrunbaum:
    def test_holds_with_seeded_sampler(self):
        rep = ct.certify_grunbaum("T2.5a", 2000, 42, p_override=[2.0])
        assert rep.status == "holds"
        assert rep.points_checked > 0
        assert rep.seed == 42

    def test_reversed_direction_claim(self):
        rep = ct.certify_grunbaum("T2.5d_rev", 2000, 42, p_override=[0.5])
        assert rep.status == "holds"

    def test_sampler_is_deterministic(self):
        r1 = ct.certify_grunbaum("T2.5b", 1500, 7, p_override=[1.5])
        r2 = ct.certify_grunbaum("T2.5b", 1500, 7, p_override=[1.5])
        assert r1.as_dict() == r2.as_dict()

    def test_rejects_bad_inputs(self):
        with pytest.raises(UnknownClaim):
            ct.certify_grunbaum("T2.1a", 100, 1)
        with pytest.raises(DomainError):
            ct.certify_grunbaum("T2.5a", 0, 1)


class TestMonotone:
    def test_l12_range_example(self):
        # (a, b) = (1, 1/2): values increase inside (1/3, 1/2)
        grid = ct.GridSpec([2.0], ct.linspace(1e-3, 0.999, 60), 10.0)
        rep = ct.certify_monotonicity("L1.2", grid)
        assert rep.status == "holds"
        vals = [ct._mono_l12(2.0, x)[0] for x in grid.x_values]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert all(1.0 / 3.0 < v < 0.5 for v in vals)

    def test_ratio_decreasing(self):
        grid = ct.GridSpec([2.0, 5.0], ct.linspace(1e-3, 0.999, 40), 10.0)
        rep = ct.certify_monotonicity("T2.2r1", grid)
        assert rep.status == "holds"

    def test_single_point_grid_is_vacuous(self):
        grid = ct.GridSpec([2.0], [0.5], 10.0)
        rep = ct.certify_monotonicity("T2.2r1", grid)
        assert rep.status == "vacuous"
        assert rep.points_checked == 0


class TestReports:
    def test_schema_fields(self):
        spec = ct.get_claim("T2.6_gap")
        rep = ct.certify_inequality("T2.6_gap", _small_grid(spec, 3, 10))
        d = rep.as_dict()
        assert set(d) == {
            "claim_id", "status", "points_checked", "skipped", "min_margin",
            "max_error_budget", "margin_factor", "grid", "seed",
            "violations", "tool_version",
        }
        assert set(d["grid"]) == {"p", "x"}
        json.dumps(d)  # must be serializable

    def test_exit_status(self):
        spec = ct.get_claim("T2.6_gap")
        rep = ct.certify_inequality("T2.6_gap", _small_grid(spec, 3, 10))
        assert ct.exit_status([rep]) == 0
        rep.status = "violated"
        assert ct.exit_status([rep]) == 1
        # report-policy violations never gate
        spec = ct.get_claim("E2.9")
        bad = ct.certify_inequality("E2.9", _small_grid(spec, 3, 10))
        assert ct.exit_status([bad]) == 0


class TestCompare:
    def test_single_bound_wins_everywhere(self):
        rows, summary = ct.compare_bounds(
            "arctan_p", ["atan_ub_Mp"], [2.0], ct.linspace(0.01, 0.99, 10))
        assert all(r[4] == "atan_ub_Mp" for r in rows)
        assert summary[2.0]["atan_ub_Mp"] == 1.0

    def test_tilde_upper_dominates(self):
        rows, summary = ct.compare_bounds(
            "arctan_p", ["atan_ub_Mp", "atan_ub_tilde"],
            [1.5, 2.0, 3.0], ct.linspace(0.01, 0.99, 40))
        for p in (1.5, 2.0, 3.0):
            assert summary[p]["atan_ub_tilde"] == 1.0
        assert all(r[5] >= 0.0 for r in rows)

    def test_complementary_upper_bounds(self):
        rows, summary = ct.compare_bounds(
            "arcsinh_p", ["asinh_ub_Tp", "asinh_ub_up_corrected"],
            [3.0], ct.linspace(0.01, 0.99, 60))
        fr = summary[3.0]
        assert 0.0 < fr["asinh_ub_Tp"] < 1.0
        assert 0.0 < fr["asinh_ub_up_corrected"] < 1.0

    def test_mixed_targets_rejected(self):
        with pytest.raises(MixedTargets):
            ct.compare_bounds("arctan_p", ["atan_ub_Mp", "atan_lb_mp"],
                              [2.0], [0.5])
        with pytest.raises(MixedTargets):
            ct.compare_bounds("arctan_p", ["asinh_ub_Tp"], [2.0], [0.5])
