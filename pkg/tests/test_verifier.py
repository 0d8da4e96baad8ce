import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulicoh.series import TruncatedSeries
from modulicoh.verifier import (
    CrossCheckError,
    ModuliInstance,
    VerifierReport,
    chern_degree,
    chern_top_coefficient,
    chern_top_routes,
    codim_sigma_ell,
    discriminant_degree,
    gauss_chern_total,
    iota_multiplier,
    milnor_brieskorn,
    pullback_coefficient,
    t1_multiplicity,
    t2_coefficient,
    verify_instance,
    whitney_chern_total,
)

ns = st.integers(min_value=1, max_value=12)
ds = st.integers(min_value=2, max_value=12)


class TestInstance:
    def test_bounds_enforced(self):
        with pytest.raises(ValueError):
            ModuliInstance(0, 3)
        with pytest.raises(ValueError):
            ModuliInstance(2, 1)

    def test_degree_hypothesis_flag(self):
        assert ModuliInstance(2, 3).satisfies_degree_hypothesis
        assert not ModuliInstance(2, 2).satisfies_degree_hypothesis


class TestDiscriminantDegree:
    @pytest.mark.parametrize("n,d,expected", [(1, 2, 2), (2, 4, 27), (3, 3, 32)])
    def test_known_values(self, n, d, expected):
        assert discriminant_degree(ModuliInstance(n, d)) == expected

    @given(ns, ds)
    def test_matches_product_formula(self, n, d):
        assert discriminant_degree(ModuliInstance(n, d)) == (n + 1) * (d - 1) ** n


class TestMilnorBrieskorn:
    def test_single_exponent(self):
        assert milnor_brieskorn([5]) == 4

    def test_nodes_have_milnor_number_one(self):
        assert milnor_brieskorn([2, 2, 2, 2]) == 1

    def test_product_rule(self):
        assert milnor_brieskorn([3, 3]) == 4

    def test_exponent_below_two_rejected(self):
        with pytest.raises(ValueError):
            milnor_brieskorn([2, 1])


class TestIotaMultiplier:
    @pytest.mark.parametrize("d,expected", [(3, 2), (2, 1), (5, 4)])
    def test_values(self, d, expected):
        assert iota_multiplier(ModuliInstance(2, d)) == expected


class TestCodimSigma:
    def test_identity_on_valid_range(self):
        inst = ModuliInstance(2, 4)
        assert codim_sigma_ell(inst, 1) == 1
        assert codim_sigma_ell(inst, 3) == 3

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            codim_sigma_ell(ModuliInstance(2, 4), 4)
        with pytest.raises(ValueError):
            codim_sigma_ell(ModuliInstance(2, 4), 0)


class TestGaussChern:
    def test_plane_cubic(self):
        assert gauss_chern_total(ModuliInstance(2, 3)) == TruncatedSeries.from_coeffs([1, -1], 2)

    def test_space_cubic(self):
        got = gauss_chern_total(ModuliInstance(3, 3))
        assert got == TruncatedSeries.from_coeffs([1, -1, 3], 3)

    @given(ns)
    def test_quadric_top_coefficient_telescopes(self, n):
        inst = ModuliInstance(n, 2)
        assert gauss_chern_total(inst).coefficient(n - 1) == Fraction(1 - (-1) ** n, 2)

    @given(ns, ds)
    def test_whitney_route_agrees(self, n, d):
        inst = ModuliInstance(n, d)
        assert gauss_chern_total(inst) == whitney_chern_total(inst)


class TestChernTop:
    @pytest.mark.parametrize("n,d,expected", [(2, 3, -1), (3, 3, 3), (2, 2, 0)])
    def test_known_values(self, n, d, expected):
        assert chern_top_coefficient(ModuliInstance(n, d)) == expected

    @given(ns, ds)
    def test_three_routes_agree_and_integral(self, n, d):
        series_route, sum_route, closed_route = chern_top_routes(ModuliInstance(n, d))
        assert series_route == sum_route == closed_route
        assert closed_route.denominator == 1

    @given(st.integers(min_value=1, max_value=60), st.integers(min_value=2, max_value=60))
    def test_divisibility(self, n, d):
        assert (1 - (1 - d) ** n) % d == 0


class TestChernDegree:
    @pytest.mark.parametrize("n,d,expected", [(2, 3, -3), (3, 3, 9)])
    def test_known_values(self, n, d, expected):
        assert chern_degree(ModuliInstance(n, d)) == expected

    @given(ns)
    def test_quadrics(self, n):
        assert chern_degree(ModuliInstance(n, 2)) == (0 if n % 2 == 0 else 2)


class TestStratumCoefficients:
    @pytest.mark.parametrize("n,d,expected", [(2, 3, -3), (3, 3, -9)])
    def test_t2_known_values(self, n, d, expected):
        assert t2_coefficient(ModuliInstance(n, d)) == expected

    @given(ds)
    def test_t2_on_the_line(self, d):
        assert t2_coefficient(ModuliInstance(1, d)) == -d

    @pytest.mark.parametrize("n,d,expected", [(2, 3, 12), (1, 2, 2), (3, 4, 108)])
    def test_t1_known_values(self, n, d, expected):
        assert t1_multiplicity(ModuliInstance(n, d)) == expected

    @pytest.mark.parametrize("n,d,expected", [(2, 3, 9), (2, 4, 28), (1, 2, 0)])
    def test_pullback_known_values(self, n, d, expected):
        assert pullback_coefficient(ModuliInstance(n, d)) == expected

    @given(st.integers(min_value=1, max_value=50), st.integers(min_value=2, max_value=50))
    def test_pullback_identity(self, n, d):
        assert d * (d - 1) ** n + (-1) ** n * (1 - (1 - d) ** n) == (d - 1) ** (n + 1) + (-1) ** n

    @given(st.integers(min_value=1, max_value=50), st.integers(min_value=3, max_value=50))
    def test_pullback_nonzero_above_degree_two(self, n, d):
        assert pullback_coefficient(ModuliInstance(n, d)) != 0

    @given(st.integers(min_value=1, max_value=50))
    def test_pullback_vanishes_only_for_odd_quadrics(self, n):
        value = pullback_coefficient(ModuliInstance(n, 2))
        assert (value == 0) == (n % 2 == 1)


class TestVerifyInstance:
    def test_plane_cubic_report(self):
        report = verify_instance(ModuliInstance(2, 3))
        assert report.nonvanishing
        assert report.discriminant_degree == 12
        assert report.t1_multiplicity == 12
        assert report.t2_coefficient == -3
        assert report.pullback_coefficient == 9
        assert report.chern_top_coefficient == -1
        assert report.chern_degree == -3

    def test_space_cubic_nonvanishing(self):
        assert verify_instance(ModuliInstance(3, 3)).nonvanishing

    def test_odd_quadric_is_flagged_vanishing(self):
        report = verify_instance(ModuliInstance(3, 2))
        assert not report.nonvanishing
        assert not report.instance.satisfies_degree_hypothesis

    @given(ns, ds)
    def test_report_internal_relations(self, n, d):
        report = verify_instance(ModuliInstance(n, d))
        assert report.pullback_coefficient == report.t1_multiplicity + report.t2_coefficient
        assert report.chern_degree == d * report.chern_top_coefficient

    def test_json_round_trip_types(self):
        report = verify_instance(ModuliInstance(2, 3))
        data = json.loads(report.to_json())
        assert data["n"] == 2 and data["d"] == 3
        assert data["nonvanishing"] is True
        assert data["chern_top_coefficient"] == "-1"
        assert data["pullback_coefficient"] == 9

    def test_table_ends_with_nonvanishing_line(self):
        table = verify_instance(ModuliInstance(2, 3)).render_table()
        assert table.splitlines()[-1] == "nonvanishing: true"
        flagged = verify_instance(ModuliInstance(3, 2)).render_table()
        assert flagged.splitlines()[-1] == "nonvanishing: false"
        assert "not satisfied" in flagged


def test_report_is_a_frozen_record():
    report = verify_instance(ModuliInstance(2, 3))
    assert isinstance(report, VerifierReport)
    with pytest.raises(AttributeError):
        report.nonvanishing = False


def test_cross_check_error_is_an_exception():
    assert issubclass(CrossCheckError, Exception)
