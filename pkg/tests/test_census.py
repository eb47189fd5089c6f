from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import binomtest

from src.census import (
    baer_intersection,
    centralizer,
    clopper_pearson,
    count_p_elements,
    coset_breakdown,
    coset_p_census,
    derive_seed,
    gamma_simple,
    mc_estimate,
    normalizer,
    omega_pair_set,
    omega_set,
    omega_weight,
    p_census,
    pair_probability,
    quotient_pair_identity,
    sn_p_counts,
    sn_p_proportion,
    sn_two_proportion,
    sylow,
    sylow_bound_check,
    sylow_report,
    sylow_subgroups,
    wilson_interval,
)
from src.classical import classical_group, m10, outer_coset
from src.constructions import alternating_group, direct_power, metacyclic_affine, subdirect_X_t, symmetric_group
from src.errors import CapExceededError, InvalidParameterError, NotInGroupError, NotPrimeError
from src.permcore import conjugate, format_cycles, from_cycles, identity
from src.quotients import chief_series, quotient_by


class TestCensus:
    @pytest.mark.parametrize(
        "build,p,count",
        [
            (lambda: symmetric_group(4), 2, 16),
            (lambda: symmetric_group(3), 3, 3),
            (lambda: alternating_group(5), 2, 16),
            (lambda: alternating_group(5), 3, 21),
            (lambda: alternating_group(5), 5, 25),
            (lambda: alternating_group(6), 2, 136),
            (lambda: classical_group("psl2", 7), 2, 64),
            (lambda: classical_group("psl2", 7), 7, 49),
            (lambda: metacyclic_affine(7, 1, 3, 1), 3, 15),
        ],
    )
    def test_counts(self, build, p, count):
        assert p_census(build(), p).count == count

    def test_s4_probability(self, sym4):
        report = p_census(sym4, 2)
        assert report.probability == Fraction(2, 3)
        assert report.to_row()["probability"] == "2/3"

    def test_m10(self):
        report = p_census(m10()[0], 2)
        assert (report.count, report.order) == (496, 720)
        assert report.probability == Fraction(31, 45)

    def test_structural_count_matches_enumeration(self, alt5):
        group = direct_power(alt5, 2)
        assert p_census(group, 2, method="structure").count == 16**2
        assert p_census(group, 2, method="enumerate").count == 16**2

    def test_subdirect_structural_count(self):
        x_group, socle = m10()
        group = subdirect_X_t(x_group, socle, 1)
        assert p_census(group, 2, method="structure").count == 496

    @pytest.mark.slow
    def test_x2_by_enumeration(self):
        x_group, socle = m10()
        group = subdirect_X_t(x_group, socle, 2)
        report = p_census(group, 2, method="enumerate")
        assert report.probability == Fraction(148096, 259200)

    def test_structure_method_needs_structure(self, sym4):
        with pytest.raises(InvalidParameterError):
            p_census(sym4, 2, method="structure")
        with pytest.raises(InvalidParameterError):
            p_census(sym4, 2, method="magic")

    def test_errors(self, sym4, sym5):
        with pytest.raises(NotPrimeError):
            p_census(sym4, 4)
        with pytest.raises(CapExceededError):
            p_census(sym5, 2, cap=100)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 6), st.sampled_from([2, 3, 5]))
    def test_partition_count_matches_enumeration(self, n, p):
        even, odd = sn_p_counts(n, p)
        assert even + odd == count_p_elements(symmetric_group(n).elements(), p)
        assert even == count_p_elements(alternating_group(n).elements(), p)


class TestCosetCensus:
    def test_pgl25_outer_coset(self):
        report = coset_p_census(outer_coset("diag", 5), 2)
        assert (report.count, report.order) == (40, 60)
        assert report.coset == "diag:5"

    def test_s6_outer_coset(self):
        report = coset_p_census(outer_coset("frob", 9), 2)
        assert report.count == 120
        assert report.probability == Fraction(1, 3)

    def test_psl227_field_automorphism(self):
        report = coset_p_census(outer_coset("frob", 27), 3)
        assert (report.count, report.order) == (7371, 9828)
        assert report.probability == Fraction(3, 4)

    def test_m10_outer_coset_is_all_two_elements(self):
        report = coset_p_census(outer_coset("diag_frob", 9), 2)
        assert report.count == report.order == 360

    def test_breakdown_s4(self, sym4, alt4):
        rows = coset_breakdown(sym4, alt4, 2)
        assert [row.coset_index for row in rows] == [0, 1]
        assert [row.ratio for row in rows] == [Fraction(1, 3), Fraction(1)]
        assert rows[0].size == 12

    def test_breakdown_rows_follow_quotient_reps(self, sym4):
        v4 = chief_series(sym4)[-1].upper
        rows = coset_breakdown(sym4, v4, 2)
        quotient = quotient_by(sym4, v4)
        assert len(rows) == quotient.index == 6
        assert sum(row.count for row in rows) == 16

    def test_gamma(self, sym5, alt5):
        result = gamma_simple(alt5, sym5)
        assert result.outer_ratio == Fraction(2, 3)
        assert result.identity_ratio == Fraction(4, 15)
        assert result.maximal_coset.coset_index == 1

    def test_gamma_of_a6_in_m10(self):
        x_group, socle = m10()
        result = gamma_simple(socle, x_group)
        assert result.outer_ratio == 1
        assert result.identity_ratio == Fraction(136, 360)

    def test_gamma_without_overgroup(self, alt5):
        result = gamma_simple(alt5, alt5)
        assert result.outer_ratio == 0
        assert result.maximal_coset is None

    def test_gamma_report(self, sym5, alt5):
        report = gamma_simple(alt5, sym5).to_report()
        assert (report.socle, report.group, report.cosets) == ("alt:5", "sym:5", 2)
        assert report.identity_ratio == Fraction(4, 15)
        assert report.outer_ratio == Fraction(2, 3)
        assert report.maximal_index == 1


def _m10_over_a6():
    x_group, socle = m10()
    return x_group, socle, 2


def _pgammal_over_psl_27():
    return classical_group("pgammal2", 27), classical_group("psl2", 27), 3


class TestCosetPartition:
    @pytest.mark.parametrize(
        "build",
        [
            pytest.param(_m10_over_a6, id="m10"),
            pytest.param(_pgammal_over_psl_27, id="pgammal2:27", marks=pytest.mark.slow),
        ],
    )
    def test_breakdown_partitions_census(self, build):
        group, normal, p = build()
        rows = coset_breakdown(group, normal, p)
        quotient = quotient_by(group, normal)
        assert sum(row.count for row in rows) == p_census(group, p).count
        assert len(rows) == quotient.index
        for i, row in enumerate(rows):
            assert row.coset_index == i
            assert row.rep == format_cycles(quotient.reps[i])
            assert row.size == normal.order


class TestSylow:
    @pytest.mark.parametrize(
        "build,p,sylow_order,normalizer_order,count",
        [
            (lambda: symmetric_group(4), 2, 8, 8, 3),
            (lambda: symmetric_group(4), 3, 3, 6, 4),
            (lambda: alternating_group(5), 2, 4, 12, 5),
            (lambda: alternating_group(5), 5, 5, 10, 6),
            (lambda: classical_group("psl2", 7), 7, 7, 21, 8),
        ],
    )
    def test_sylow_report(self, build, p, sylow_order, normalizer_order, count):
        report = sylow_report(build(), p)
        assert report.sylow_order == sylow_order
        assert report.normalizer_order == normalizer_order
        assert report.sylow_count == count

    def test_sylow_subgroups(self, sym4, alt5):
        assert len(sylow_subgroups(sym4, 3)) == 4
        assert len(sylow_subgroups(alt5, 5)) == 6
        assert all(len(P) == 8 for P in sylow_subgroups(sym4, 2))

    def test_normalizer_contains_sylow(self, alt5):
        P = sylow(alt5, 2)
        assert P.is_subgroup_of(normalizer(alt5, P))

    def test_sylow_needs_divisor(self, sym4):
        with pytest.raises(InvalidParameterError):
            sylow(sym4, 5)

    def test_centralizer(self, sym4, alt4):
        assert centralizer(sym4, from_cycles(4, [(0, 1)])).order == 4
        # x fora do grupo
        assert centralizer(alt4, from_cycles(4, [(0, 1)])).order == 2

    def test_bound_check(self, sym4):
        outcome = sylow_bound_check(sym4, 2)
        assert outcome.claim == "sylow_bound"
        assert outcome.passed is True


class TestPairs:
    def test_omega_set(self, sym3):
        transposition = from_cycles(3, [(0, 1)])
        assert omega_set(sym3, transposition, 2) == {identity(3), transposition}
        assert len(omega_set(sym3, identity(3), 2)) == 4
        assert omega_set(sym3, from_cycles(3, [(0, 1, 2)]), 2) == set()

    @pytest.mark.parametrize("n,p", [(3, 2), (4, 2), (4, 3)])
    def test_cover_matches_direct(self, n, p):
        group = symmetric_group(n)
        for g in group.elements():
            assert omega_set(group, g, p) == omega_set(group, g, p, method="direct")

    def test_omega_pair_set_report(self, sym4):
        report = omega_pair_set(sym4, from_cycles(4, [(0, 1), (2, 3)]), 2)
        assert report.element == "(0 1)(2 3)"
        assert report.total == 24
        assert report.count == 16

    def test_omega_set_rejects_outsider(self, alt4):
        with pytest.raises(NotInGroupError):
            omega_set(alt4, from_cycles(4, [(0, 1)]), 2)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 59), st.integers(0, 59), st.sampled_from([2, 3, 5]))
    def test_omega_set_is_conjugation_equivariant(self, alt5, i, j, p):
        elements = sorted(alt5.elements())
        g, h = elements[i], elements[j]
        omega = omega_set(alt5, g, p)
        assert omega_set(alt5, conjugate(g, h), p) == {conjugate(y, h) for y in omega}
        assert omega_pair_set(alt5, conjugate(g, h), p).count == len(omega)

    def test_pair_probability(self, sym3):
        report = pair_probability(sym3, 2)
        assert report.probability == Fraction(5, 18)
        assert pair_probability(sym3, 2, method="direct").count == report.count

    def test_pair_cap(self, sym5):
        with pytest.raises(CapExceededError):
            pair_probability(sym5, 2, cap=100)

    @pytest.mark.parametrize("n,p,measure,op_order", [(4, 2, Fraction(1, 6), 4), (3, 3, Fraction(1, 2), 3), (4, 3, Fraction(1, 24), 1)])
    def test_baer_intersection(self, n, p, measure, op_order):
        op, value = baer_intersection(symmetric_group(n), p)
        assert value == measure
        assert op.order == op_order

    def test_omega_weight(self, sym4):
        series = chief_series(sym4)
        assert omega_weight(sym4, from_cycles(4, [(0, 1, 2)]), 3, series=series) == 1
        assert omega_weight(sym4, identity(4), 3, series=series) == 0
        assert omega_weight(sym4, from_cycles(4, [(0, 1)]), 2, series=series) == 1
        assert omega_weight(sym4, from_cycles(4, [(0, 1), (2, 3)]), 2) == 0
        with pytest.raises(InvalidParameterError):
            omega_weight(sym4, from_cycles(4, [(0, 1, 2)]), 2)

    def test_quotient_identity_s3(self, sym3):
        a3 = alternating_group(3)
        result = quotient_pair_identity(sym3, quotient_by(sym3, a3), from_cycles(3, [(0, 1)]), 2)
        assert result.ratio == result.formula == Fraction(1, 3)
        assert result.p_gn == 1
        assert not result.centralizes

    def test_quotient_identity_a4(self, alt4):
        v4 = chief_series(alt4)[-1].upper
        result = quotient_pair_identity(alt4, quotient_by(alt4, v4), from_cycles(4, [(0, 1, 2)]), 3)
        assert result.ratio == result.formula == Fraction(1, 4)

    def test_quotient_identity_needs_coprime_kernel(self, sym4):
        v4 = chief_series(sym4)[-1].upper
        with pytest.raises(InvalidParameterError):
            quotient_pair_identity(sym4, quotient_by(sym4, v4), from_cycles(4, [(0, 1)]), 2)


class TestPartitions:
    def test_small_cases(self):
        assert sn_p_counts(4, 2) == (4, 12)
        assert sn_p_counts(6, 2) == (136, 120)
        assert sn_p_counts(5, 5) == (25, 0)

    def test_two_proportion(self):
        proportion = sn_two_proportion(4)
        assert proportion.symmetric == Fraction(2, 3)
        assert proportion.alternating == Fraction(1, 3)
        assert proportion.odd == 1

    def test_large_degree_decreases(self):
        assert sn_two_proportion(16).symmetric < sn_two_proportion(4).symmetric
        assert sn_p_proportion(30, 3).symmetric < 1

    @pytest.mark.parametrize("n", [1, 61])
    def test_degree_range(self, n):
        with pytest.raises(InvalidParameterError):
            sn_p_counts(n, 2)


class TestEstimate:
    @pytest.mark.parametrize("hits,samples", [(1, 10), (37, 100), (500, 1000), (999, 1000)])
    def test_intervals_match_scipy(self, hits, samples):
        ci = binomtest(hits, samples).proportion_ci(confidence_level=0.95, method="wilson")
        assert wilson_interval(hits, samples) == pytest.approx((ci.low, ci.high), abs=1e-9)
        ci = binomtest(hits, samples).proportion_ci(confidence_level=0.95, method="exact")
        assert clopper_pearson(hits, samples) == pytest.approx((ci.low, ci.high), abs=1e-9)

    def test_extreme_endpoints(self):
        assert wilson_interval(0, 20)[0] == 0.0
        assert wilson_interval(20, 20)[1] == 1.0
        assert clopper_pearson(0, 20)[0] == 0.0
        assert clopper_pearson(20, 20)[1] == 1.0

    def test_no_samples(self):
        with pytest.raises(InvalidParameterError):
            wilson_interval(0, 0)

    def test_derive_seed(self):
        assert derive_seed(0, "sym:4:2") == derive_seed(0, "sym:4:2")
        assert derive_seed(0, "sym:4:2") != derive_seed(1, "sym:4:2")
        assert derive_seed(0, "sym:4:2") != derive_seed(0, "sym:4:3")

    def test_reproducible(self, sym4):
        first = mc_estimate(sym4, 2, 300, seed=11)
        second = mc_estimate(sym4, 2, 300, seed=11)
        assert first.hits == second.hits
        assert first.estimate == first.hits / 300
        assert first.wilson_low <= first.estimate <= first.wilson_high
        assert first.target == "group"

    def test_coset_of_two_elements(self):
        report = mc_estimate(outer_coset("diag_frob", 9), 2, 200, seed=3)
        assert report.hits == 200
        assert report.target == "coset"
        assert report.wilson_high == 1.0

    @pytest.mark.slow
    def test_wilson_coverage(self):
        group = symmetric_group(6)
        truth = Fraction(16, 45)
        covered = sum(
            mc_estimate(group, 2, 10_000, seed=derive_seed(0, f"cobertura:{i}")).contains(truth) for i in range(200)
        )
        assert covered >= 180

    def test_intervals_contain_exact_value_for_large_sample(self):
        x_group, _ = m10()
        report = mc_estimate(x_group, 2, 2000, seed=derive_seed(0, "m10:2:2000"))
        assert report.cp_low < report.estimate < report.cp_high
        assert abs(report.estimate - 31 / 45) < 0.1
