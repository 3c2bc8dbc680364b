import math

import numpy as np
import pytest

import straightline as sl
from graphent import (
    Distribution,
    DomainError,
    FunctionalSpec,
    FunctionalValues,
    class_closed_forms,
    connected_functional_bounds,
    distance_matrix,
    distribution_from_values,
    generate_graph,
    jensen_gap_bound,
    lemma_checks,
    linear_functional_values,
    ordering_bound,
    thm1_refined_bound,
    thm1_renyi_shannon_bounds,
    thm3_partition_vs_functional,
    thm4_scaled_dominance,
    thm5_additive_dominance,
    thm6_convex_combination,
    vertex_orbits,
)

# frozen via an independent high-precision evaluation (mpmath, 40 digits)
L3_GAP = 0.3219280948873623
L3_BOUND = 0.8115159605000419
JENSEN_GAP_91 = 0.2090763115233564
JENSEN_BOUND_91 = 0.3462468098133512
LITERAL_LOW_ALPHA_BOUND = 0.4957121684205583
CORRECTED_LOW_ALPHA_BOUND = 19.945378645590287
RENYI_91_A05 = 0.6780719051126376
SHANNON_99 = 0.0807931358959112
LITERAL_HIGH_ALPHA_BOUND = 0.0516477815345180
RENYI_99_A3 = 0.0217486111149779
THM3_S4_LHS = 0.8999686269529917
THM3_S4_BOUND = 4.157728441894158
THM4_EX_BOUND = 1.8999686269529917
THM5_EX_BOUND = 1.8944271909999159


def dist(*values):
    return Distribution(p=np.array(values, dtype=float))


def tol_ok(report):
    assert report.holds is (report.slack >= -report.tolerance)


class TestLemmaExamples:
    def test_l1_hand_example(self):
        from graphent.inequalities import _check_lemma1

        check = _check_lemma1(2.0, 1.0, 2.0)
        # chain evaluates to 2 < 3 < 4
        assert check.satisfied and check.margin == pytest.approx(1.0)

    def test_l2_equality_at_disjoint_supports(self):
        from graphent.inequalities import _check_lemma2

        rows = np.array([[1.0, 0.0], [0.0, 1.0]])
        check = _check_lemma2(rows, 0.5)
        assert check.satisfied
        assert check.margin == pytest.approx(0.0, abs=1e-12)

    def test_l3_hand_example(self):
        from graphent.inequalities import _check_lemma3

        check = _check_lemma3(np.array([0.5, 0.5]), np.array([1.0, 4.0]))
        assert check.satisfied
        gap = math.log2(2.5) - 1.0
        assert gap == pytest.approx(L3_GAP, abs=1e-14)
        assert check.margin == pytest.approx(min(L3_GAP, L3_BOUND - L3_GAP), abs=1e-12)

    def test_seeded_runs_are_clean(self):
        checks = lemma_checks(seed=20240811, trials=2000)
        assert len(checks) == 6000
        assert all(c.satisfied for c in checks)

    def test_deterministic(self):
        a = lemma_checks(seed=5, trials=10)
        b = lemma_checks(seed=5, trials=10)
        assert [(c.lemma_id, c.margin) for c in a] == [
            (c.lemma_id, c.margin) for c in b
        ]

    def test_trials_validation(self):
        with pytest.raises(DomainError):
            lemma_checks(seed=1, trials=0)


class TestJensenGap:
    def test_frozen_example(self):
        r = jensen_gap_bound(dist(0.9, 0.1), 0.5)
        assert r.lhs - r.params["shannon"] == pytest.approx(JENSEN_GAP_91, abs=1e-12)
        assert r.bound - r.params["shannon"] == pytest.approx(
            JENSEN_BOUND_91, abs=1e-12
        )
        assert r.holds is True
        tol_ok(r)

    def test_uniform_equality(self):
        for alpha in (0.5, 2.0):
            r = jensen_gap_bound(dist(0.25, 0.25, 0.25, 0.25), alpha)
            assert r.slack == pytest.approx(0.0, abs=1e-12)
            assert r.holds is True

    def test_quarter_alpha2_both_sides_brute(self):
        p = [0.25, 0.75]
        r = jensen_gap_bound(dist(*p), 2.0)
        assert r.lhs == pytest.approx(sl.sl_renyi(p, 2.0), abs=1e-12)
        expected_bound = sl.sl_shannon(p) - sl.sl_jensen_bound(p, 2.0)
        assert r.bound == pytest.approx(expected_bound, abs=1e-12)
        assert r.holds is True

    def test_holds_on_random_corpus(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            raw = rng.uniform(0.01, 5.0, size=int(rng.integers(2, 9)))
            d = Distribution(p=raw / raw.sum())
            for alpha in (0.25, 0.5, 0.9, 1.1, 2.0, 3.0):
                assert jensen_gap_bound(d, alpha).holds is True


class TestOrdering:
    def test_directions(self):
        d = dist(0.7, 0.3)
        low = ordering_bound(d, 0.5)
        high = ordering_bound(d, 2.0)
        assert low.direction == "lower" and low.holds is True
        assert high.direction == "upper" and high.holds is True

    def test_uniform_equality(self):
        r = ordering_bound(dist(0.5, 0.5), 0.5)
        assert r.slack == pytest.approx(0.0, abs=1e-12)


class TestThm1:
    def test_literal_low_alpha_counterexample(self):
        r = thm1_refined_bound(dist(0.9, 0.1), 0.5, "literal")
        assert r.bound == pytest.approx(LITERAL_LOW_ALPHA_BOUND, abs=1e-12)
        assert r.lhs == pytest.approx(RENYI_91_A05, abs=1e-12)
        assert r.holds is False
        tol_ok(r)

    def test_corrected_low_alpha_holds(self):
        r = thm1_refined_bound(dist(0.9, 0.1), 0.5, "corrected")
        assert r.bound == pytest.approx(CORRECTED_LOW_ALPHA_BOUND, abs=1e-9)
        assert r.holds is True

    def test_literal_high_alpha_counterexample(self):
        r = thm1_refined_bound(dist(0.99, 0.01), 3.0, "literal")
        assert r.params["shannon"] == pytest.approx(SHANNON_99, abs=1e-12)
        assert r.bound == pytest.approx(LITERAL_HIGH_ALPHA_BOUND, abs=1e-12)
        assert r.lhs == pytest.approx(RENYI_99_A3, abs=1e-12)
        assert r.holds is False

    def test_corrected_high_alpha_holds(self):
        assert thm1_refined_bound(dist(0.99, 0.01), 3.0, "corrected").holds is True

    def test_uniform_variants_coincide(self):
        d = dist(0.25, 0.25, 0.25, 0.25)
        for alpha in (0.5, 2.0, 3.0):
            lit = thm1_refined_bound(d, alpha, "literal")
            cor = thm1_refined_bound(d, alpha, "corrected")
            assert lit.bound == pytest.approx(cor.bound, abs=1e-12)
            assert lit.holds and cor.holds

    def test_literal_equals_corrected_between_one_and_two(self):
        # dividing by rho**(alpha-2) with a negative exponent is the same
        # as multiplying by rho**abs(alpha-2)
        d = dist(0.6, 0.3, 0.1)
        lit = thm1_refined_bound(d, 1.5, "literal")
        cor = thm1_refined_bound(d, 1.5, "corrected")
        assert lit.bound == pytest.approx(cor.bound, abs=1e-12)

    def test_epsilon_variant(self):
        d = dist(0.9, 0.1)
        r = thm1_refined_bound(d, 0.5, "corrected", use_epsilon=True)
        direction, bound = sl.sl_thm1_bound([0.9, 0.1], 0.5, "corrected", True)
        assert r.direction == direction
        assert r.bound == pytest.approx(bound, abs=1e-12)
        # literal alpha>1 carries no epsilon factor, exactly as printed
        lit = thm1_refined_bound(d, 3.0, "literal", use_epsilon=True)
        lit_plain = thm1_refined_bound(d, 3.0, "literal", use_epsilon=False)
        assert lit.bound == pytest.approx(lit_plain.bound, abs=1e-15)

    def test_corrected_holds_on_random_corpus(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            raw = rng.uniform(0.01, 5.0, size=int(rng.integers(2, 9)))
            d = Distribution(p=raw / raw.sum())
            for alpha in (0.25, 0.5, 0.9, 1.1, 2.0, 3.0):
                for use_eps in (False, True):
                    r = thm1_refined_bound(d, alpha, "corrected", use_epsilon=use_eps)
                    assert r.holds is True, (d.p, alpha, use_eps)

    def test_operation_emits_ordering_plus_refined(self):
        reports = thm1_renyi_shannon_bounds(dist(0.9, 0.1), 0.5, "literal")
        assert [r.theorem_id for r in reports] == ["ordering", "thm1"]

    def test_alpha_one_rejected(self):
        with pytest.raises(DomainError):
            thm1_refined_bound(dist(0.5, 0.5), 1.0, "literal")


class TestThm3:
    def test_s4_frozen_example(self):
        g = generate_graph("star", 4)
        fv = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2, 1)))
        r = thm3_partition_vs_functional(g, vertex_orbits(g), fv, 0.5)
        assert r.precondition_met
        assert r.lhs == pytest.approx(THM3_S4_LHS, abs=1e-12)
        assert r.bound == pytest.approx(THM3_S4_BOUND, abs=1e-12)
        assert r.holds is True

    def test_precondition_failure_not_applicable(self):
        g = generate_graph("star", 4)
        fv = FunctionalValues.from_values([1.0, 1.0, 1.0, 1.0])
        r = thm3_partition_vs_functional(g, vertex_orbits(g), fv, 0.5)
        assert r.precondition_met is False
        assert r.holds is None

    def test_k4_single_block(self):
        g = generate_graph("complete", 4)
        fv = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2.0,)))
        for alpha in (0.5, 2.0):
            r = thm3_partition_vs_functional(g, vertex_orbits(g), fv, alpha)
            assert r.precondition_met and r.holds is True
            assert r.lhs == pytest.approx(0.0, abs=1e-12)

    def test_matches_straightline(self):
        g = generate_graph("wheel", 6)
        fv = linear_functional_values(
            g, FunctionalSpec("linear", coeffs=(1.7, 0.9))
        )
        part = vertex_orbits(g)
        for alpha in (0.25, 3.0):
            r = thm3_partition_vs_functional(g, part, fv, alpha)
            met, direction, bound = sl.sl_thm3_bound(
                list(part.sizes), fv.values.tolist(), alpha
            )
            assert r.precondition_met == met and r.direction == direction
            assert r.bound == pytest.approx(bound, abs=1e-9)

    def test_disconnected_rejected(self):
        from graphent import Graph

        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        fv = FunctionalValues.from_values([2, 2, 2, 2])
        with pytest.raises(DomainError):
            thm3_partition_vs_functional(g, vertex_orbits(g), fv, 0.5)


class TestThm4:
    def test_identity_pair_equality(self):
        d = dist(0.4, 0.6)
        r = thm4_scaled_dominance(d, d, 1.0, 0.5)
        assert r.precondition_met and r.holds is True
        assert r.slack == pytest.approx(0.0, abs=1e-12)

    def test_frozen_example(self):
        r = thm4_scaled_dominance(dist(0.5, 0.5), dist(0.25, 0.75), 2.0, 0.5)
        assert r.precondition_met
        assert r.lhs == pytest.approx(1.0, abs=1e-12)
        assert r.bound == pytest.approx(THM4_EX_BOUND, abs=1e-12)
        assert r.holds is True

    def test_precondition_failure(self):
        r = thm4_scaled_dominance(dist(0.9, 0.1), dist(0.5, 0.5), 1.0, 0.5)
        assert r.precondition_met is False and r.holds is None

    def test_corollary_mode(self):
        # f1 = (1, 2), f2 = (2, 3): f1 <= f2, psi = S2/S1 = 5/3
        d1 = distribution_from_values(FunctionalValues.from_values([1, 2]))
        d2 = distribution_from_values(FunctionalValues.from_values([2, 3]))
        r = thm4_scaled_dominance(d1, d2, None, 2.0, derive_psi_from=(3.0, 5.0))
        assert r.params["psi"] == pytest.approx(5 / 3)
        assert r.precondition_met and r.holds is True
        direction, bound = sl.sl_thm4_bound([0.4, 0.6], 5 / 3, 2.0)
        assert r.direction == direction
        assert r.bound == pytest.approx(bound, abs=1e-12)

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            thm4_scaled_dominance(dist(1.0), dist(0.5, 0.5), 1.0, 0.5)

    def test_holds_whenever_applicable(self):
        rng = np.random.default_rng(23)
        for _ in range(60):
            n = int(rng.integers(2, 8))
            raw1 = rng.uniform(0.01, 3.0, size=n)
            raw2 = rng.uniform(0.01, 3.0, size=n)
            d1 = Distribution(p=raw1 / raw1.sum())
            d2 = Distribution(p=raw2 / raw2.sum())
            psi = float(np.max(d1.p / d2.p))
            for alpha in (0.25, 0.75, 1.5, 3.0):
                r = thm4_scaled_dominance(d1, d2, psi, alpha)
                assert r.precondition_met and r.holds is True


class TestThm5:
    def test_frozen_literal_example(self):
        d = dist(0.5, 0.5)
        r = thm5_additive_dominance(d, d, 0.1, 0.5, "literal")
        assert r.precondition_met
        assert r.lhs == pytest.approx(1.0, abs=1e-12)
        assert r.bound == pytest.approx(THM5_EX_BOUND, abs=1e-12)
        assert r.holds is True

    def test_corrected_scales_penalty(self):
        d = dist(0.5, 0.5)
        lit = thm5_additive_dominance(d, d, 0.1, 0.5, "literal")
        cor = thm5_additive_dominance(d, d, 0.1, 0.5, "corrected")
        assert (cor.bound - 1.0) == pytest.approx(
            (lit.bound - 1.0) / math.log(2.0), abs=1e-12
        )

    def test_vanishing_phi_limit(self):
        d = dist(0.3, 0.7)
        r = thm5_additive_dominance(d, d, 1e-9, 2.0, "corrected")
        assert r.holds is True
        assert r.bound == pytest.approx(r.params["h_other"], abs=1e-6)

    def test_base_e_matches_corrected_shape(self):
        # with natural logs the literal penalty is already the valid one
        d1 = dist(0.6, 0.4)
        d2 = dist(0.5, 0.5)
        lit_e = thm5_additive_dominance(d1, d2, 0.2, 0.5, "literal", base=math.e)
        cor_e = thm5_additive_dominance(d1, d2, 0.2, 0.5, "corrected", base=math.e)
        assert lit_e.bound == pytest.approx(cor_e.bound, abs=1e-14)
        direction, bound = sl.sl_thm5_bound([0.5, 0.5], 0.2, 0.5, "literal", base=math.e)
        assert lit_e.bound == pytest.approx(bound, abs=1e-12)

    def test_phi_validation(self):
        with pytest.raises(DomainError):
            thm5_additive_dominance(dist(0.5, 0.5), dist(0.5, 0.5), 0.0, 0.5, "literal")

    def test_corrected_holds_when_applicable(self):
        rng = np.random.default_rng(31)
        for _ in range(60):
            n = int(rng.integers(2, 8))
            raw1 = rng.uniform(0.01, 3.0, size=n)
            raw2 = rng.uniform(0.01, 3.0, size=n)
            d1 = Distribution(p=raw1 / raw1.sum())
            d2 = Distribution(p=raw2 / raw2.sum())
            phi = max(float(np.max(d1.p - d2.p)), 0.01)
            for alpha in (0.25, 0.75, 1.5, 3.0):
                r = thm5_additive_dominance(d1, d2, phi, alpha, "corrected")
                assert r.precondition_met and r.holds is True


class TestThm6:
    def test_equal_components_slack_one_below_one(self):
        g = generate_graph("star", 4)
        fv = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2, 1)))
        r = thm6_convex_combination(g, fv, fv, 0.5, 0.5, 0.5, "literal")
        assert r.params["A1"] == pytest.approx(0.5, abs=1e-15)
        assert r.slack == pytest.approx(1.0, abs=1e-12)
        assert r.holds is True

    def test_equal_components_equality_above_one(self):
        g = generate_graph("star", 4)
        fv = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2, 1)))
        r = thm6_convex_combination(g, fv, fv, 0.5, 0.5, 2.0, "literal")
        assert r.slack == pytest.approx(0.0, abs=1e-12)
        assert r.holds is True

    def test_s4_against_straightline(self):
        g = generate_graph("star", 4)
        fv1 = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2, 1)))
        fv2 = FunctionalValues.from_values([5.0] * 4)
        f1 = fv1.values.tolist()
        f2 = fv2.values.tolist()
        for alpha in (0.5, 2.0):
            for variant in ("literal", "corrected"):
                for symmetric in (False, True):
                    r = thm6_convex_combination(
                        g, fv1, fv2, 1.0, 1.0, alpha, variant, symmetric=symmetric
                    )
                    lhs, direction, bound = sl.sl_thm6(
                        f1, f2, 1.0, 1.0, alpha, variant, symmetric=symmetric
                    )
                    assert r.direction == direction
                    assert r.lhs == pytest.approx(lhs, abs=1e-10)
                    assert r.bound == pytest.approx(bound, abs=1e-10)
                    expect_holds = (
                        lhs <= bound + 1e-9 if direction == "upper"
                        else lhs >= bound - 1e-9
                    )
                    assert r.holds is expect_holds

    def test_zero_weight_rejected(self):
        g = generate_graph("star", 4)
        fv = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2, 1)))
        with pytest.raises(DomainError):
            thm6_convex_combination(g, fv, fv, 1.0, 0.0, 0.5, "literal")

    def test_corrected_holds_on_random_functionals(self):
        rng = np.random.default_rng(41)
        for seed in range(15):
            g = generate_graph("gnp", int(rng.integers(3, 10)), p=0.5, seed=seed)
            d = distance_matrix(g)
            c_a = tuple(rng.uniform(0.5, 2.0, d.eta))
            c_b = tuple(rng.uniform(0.5, 2.0, d.eta))
            fv1 = linear_functional_values(g, FunctionalSpec("linear", coeffs=c_a), d)
            fv2 = linear_functional_values(g, FunctionalSpec("linear", coeffs=c_b), d)
            c1, c2 = float(rng.uniform(0.5, 2.0)), float(rng.uniform(0.5, 2.0))
            for alpha in (0.25, 0.9, 1.5, 3.0):
                for symmetric in (False, True):
                    r = thm6_convex_combination(
                        g, fv1, fv2, c1, c2, alpha, "corrected", symmetric=symmetric
                    )
                    assert r.holds is True


class TestClassClosedForms:
    def test_star_4_renyi_exact(self):
        reports = class_closed_forms("star", 4, 2.0)
        exact = next(r for r in reports if r.theorem_id == "class_renyi_exact")
        assert exact.bound == pytest.approx(4.0 - math.log2(10.0), abs=1e-15)
        assert abs(exact.lhs - exact.bound) <= 1e-12
        assert exact.holds is True and exact.tolerance == 1e-12

    def test_star_shannon_exact(self):
        reports = class_closed_forms("star", 7, 0.5)
        r = next(r for r in reports if r.theorem_id == "class_shannon_exact")
        assert r.bound == pytest.approx(sl.sl_star_shannon_closed(7), abs=1e-15)
        assert r.holds is True

    def test_star_gamma_bounds_both_variants(self):
        for n in (4, 8):
            for alpha in (0.5, 3.0):
                reports = class_closed_forms("star", n, alpha)
                gammas = [r for r in reports if r.theorem_id == "class_gamma_bound"]
                assert {r.variant for r in gammas} == {"literal", "corrected"}
                for r in gammas:
                    direction, bound = sl.sl_star_gamma_bound(n, alpha, r.variant)
                    assert r.direction == direction
                    assert r.bound == pytest.approx(bound, abs=1e-12)
                    if r.variant == "corrected":
                        assert r.holds is True

    def test_path_even_exact(self):
        for alpha in (0.25, 0.5, 2.0, 3.0):
            reports = class_closed_forms("path", 6, alpha)
            exact = next(r for r in reports if r.theorem_id == "class_renyi_exact")
            assert exact.bound == pytest.approx(math.log2(3.0), abs=1e-15)
            assert exact.holds is True

    def test_path_odd_fallback(self):
        reports = class_closed_forms("path", 5, 0.5)
        exact = next(r for r in reports if r.theorem_id == "class_renyi_exact")
        assert exact.params["even"] is False
        # straight-line block formula: two pairs and a center singleton
        expected = math.log2(2 * (2 / 5) ** 0.5 + (1 / 5) ** 0.5) / 0.5
        assert exact.bound == pytest.approx(expected, abs=1e-12)
        assert exact.holds is True

    def test_path_functional_bound_zero_slack_case(self):
        fv = FunctionalValues.from_values([3.0] * 6)
        reports = class_closed_forms("path", 6, 0.5, fv=fv)
        r = next(r for r in reports if r.theorem_id == "class_functional_bound")
        assert r.precondition_met
        assert r.bound == pytest.approx(0.0, abs=1e-12)
        assert r.lhs == pytest.approx(math.log2(6.0), abs=1e-12)
        assert r.holds is True

    def test_path_functional_precondition(self):
        fv = FunctionalValues.from_values([1.5] * 6)
        reports = class_closed_forms("path", 6, 0.5, fv=fv)
        r = next(r for r in reports if r.theorem_id == "class_functional_bound")
        assert r.precondition_met is False and r.holds is None

    def test_path_functional_odd_not_applicable(self):
        fv = FunctionalValues.from_values([3.0] * 5)
        reports = class_closed_forms("path", 5, 0.5, fv=fv)
        r = next(r for r in reports if r.theorem_id == "class_functional_bound")
        assert r.precondition_met is False

    def test_star_functional_bound(self):
        g = generate_graph("star", 4)
        fv = linear_functional_values(g, FunctionalSpec("linear", coeffs=(2, 1)))
        for alpha in (0.5, 2.0):
            reports = class_closed_forms("star", 4, alpha, fv=fv)
            r = next(r for r in reports if r.theorem_id == "class_functional_bound")
            assert r.precondition_met  # f values (6,4,4,4): 6 > 3 and 4 > 1
            direction, bound = sl.sl_star_functional_bound(4, 18.0, alpha)
            assert r.direction == direction
            assert r.bound == pytest.approx(bound, abs=1e-12)
            assert r.holds is True

    def test_star_functional_precondition_failure(self):
        fv = FunctionalValues.from_values([2.0, 2.0, 2.0, 2.0])
        reports = class_closed_forms("star", 4, 0.5, fv=fv)
        r = next(r for r in reports if r.theorem_id == "class_functional_bound")
        # no vertex exceeds n-1 = 3
        assert r.precondition_met is False

    def test_wheel_matches_star_forms(self):
        for n in (5, 8):
            star = class_closed_forms("star", n, 2.0)
            wheel = class_closed_forms("wheel", n, 2.0)
            for s, w in zip(star, wheel):
                assert s.theorem_id == w.theorem_id
                assert w.precondition_met
                assert s.bound == pytest.approx(w.bound, abs=1e-12)
                assert s.lhs == pytest.approx(w.lhs, abs=1e-12)

    def test_wheel_4_reported_as_exception(self):
        reports = class_closed_forms("wheel", 4, 2.0)
        assert all(r.precondition_met is False for r in reports)
        assert all(r.holds is None for r in reports)

    def test_class_n_mismatch(self):
        with pytest.raises(DomainError):
            class_closed_forms("star", 2, 0.5)
        with pytest.raises(DomainError):
            class_closed_forms("cycle", 5, 0.5)


class TestConnectedBounds:
    def test_s4_linear_interval(self):
        g = generate_graph("star", 4)
        r = connected_functional_bounds(
            g, FunctionalSpec("linear", coeffs=(2, 1)), 0.5, "literal"
        )
        assert r.params["bound_lower"] == pytest.approx(1.0, abs=1e-12)
        assert r.params["bound_upper"] == pytest.approx(3.0, abs=1e-12)
        assert r.lhs == pytest.approx(1.9878034404518454, abs=1e-12)
        assert r.holds is True

    def test_equal_coeffs_collapse(self):
        g = generate_graph("gnp", 7, p=0.5, seed=2)
        eta = distance_matrix(g).eta
        r = connected_functional_bounds(
            g, FunctionalSpec("linear", coeffs=(1.3,) * eta), 2.0, "corrected"
        )
        assert r.params["bound_lower"] == pytest.approx(math.log2(7), abs=1e-12)
        assert r.params["bound_upper"] == pytest.approx(math.log2(7), abs=1e-12)
        assert r.holds is True

    def test_p3_exponential_collapse(self):
        g = generate_graph("path", 3)
        r = connected_functional_bounds(
            g, FunctionalSpec("exponential", coeffs=(1, 1), beta=2.0), 0.5, "literal"
        )
        assert r.params["X"] == pytest.approx(0.0)
        assert r.lhs == pytest.approx(math.log2(3.0), abs=1e-12)
        assert r.holds is True

    def test_literal_beta_below_one_not_applicable(self):
        g = generate_graph("path", 4)
        spec = FunctionalSpec("exponential", coeffs=(1, 0.5, 2), beta=0.5)
        lit = connected_functional_bounds(g, spec, 0.5, "literal")
        assert lit.precondition_met is False and lit.holds is None
        cor = connected_functional_bounds(g, spec, 0.5, "corrected")
        assert cor.precondition_met and cor.holds is True

    def test_matches_straightline_interval(self):
        g = generate_graph("wheel", 6)
        coeffs = (1.7, 0.6)
        for alpha in (0.25, 3.0):
            r = connected_functional_bounds(
                g, FunctionalSpec("linear", coeffs=coeffs), alpha, "literal"
            )
            lo, hi = sl.sl_conn_interval(6, coeffs, alpha, "linear")
            assert r.params["bound_lower"] == pytest.approx(lo, abs=1e-12)
            assert r.params["bound_upper"] == pytest.approx(hi, abs=1e-12)
            spec = FunctionalSpec("exponential", coeffs=coeffs, beta=2.0)
            re = connected_functional_bounds(g, spec, alpha, "corrected")
            lo_e, hi_e = sl.sl_conn_interval(
                6, coeffs, alpha, "exponential", beta=2.0, variant="corrected"
            )
            assert re.params["bound_lower"] == pytest.approx(lo_e, abs=1e-12)
            assert re.params["bound_upper"] == pytest.approx(hi_e, abs=1e-12)
            assert re.holds is True


class TestStraightLineRecompute:
    """Every report's lhs/bound/slack must reproduce under an independent
    straight-line evaluation of the same raw inputs, within 1e-9."""

    def test_thm1_family(self):
        rng = np.random.default_rng(77)
        for _ in range(40):
            raw = rng.uniform(0.02, 4.0, size=int(rng.integers(2, 7)))
            p = (raw / raw.sum()).tolist()
            d = Distribution(p=np.array(p))
            for alpha in (0.25, 0.9, 1.5, 3.0):
                for variant in ("literal", "corrected"):
                    for use_eps in (False, True):
                        r = thm1_refined_bound(d, alpha, variant, use_epsilon=use_eps)
                        direction, bound = sl.sl_thm1_bound(p, alpha, variant, use_eps)
                        lhs = sl.sl_renyi(p, alpha)
                        assert r.direction == direction
                        assert abs(r.lhs - lhs) <= 1e-9
                        assert abs(r.bound - bound) <= 1e-9
                        expected_slack = (
                            bound - lhs if direction == "upper" else lhs - bound
                        )
                        assert abs(r.slack - expected_slack) <= 1e-9

    def test_jensen(self):
        rng = np.random.default_rng(78)
        for _ in range(40):
            raw = rng.uniform(0.02, 4.0, size=int(rng.integers(2, 7)))
            p = (raw / raw.sum()).tolist()
            d = Distribution(p=np.array(p))
            for alpha in (0.5, 2.0):
                r = jensen_gap_bound(d, alpha)
                gap_bound = sl.sl_jensen_bound(p, alpha)
                h = sl.sl_shannon(p)
                bound = h + gap_bound if alpha < 1 else h - gap_bound
                assert abs(r.bound - bound) <= 1e-9

    def test_thm5_and_thm4(self):
        rng = np.random.default_rng(79)
        for _ in range(30):
            n = int(rng.integers(2, 7))
            raw1 = rng.uniform(0.02, 4.0, size=n)
            raw2 = rng.uniform(0.02, 4.0, size=n)
            p1 = (raw1 / raw1.sum()).tolist()
            p2 = (raw2 / raw2.sum()).tolist()
            d1, d2 = Distribution(p=np.array(p1)), Distribution(p=np.array(p2))
            psi = max(a / b for a, b in zip(p1, p2))
            phi = max(max(a - b for a, b in zip(p1, p2)), 0.01)
            for alpha in (0.25, 1.5, 3.0):
                r4 = thm4_scaled_dominance(d1, d2, psi, alpha)
                _, bound4 = sl.sl_thm4_bound(p2, psi, alpha)
                assert abs(r4.bound - bound4) <= 1e-9
                for variant in ("literal", "corrected"):
                    r5 = thm5_additive_dominance(d1, d2, phi, alpha, variant)
                    _, bound5 = sl.sl_thm5_bound(p2, phi, alpha, variant)
                    assert abs(r5.bound - bound5) <= 1e-9
