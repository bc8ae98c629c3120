#include <cmath>
#include <numbers>

#include "doctest.h"
#include "goldbach/probmodel.hpp"
#include "goldbach/rng.hpp"
#include "oracles.hpp"

using namespace goldbach;

TEST_SUITE_BEGIN("probmodel");

namespace {

double rel_diff_ln(double a, double b) {
    if (std::isinf(a) && std::isinf(b) && a < 0 && b < 0) return 0.0;
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? std::fabs(a - b) : std::fabs(a - b) / scale;
}

// The defining equation of alpha, re-stated here as the test's own oracle.
double alpha_f(double a, double N) {
    const double L = std::log(N);
    return std::exp(a * L) + (a - 1.0) * L + std::log(a) - N / (L * L);
}

}  // namespace

TEST_CASE("LogProb basics") {
    CHECK(LogProb::one().ln() == 0.0);
    CHECK(LogProb::one().log10() == 0.0);
    CHECK(std::isinf(LogProb::zero().ln()));
    CHECK(LogProb::zero().ln() < 0);
    CHECK(LogProb::from_ln(-std::numbers::ln10).log10() == doctest::Approx(-1.0));
    CHECK_THROWS_AS((void)LogProb::from_ln(0.1), std::domain_error);
    CHECK_THROWS_AS((void)LogProb::from_ln(std::nan("")), std::domain_error);
}

TEST_CASE("exact disjointness probability: hand examples") {
    // 36 pairs of 2-subsets of {0..3}; 6 of them disjoint
    const auto [disjoint, total] = oracle::enumerated_disjoint_pairs(4, 2, 2);
    CHECK(disjoint == 6);
    CHECK(total == 36);
    CHECK(exact_disjoint_prob(4, 2, 2).ln() ==
          doctest::Approx(std::log(1.0 / 6.0)).epsilon(1e-14));

    CHECK(exact_disjoint_prob(7, 0, 3).ln() == 0.0);   // empty set misses everything
    CHECK(exact_disjoint_prob(9, 4, 0).ln() == 0.0);
    CHECK(std::isinf(exact_disjoint_prob(10, 6, 5).ln()));  // pigeonhole overlap

    CHECK_THROWS_AS((void)exact_disjoint_prob(5, 6, 1), std::domain_error);
    CHECK_THROWS_AS((void)exact_disjoint_prob(5, 1, 6), std::domain_error);
}

TEST_CASE("exact disjointness probability equals enumeration for all n <= 12") {
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k1 = 0; k1 <= n; ++k1) {
            for (unsigned k2 = 0; k2 <= n; ++k2) {
                const auto [disjoint, total] = oracle::enumerated_disjoint_pairs(n, k1, k2);
                const double expected =
                    disjoint == 0 ? -std::numeric_limits<double>::infinity()
                                  : std::log(static_cast<double>(disjoint) /
                                             static_cast<double>(total));
                const double got = exact_disjoint_prob(n, k1, k2).ln();
                if (rel_diff_ln(got, expected) > 1e-10) {
                    CAPTURE(n);
                    CAPTURE(k1);
                    CAPTURE(k2);
                    REQUIRE(rel_diff_ln(got, expected) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("exact disjointness probability is symmetric in k1, k2") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const uint64_t n = 2 + rng.next_below(300);
        const uint64_t k1 = rng.next_below(n + 1);
        const uint64_t k2 = rng.next_below(n + 1);
        const double a = exact_disjoint_prob(n, k1, k2).ln();
        const double b = exact_disjoint_prob(n, k2, k1).ln();
        if (rel_diff_ln(a, b) > 1e-12) {
            CAPTURE(n);
            CAPTURE(k1);
            CAPTURE(k2);
            REQUIRE(rel_diff_ln(a, b) <= 1e-12);
        }
    }
}

TEST_CASE("exact probability never exceeds the product bound step") {
    // ln P <= k2 * ln((n - k1)/n) for every n <= 200 and all k1, k2
    for (uint64_t n = 1; n <= 200; ++n) {
        for (uint64_t k1 = 0; k1 <= n; ++k1) {
            for (uint64_t k2 = 0; k2 <= n; ++k2) {
                const double lhs = exact_disjoint_prob(n, k1, k2).ln();
                double rhs;
                if (k2 == 0)
                    rhs = 0.0;
                else if (k1 == n)
                    rhs = -std::numeric_limits<double>::infinity();
                else
                    rhs = static_cast<double>(k2) *
                          (std::log(static_cast<double>(n - k1)) -
                           std::log(static_cast<double>(n)));
                if (!(lhs <= rhs + 1e-9 * std::fabs(rhs) + 1e-12)) {
                    CAPTURE(n);
                    CAPTURE(k1);
                    CAPTURE(k2);
                    REQUIRE(lhs <= rhs + 1e-9 * std::fabs(rhs) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("closed-form bounds: frozen values") {
    CHECK(disjointness_bound(1e4, BoundForm::exponential).log10() ==
          doctest::Approx(-51.19563702159499).epsilon(1e-12));
    CHECK(disjointness_bound(4e4, BoundForm::exponential).log10() ==
          doctest::Approx(-154.706433312578).epsilon(1e-12));
    CHECK(disjointness_bound(1e4, BoundForm::product).log10() ==
          doctest::Approx(-54.19399955883317).epsilon(1e-12));

    // band checks the acceptance gate also relies on
    const double p1 = disjointness_bound(1e4, BoundForm::exponential).log10();
    CHECK(p1 > -52.0);
    CHECK(p1 < -51.0);
    CHECK(disjointness_bound(4e4, BoundForm::exponential).log10() < -154.0);

    // closed form at n = e^e: exponent collapses to -e^(e-2)
    const double nee = std::exp(std::numbers::e);
    CHECK(disjointness_bound(nee, BoundForm::exponential).ln() ==
          doctest::Approx(-2.050906372692501).epsilon(1e-12));

    CHECK_THROWS_AS((void)disjointness_bound(2.9, BoundForm::product), std::domain_error);
    CHECK_THROWS_AS((void)disjointness_bound(2.9, BoundForm::exponential),
                    std::domain_error);
}

TEST_CASE("product form dominates the exponential form") {
    for (uint64_t n = 3; n <= 10'000; ++n) {
        const double p = disjointness_bound(static_cast<double>(n), BoundForm::product).ln();
        const double e =
            disjointness_bound(static_cast<double>(n), BoundForm::exponential).ln();
        if (!(p >= e)) {
            CAPTURE(n);
            REQUIRE(p >= e);
        }
    }
    for (uint64_t n = 10'000; n <= 1'000'000; n += 997) {
        const double p = disjointness_bound(static_cast<double>(n), BoundForm::product).ln();
        const double e =
            disjointness_bound(static_cast<double>(n), BoundForm::exponential).ln();
        REQUIRE(p >= e);
    }
}

TEST_CASE("tail sum matches plain direct summation") {
    const TailSum ts = tail_sum(100, 1e-9);
    const double direct = oracle::direct_tail_ln(100, 1'000'000);
    CHECK(ts.ln_sum == doctest::Approx(direct).epsilon(1e-6));
    CHECK(ts.ln_sum == doctest::Approx(-0.9952624756259868).epsilon(1e-6));
    CHECK(ts.terms_used < 1'000'000);  // the stopping rule must actually stop
}

TEST_CASE("tail sum hits the published magnitudes") {
    const double s20 = tail_sum(20'000, 1e-9).ln_sum / std::numbers::ln10;
    CHECK(s20 == doctest::Approx(-86.46829937611113).epsilon(1e-6));
    const double s50 = tail_sum(50'000, 1e-9).ln_sum / std::numbers::ln10;
    CHECK(s50 == doctest::Approx(-183.32984598843936).epsilon(1e-6));
}

TEST_CASE("tail sum invariants") {
    double prev = std::numeric_limits<double>::infinity();
    for (uint64_t start : {3ULL, 10ULL, 100ULL, 317ULL, 1000ULL, 20'000ULL, 50'000ULL}) {
        const TailSum ts = tail_sum(start, 1e-9);
        // recorded remainder bound honours the requested tolerance
        CHECK(ts.truncation_bound_ln <= std::log(1e-9) + ts.ln_sum);
        // the sum dominates its own first term
        const double l = std::log(static_cast<double>(start));
        CHECK(ts.ln_sum >= -static_cast<double>(start) / (l * l));
        // strictly decreasing in the starting index
        CHECK(ts.ln_sum < prev);
        prev = ts.ln_sum;
        CHECK(ts.start == start);
        CHECK(ts.terms_used >= 1);
    }
}

TEST_CASE("tail sum argument validation") {
    CHECK_THROWS_AS((void)tail_sum(2, 1e-9), std::domain_error);
    CHECK_THROWS_AS((void)tail_sum(100, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)tail_sum(100, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)tail_sum(100, -0.5), std::invalid_argument);
}

TEST_CASE("sqrt bound") {
    CHECK(sqrt_bound(1e18).ln() == -1e9);  // exact: both are representable
    CHECK(sqrt_bound(0.0).ln() == 0.0);    // probability one
    CHECK(sqrt_bound(4.0).ln() == -2.0);
    CHECK_THROWS_AS((void)sqrt_bound(-1.0), std::domain_error);
}

TEST_CASE("inequality crossover") {
    // independent scan for the last n where n/ln^2 n <= sqrt n + ln(2 sqrt n)
    uint64_t last_violation = 0;
    for (uint64_t n = 2; n <= 10'000; ++n) {
        const double x = static_cast<double>(n);
        const double lhs = x / (std::log(x) * std::log(x));
        const double rhs = std::sqrt(x) + std::log(2.0 * std::sqrt(x));
        if (lhs <= rhs) last_violation = n;
    }
    CHECK(last_violation + 1 == 6866);

    CHECK(inequality_crossover(10'000) == 6866);
    CHECK(inequality_crossover(20'000) == 6866);

    // spot values on both sides of the crossover
    const double at_1e4 = 1e4 / (std::log(1e4) * std::log(1e4)) -
                          (std::sqrt(1e4) + std::log(2.0 * std::sqrt(1e4)));
    CHECK(at_1e4 == doctest::Approx(117.88231063 - 105.29831737).epsilon(1e-6));
    const double at_5e3 = 5e3 / (std::log(5e3) * std::log(5e3)) -
                          (std::sqrt(5e3) + std::log(2.0 * std::sqrt(5e3)));
    CHECK(at_5e3 < 0.0);

    CHECK_THROWS_AS((void)inequality_crossover(9'999), std::domain_error);
}

TEST_CASE("alpha solver: frozen roots and residual bound") {
    const AlphaSolution a6 = alpha_solve(1e6);
    CHECK(a6.alpha == doctest::Approx(0.6199567872214695).epsilon(1e-9));
    CHECK(a6.alpha_closed_form == doctest::Approx(0.6198776869722977).epsilon(1e-12));
    CHECK(a6.n == 1e6);

    const AlphaSolution a18 = alpha_solve(4e18);
    CHECK(a18.alpha == doctest::Approx(0.8245595670486395).epsilon(1e-9));

    for (double N : {1e4, 1e6, 1e9, 1e12, 1e18, 4e18}) {
        const AlphaSolution s = alpha_solve(N);
        CHECK(s.alpha > 0.5);
        CHECK(s.alpha < 1.0);
        const double L = std::log(N);
        CHECK(s.residual <= 1e-6 * N / (L * L));
        // the root is bracketed tightly
        CHECK(alpha_f(s.alpha - 1e-4, N) < 0.0);
        CHECK(alpha_f(s.alpha + 1e-4, N) > 0.0);
    }
}

TEST_CASE("alpha solver agrees with the closed form to 0.01") {
    for (double N : {1e6, 1e9, 1e12, 1e18}) {
        const AlphaSolution s = alpha_solve(N);
        CHECK(std::fabs(s.alpha - s.alpha_closed_form) <= 0.01);
    }
}

TEST_CASE("alpha solver error cases") {
    // at N = 1000 the equation has no root in (1/2, 1): f(1/2) is already
    // positive there; the solver must report instead of guessing
    CHECK_THROWS_AS((void)alpha_solve(1000.0), std::runtime_error);
    CHECK_THROWS_AS((void)alpha_solve(999.0), std::domain_error);
}

TEST_CASE("alpha closed-form estimate") {
    const double nee = std::exp(std::numbers::e);
    CHECK(alpha_approx(nee) ==
          doctest::Approx(1.0 - 2.0 / std::numbers::e).epsilon(1e-14));
    CHECK(alpha_approx(4e18) == doctest::Approx(0.8245595670486394).epsilon(1e-12));
    CHECK(alpha_approx(1e6) == doctest::Approx(0.6198776869722977).epsilon(1e-12));
    CHECK_THROWS_AS((void)alpha_approx(std::numbers::e), std::domain_error);
    CHECK_THROWS_AS((void)alpha_approx(1.0), std::domain_error);
}

TEST_CASE("alpha tail bound") {
    CHECK(alpha_tail_bound(1e6).ln() == doctest::Approx(-5244.9424024).epsilon(1e-6));
    const double ln18 = alpha_tail_bound(4e18).ln();
    CHECK(ln18 <= -1e15);
    CHECK(ln18 == doctest::Approx(-2.1802511923e15).epsilon(1e-6));
}

// The defining equation makes N^alpha = N/ln^2 N + (1 - alpha) ln N - ln alpha,
// which exceeds N/ln^2 N, while the summed tail is roughly
// ln^2 N / (1 - 2/ln N) times its own first term exp(-N/ln^2 N). The bound
// therefore sits a few nats BELOW the summed tail at these magnitudes
// (-209.1 vs -199.1 at N = 2e4, -432.4 vs -422.1 at N = 5e4), so the
// dominance stated here cannot hold with the equation as defined. Kept as
// written, marked may_fail, so the gap stays visible.
TEST_CASE("alpha tail bound dominates the summed tail" * doctest::may_fail()) {
    for (uint64_t N : {20'000ULL, 50'000ULL}) {
        const double bound = alpha_tail_bound(static_cast<double>(N)).ln();
        const double summed = tail_sum(N, 1e-9).ln_sum;
        CHECK(bound >= summed);
    }
}

TEST_CASE("asymptotic and empirical subset sizes") {
    CHECK(asymptotic_k(1e4) == 1085);
    CHECK(asymptotic_k(3.0) == 2);
    CHECK_THROWS_AS((void)asymptotic_k(2.0), std::domain_error);

    const PrimeTable table = sieve_primes(100);
    const IntegerSubset primes = build_subset({SubsetKind::primes, 0, 0, 100}, table);
    // n = 5: three elements <= 5, one element in (5, 9]
    const auto [k1, k2] = empirical_counts(primes, 5);
    CHECK(k1 == 3);
    CHECK(k2 == 1);
    CHECK_THROWS_AS((void)empirical_counts(primes, 51), std::out_of_range);

    // the empirical counts feed the exact formula
    const LogProb p = exact_disjoint_prob(5, k1, k2);
    CHECK(p.ln() <= 0.0);
}

TEST_SUITE_END();
