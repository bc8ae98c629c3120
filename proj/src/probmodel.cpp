// probmodel.cpp

#include "goldbach/probmodel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace goldbach {

LogProb exact_disjoint_prob(uint64_t n, uint64_t k1, uint64_t k2) {
    if (k1 > n || k2 > n)
        throw std::domain_error("exact_disjoint_prob: subset size exceeds n");
    if (k2 > n - k1) return LogProb::zero();
    double s = 0.0;
    for (uint64_t i = 0; i < k2; ++i)
        s += std::log(static_cast<double>(n - k1 - i)) -
             std::log(static_cast<double>(n - i));
    // Each addend is <= 0 in exact arithmetic; clear the last-ulp dust.
    return LogProb::from_ln(std::min(s, 0.0));
}

LogProb disjointness_bound(double n, BoundForm form) {
    if (!(n >= 3.0))
        throw std::domain_error("disjointness_bound: n must be >= 3, got " +
                                std::to_string(n));
    const double ln_n = std::log(n);
    switch (form) {
        case BoundForm::product:
            return LogProb::from_ln((n / ln_n) * std::log1p(-1.0 / ln_n));
        case BoundForm::exponential:
            return LogProb::from_ln(-n / (ln_n * ln_n));
    }
    throw std::logic_error("disjointness_bound: unreachable");
}

TailSum tail_sum(uint64_t start, double rel_eps) {
    if (start < 3) throw std::domain_error("tail_sum: start must be >= 3");
    if (!(rel_eps > 0.0) || !(rel_eps < 1.0))
        throw std::invalid_argument("tail_sum: rel_eps must lie in (0, 1)");

    const double ln_eps = std::log(rel_eps);
    TailSum out;
    out.start = start;
    out.ln_sum = -std::numeric_limits<double>::infinity();

    for (uint64_t n = start;; ++n) {
        const double ln_n = std::log(static_cast<double>(n));
        const double term_ln = -static_cast<double>(n) / (ln_n * ln_n);
        out.ln_sum = log_add(out.ln_sum, term_ln);
        ++out.terms_used;

        // n/ln^2 n decreases until ln n = 2; no stopping estimate there.
        if (ln_n <= 2.0) continue;
        const double rate = (1.0 - 2.0 / ln_n) / (ln_n * ln_n);
        // remainder <= term / (1 - r) with r = exp(-rate)
        const double ln_one_minus_r = std::log(-std::expm1(-rate));
        out.truncation_bound_ln = term_ln - ln_one_minus_r;
        if (out.truncation_bound_ln < ln_eps + out.ln_sum) break;
    }
    return out;
}

LogProb sqrt_bound(double n) {
    if (!(n >= 0.0)) throw std::domain_error("sqrt_bound: n must be >= 0");
    return LogProb::from_ln(-std::sqrt(n));
}

uint64_t inequality_crossover(uint64_t scan_limit) {
    if (scan_limit < 10'000)
        throw std::domain_error("inequality_crossover: scan limit must be >= 10^4");

    // d(n) = n/ln^2 n - (sqrt n + ln(2 sqrt n))
    auto diff = [](uint64_t n) {
        const double x = static_cast<double>(n);
        const double l = std::log(x);
        return x / (l * l) - (std::sqrt(x) + std::numbers::ln2 + 0.5 * l);
    };

    uint64_t last_violation = 0;
    for (uint64_t n = 2; n <= scan_limit; ++n)
        if (diff(n) <= 0.0) last_violation = n;

    if (last_violation >= scan_limit)
        throw std::runtime_error("inequality_crossover: no crossover at or below " +
                                 std::to_string(scan_limit));
    if (!(diff(scan_limit) > diff(scan_limit - 1)))
        throw std::runtime_error(
            "inequality_crossover: difference not increasing at the scan limit");
    return last_violation + 1;
}

namespace {

// f(a) = N^a + (a - 1) ln N + ln a - N/ln^2 N, increasing in a on (1/2, 1).
double alpha_equation(double a, double ln_n, double target) {
    return std::exp(a * ln_n) + (a - 1.0) * ln_n + std::log(a) - target;
}

}  // namespace

AlphaSolution alpha_solve(double N) {
    if (!(N >= 1e3)) throw std::domain_error("alpha_solve: N must be >= 1e3");
    const double ln_n = std::log(N);
    const double target = N / (ln_n * ln_n);

    double lo = 0.5, hi = 1.0;
    const double f_lo = alpha_equation(lo, ln_n, target);
    const double f_hi = alpha_equation(hi, ln_n, target);
    if (!(f_lo < 0.0) || !(f_hi > 0.0))
        throw std::runtime_error(
            "alpha_solve: no sign change on (1/2, 1) at N=" + std::to_string(N) +
            "; f(1/2)=" + std::to_string(f_lo) + ", f(1)=" + std::to_string(f_hi));

    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (alpha_equation(mid, ln_n, target) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    AlphaSolution sol;
    sol.alpha = 0.5 * (lo + hi);
    sol.residual = std::fabs(alpha_equation(sol.alpha, ln_n, target));
    sol.alpha_closed_form = 1.0 - 2.0 * std::log(ln_n) / ln_n;
    sol.n = N;
    return sol;
}

double alpha_approx(double N) {
    if (!(N > std::numbers::e))
        throw std::domain_error("alpha_approx: N must exceed e");
    const double ln_n = std::log(N);
    return 1.0 - 2.0 * std::log(ln_n) / ln_n;
}

LogProb alpha_tail_bound(double N) {
    const AlphaSolution sol = alpha_solve(N);
    return LogProb::from_ln(-std::exp(sol.alpha * std::log(N)));
}

uint64_t asymptotic_k(double n) {
    if (!(n >= 3.0)) throw std::domain_error("asymptotic_k: n must be >= 3");
    return static_cast<uint64_t>(std::floor(n / std::log(n)));
}

std::pair<uint64_t, uint64_t> empirical_counts(const IntegerSubset& q, uint64_t n) {
    if (2 * n - 1 > q.spec().limit)
        throw std::out_of_range("empirical_counts: 2n - 1 exceeds subset limit");
    const uint64_t below = q.counting_function(n);
    const uint64_t upto_2n = q.counting_function(2 * n - 1);
    return {below, upto_2n - below};
}

}  // namespace goldbach
