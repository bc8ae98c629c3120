// probmodel.hpp
// The probability model behind the verification effort, evaluated entirely
// in log space: the exact probability that two independent uniform random
// subsets of {0..n-1} are disjoint, its closed-form bounds, the infinite
// tail sum of those bounds above a verified threshold, and the machinery
// that sharpens exp(-sqrt(N)) to exp(-N^alpha).

#pragma once
#include <cstdint>
#include <utility>

#include "goldbach/logprob.hpp"
#include "goldbach/subsets.hpp"

namespace goldbach {

enum class BoundForm { product, exponential };

// P(A and B disjoint) for independent uniform random k1- and k2-subsets
// A, B of {0..n-1}: C(n-k1, k2) / C(n, k2), evaluated as
// sum_{i=0}^{k2-1} [ln(n-k1-i) - ln(n-i)]. Probability zero (ln = -inf)
// when k2 > n - k1. Throws std::domain_error when k1 > n or k2 > n.
LogProb exact_disjoint_prob(uint64_t n, uint64_t k1, uint64_t k2);

// Closed-form bounds on the same probability with k1 = k2 = n/ln n:
//   product:     (n/ln n) * ln(1 - 1/ln n)
//   exponential: -n / ln^2 n
// Requires n >= 3; below that ln n <= ln 2 < 1 makes 1 - 1/ln n nonpositive.
LogProb disjointness_bound(double n, BoundForm form);

struct TailSum {
    uint64_t start = 0;              // first summed index
    double ln_sum = 0.0;             // ln of the accumulated sum
    uint64_t terms_used = 0;
    double truncation_bound_ln = 0;  // ln of the bound on the discarded remainder
};

// sum_{n >= start} exp(-n / ln^2 n), accumulated with log_add. Terms are
// added until the geometric remainder estimate term/(1 - r), taken at the
// local decay rate r = exp(-(1 - 2/ln n)/ln^2 n) (the derivative of
// n/ln^2 n), drops below rel_eps times the running sum. Requires start >= 3
// and rel_eps in (0, 1); throws std::domain_error / std::invalid_argument.
TailSum tail_sum(uint64_t start, double rel_eps);

// exp(-sqrt(n)): ln = -sqrt(n). n >= 0.
LogProb sqrt_bound(double n);

// Smallest n0 such that n/ln^2 n > sqrt(n) + ln(2 sqrt(n)) for every
// integer n in [n0, scan_limit], established by a full scan; additionally
// requires the difference to still be increasing at scan_limit. Requires
// scan_limit >= 10^4; throws std::runtime_error if no such n0 exists.
uint64_t inequality_crossover(uint64_t scan_limit);

struct AlphaSolution {
    double alpha = 0.0;              // root in (1/2, 1)
    double residual = 0.0;           // |f(alpha)| of the defining equation
    double alpha_closed_form = 0.0;  // 1 - 2 ln ln N / ln N
    double n = 0.0;                  // the N the solution belongs to
};

// Root of f(a) = N^a + (a - 1) ln N + ln a - N/ln^2 N on (1/2, 1), found by
// bisection (f is increasing in a). Interval narrowed to 1e-12, at most 200
// steps. Requires N >= 1e3; throws std::runtime_error when f does not
// change sign on the interval (no root: reported, never guessed).
AlphaSolution alpha_solve(double N);

// The closed-form estimate 1 - 2 ln ln N / ln N. Requires N > e.
double alpha_approx(double N);

// exp(-N^alpha) with alpha from alpha_solve(N): ln = -N^alpha.
LogProb alpha_tail_bound(double N);

// k1 = k2 = floor(n / ln n), the asymptotic subset sizes the closed-form
// bounds substitute into the exact formula.
uint64_t asymptotic_k(double n);

// Subset-measured sizes for the same formula: k1 = pi_Q(n),
// k2 = pi_Q(2n-1) - pi_Q(n). Requires 2n - 1 <= Q.limit.
std::pair<uint64_t, uint64_t> empirical_counts(const IntegerSubset& q, uint64_t n);

}  // namespace goldbach
