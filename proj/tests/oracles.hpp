// oracles.hpp
// Test-only reference implementations. Deliberately naive, sharing no code
// with the library paths they are used to check.

#pragma once
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

// Primes by trial division.
inline std::vector<uint64_t> trial_division_primes(uint64_t limit) {
    std::vector<uint64_t> out;
    for (uint64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

// Counts disjoint pairs among all (k1-subset, k2-subset) pairs of {0..n-1}
// by bitmask enumeration. Returns {disjoint pairs, total pairs}. n <= 20.
inline std::pair<uint64_t, uint64_t> enumerated_disjoint_pairs(unsigned n, unsigned k1,
                                                               unsigned k2) {
    std::vector<std::vector<uint32_t>> by_pop(n + 1);
    for (uint32_t m = 0; m < (1u << n); ++m)
        by_pop[static_cast<unsigned>(std::popcount(m))].push_back(m);
    uint64_t disjoint = 0;
    for (uint32_t a : by_pop[k1])
        for (uint32_t b : by_pop[k2])
            if ((a & b) == 0) ++disjoint;
    return {disjoint, static_cast<uint64_t>(by_pop[k1].size()) * by_pop[k2].size()};
}

inline double logaddexp(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

// Plain fixed-term log-space summation of exp(-n / ln^2 n).
inline double direct_tail_ln(uint64_t start, uint64_t terms) {
    double s = -std::numeric_limits<double>::infinity();
    for (uint64_t n = start; n < start + terms; ++n) {
        const double l = std::log(static_cast<double>(n));
        s = logaddexp(s, -static_cast<double>(n) / (l * l));
    }
    return s;
}

}  // namespace oracle
