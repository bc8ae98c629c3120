// montecarlo.hpp
// Stochastic oracle for the disjointness model: sample pairs of uniform
// random subsets and count how often they miss each other. Exists to check
// the exact formula from the outside, not to be fast.

#pragma once
#include <cstdint>

namespace goldbach {

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;  // sqrt(p_hat (1 - p_hat) / trials)
    uint64_t trials = 0;
    uint64_t seed = 0;
};

// Draws `trials` independent pairs of uniform k1- and k2-subsets of
// {0..n-1} (partial Fisher-Yates per subset) and returns the fraction of
// disjoint pairs. Trial tau consumes only substream(seed, tau): the first
// k1 draws select A, the next k2 select B. The estimate is bit-identical
// for any job count. Requires k1, k2 <= n and trials >= 1.
McEstimate mc_disjoint(uint64_t n, uint64_t k1, uint64_t k2, uint64_t trials, uint64_t seed,
                       unsigned jobs = 1);

}  // namespace goldbach
