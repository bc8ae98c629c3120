// montecarlo.cpp

#include "goldbach/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "goldbach/rng.hpp"

namespace goldbach {

namespace {

// Scratch reused across the trials of one worker.
struct TrialScratch {
    std::vector<uint32_t> pool;     // permutation workspace, 0..n-1
    std::vector<uint8_t> in_first;  // membership of the k1-subset
};

bool trial_is_disjoint(uint64_t n, uint64_t k1, uint64_t k2, SplitMix64 rng,
                       TrialScratch& s) {
    std::iota(s.pool.begin(), s.pool.end(), 0u);
    std::fill(s.in_first.begin(), s.in_first.end(), 0);

    // Partial Fisher-Yates: after i swaps, pool[0..i] are the selected
    // elements, uniformly without replacement.
    for (uint64_t i = 0; i < k1; ++i) {
        const uint64_t j = i + rng.next_below(n - i);
        std::swap(s.pool[i], s.pool[j]);
        s.in_first[s.pool[i]] = 1;
    }
    std::iota(s.pool.begin(), s.pool.end(), 0u);
    for (uint64_t i = 0; i < k2; ++i) {
        const uint64_t j = i + rng.next_below(n - i);
        std::swap(s.pool[i], s.pool[j]);
        if (s.in_first[s.pool[i]]) return false;
    }
    return true;
}

uint64_t count_disjoint(uint64_t n, uint64_t k1, uint64_t k2, uint64_t seed,
                        uint64_t first_trial, uint64_t trial_count) {
    TrialScratch s;
    s.pool.resize(static_cast<size_t>(n));
    s.in_first.resize(static_cast<size_t>(n));
    uint64_t hits = 0;
    for (uint64_t tau = first_trial; tau < first_trial + trial_count; ++tau)
        if (trial_is_disjoint(n, k1, k2, substream(seed, tau), s)) ++hits;
    return hits;
}

}  // namespace

McEstimate mc_disjoint(uint64_t n, uint64_t k1, uint64_t k2, uint64_t trials, uint64_t seed,
                       unsigned jobs) {
    if (k1 > n || k2 > n)
        throw std::domain_error("mc_disjoint: subset size exceeds n");
    if (trials < 1) throw std::invalid_argument("mc_disjoint: trials must be >= 1");
    if (n == 0) {
        // Only k1 = k2 = 0 reaches here; empty sets are always disjoint.
        return McEstimate{1.0, 0.0, trials, seed};
    }

    const unsigned n_jobs =
        static_cast<unsigned>(std::min<uint64_t>(std::max(1u, jobs), trials));

    uint64_t hits = 0;
    if (n_jobs == 1) {
        hits = count_disjoint(n, k1, k2, seed, 0, trials);
    } else {
        std::vector<uint64_t> partial(n_jobs, 0);
        std::vector<std::thread> workers;
        const uint64_t per = trials / n_jobs, extra = trials % n_jobs;
        uint64_t start = 0;
        for (unsigned w = 0; w < n_jobs; ++w) {
            const uint64_t count = per + (w < extra ? 1 : 0);
            workers.emplace_back([&partial, w, n, k1, k2, seed, start, count] {
                partial[w] = count_disjoint(n, k1, k2, seed, start, count);
            });
            start += count;
        }
        for (auto& t : workers) t.join();
        for (uint64_t h : partial) hits += h;  // exact integer merge
    }

    McEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

}  // namespace goldbach
