// verifier.cpp

#include "goldbach/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace goldbach {

std::optional<Witness> goldbach_witness(const IntegerSubset& q, uint64_t n) {
    if (n < 2) throw std::domain_error("goldbach_witness: n must be at least 2");
    if (2 * n > q.spec().limit)
        throw std::out_of_range("goldbach_witness: 2n=" + std::to_string(2 * n) +
                                " exceeds subset limit " + std::to_string(q.spec().limit));
    for (uint64_t q1 : q.elements()) {
        if (q1 > n) break;
        if (q.contains(2 * n - q1)) return Witness{q1, 2 * n - q1};
    }
    return std::nullopt;
}

std::pair<std::vector<uint64_t>, std::vector<uint64_t>> build_AB(const IntegerSubset& q,
                                                                 uint64_t n) {
    if (2 * n > q.spec().limit)
        throw std::out_of_range("build_AB: 2n exceeds subset limit");
    std::vector<uint64_t> a, b;
    for (uint64_t v : q.elements()) {
        if (v <= n) a.push_back(n - v);       // descending as v ascends
        else if (v < 2 * n) b.push_back(v - n);
        else break;
    }
    std::reverse(a.begin(), a.end());
    return {std::move(a), std::move(b)};
}

namespace {

struct ChunkResult {
    std::vector<uint64_t> counterexamples;
    uint64_t max_min_witness = 0;
    uint64_t checked = 0;
};

// Same scan as goldbach_witness, without the per-call validation.
ChunkResult verify_chunk(const IntegerSubset& q, uint64_t from_even, uint64_t to_even) {
    ChunkResult r;
    const auto& elems = q.elements();
    for (uint64_t even = from_even; even <= to_even; even += 2) {
        const uint64_t n = even / 2;
        uint64_t found = 0;
        for (uint64_t q1 : elems) {
            if (q1 > n) break;
            if (q.contains(even - q1)) {
                found = q1;
                break;
            }
        }
        if (found == 0)
            r.counterexamples.push_back(even);
        else
            r.max_min_witness = std::max(r.max_min_witness, found);
        ++r.checked;
    }
    return r;
}

}  // namespace

VerificationReport verify_range(const IntegerSubset& q, uint64_t from_even, uint64_t to_even,
                                unsigned jobs) {
    if (from_even % 2 != 0 || to_even % 2 != 0)
        throw std::invalid_argument("verify_range: endpoints must be even");
    if (from_even < 4) throw std::invalid_argument("verify_range: from_even must be >= 4");
    if (from_even > to_even)
        throw std::invalid_argument("verify_range: from_even exceeds to_even");
    if (to_even > q.spec().limit)
        throw std::out_of_range("verify_range: to_even exceeds subset limit");

    const auto t0 = std::chrono::steady_clock::now();

    const uint64_t evens = (to_even - from_even) / 2 + 1;
    const unsigned n_jobs =
        static_cast<unsigned>(std::min<uint64_t>(std::max(1u, jobs), evens));

    // Static contiguous shards, merged in order below.
    std::vector<ChunkResult> parts(n_jobs);
    {
        std::vector<std::thread> workers;
        const uint64_t per = evens / n_jobs, extra = evens % n_jobs;
        uint64_t start_idx = 0;
        for (unsigned k = 0; k < n_jobs; ++k) {
            const uint64_t count = per + (k < extra ? 1 : 0);
            const uint64_t lo = from_even + 2 * start_idx;
            const uint64_t hi = lo + 2 * (count - 1);
            start_idx += count;
            if (n_jobs == 1) {
                parts[k] = verify_chunk(q, lo, hi);
            } else {
                workers.emplace_back(
                    [&q, &parts, k, lo, hi] { parts[k] = verify_chunk(q, lo, hi); });
            }
        }
        for (auto& w : workers) w.join();
    }

    VerificationReport rep;
    rep.spec = q.spec();
    rep.from_even = from_even;
    rep.to_even = to_even;
    for (const auto& part : parts) {
        rep.counterexamples.insert(rep.counterexamples.end(), part.counterexamples.begin(),
                                   part.counterexamples.end());
        rep.max_min_witness = std::max(rep.max_min_witness, part.max_min_witness);
        rep.checked_count += part.checked;
    }
    if (!rep.counterexamples.empty())
        rep.largest_failing_even = rep.counterexamples.back();
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

bool verify_shift_theorem(uint64_t c, uint64_t limit, const PrimeTable& table) {
    if (limit < 2 * c + 4)
        throw std::invalid_argument("verify_shift_theorem: limit must be at least 2c + 4");

    const IntegerSubset shifted =
        build_subset({SubsetKind::shift, static_cast<int64_t>(c), 0, limit}, table);
    const IntegerSubset primes = build_subset({SubsetKind::primes, 0, 0, limit}, table);

    // The claim covers evens strictly above 2c + 2.
    for (uint64_t even = 2 * c + 4; even <= limit; even += 2) {
        const bool with_shift = goldbach_witness(shifted, even / 2).has_value();
        const bool with_primes = goldbach_witness(primes, even / 2 - c).has_value();
        if (with_shift != with_primes) return false;
    }
    return true;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["spec"] = {{"kind", to_string(r.spec.kind)},
                 {"t", r.spec.t},
                 {"seed", r.spec.seed},
                 {"limit", r.spec.limit}};
    j["range"] = {r.from_even, r.to_even};
    j["counterexamples"] = r.counterexamples;
    if (r.largest_failing_even)
        j["largest_failing_even"] = *r.largest_failing_even;
    else
        j["largest_failing_even"] = nullptr;
    j["max_min_witness"] = r.max_min_witness;
    j["checked_count"] = r.checked_count;
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

}  // namespace goldbach
