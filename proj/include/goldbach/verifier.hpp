// verifier.hpp
// Decides, for each even 2n in a range, whether 2n = q1 + q2 with both
// summands in a subset Q, and aggregates counterexamples and witness
// statistics. The distance-set view (A_n, B_n) is exposed alongside the
// direct witness search; the two must agree and tests hold them to it.

#pragma once
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "goldbach/subsets.hpp"

#include "json.hpp"

namespace goldbach {

struct Witness {
    uint64_t q1;  // q1 <= q2, q1 + q2 = 2n
    uint64_t q2;
};

struct VerificationReport {
    SubsetSpec spec;
    uint64_t from_even = 0;
    uint64_t to_even = 0;
    std::vector<uint64_t> counterexamples;            // ascending, all even
    std::optional<uint64_t> largest_failing_even;     // max(counterexamples)
    uint64_t max_min_witness = 0;  // largest smallest-q1 over witnessed evens
    uint64_t checked_count = 0;
    std::chrono::milliseconds elapsed{0};
};

// Smallest-q1 witness for 2n, or nullopt when no representation exists.
// Scans Q ascending while q1 <= n and probes 2n - q1 via the bit table.
// Requires n >= 2 and 2n <= Q.limit.
std::optional<Witness> goldbach_witness(const IntegerSubset& q, uint64_t n);

// Distance sets A_n = {n - q : q in Q, q <= n} and
// B_n = {q - n : q in Q, n <= q < 2n}, both ascending, both within [0, n-1].
// 2n has a representation iff they intersect. Requires 2n <= Q.limit.
std::pair<std::vector<uint64_t>, std::vector<uint64_t>> build_AB(const IntegerSubset& q,
                                                                 uint64_t n);

// Checks every even in [from_even, to_even]. jobs > 1 shards the range into
// contiguous chunks merged in order, so the report is identical for any job
// count. Throws std::invalid_argument on odd endpoints, from_even < 4, or
// to_even > Q.limit.
VerificationReport verify_range(const IntegerSubset& q, uint64_t from_even, uint64_t to_even,
                                unsigned jobs = 1);

// Executable check that shifting primes by c preserves representability:
// for every even 2n with 2c+2 < 2n <= limit, the shifted set P_c represents
// 2n exactly when the primes represent 2(n-c). Requires limit >= 2c + 4.
bool verify_shift_theorem(uint64_t c, uint64_t limit, const PrimeTable& table);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace goldbach
