// subsets.hpp
// Integer subsets whose counting function tracks pi(n): the primes
// themselves, primes shifted by a constant t, and primes jittered by
// seeded +-1 noise. A SubsetSpec fully determines its subset, so any
// result derived from one can be reproduced from the spec alone.

#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "goldbach/sieve.hpp"

namespace goldbach {

enum class SubsetKind { primes, shift, jitter };

const char* to_string(SubsetKind kind);
SubsetKind subset_kind_from_string(const std::string& s);

struct SubsetSpec {
    SubsetKind kind = SubsetKind::primes;
    int64_t t = 0;       // shift amount, meaningful for kind == shift only
    uint64_t seed = 0;   // jitter stream seed, meaningful for kind == jitter only
    uint64_t limit = 0;  // subset elements lie in [1, limit]

    bool operator==(const SubsetSpec&) const = default;
};

// A finite, sorted, duplicate-free set of naturals in [1, limit] with O(1)
// membership through a bit table. Immutable once built.
class IntegerSubset {
public:
    // Validates the invariants (ascending, in [1, limit]); throws
    // std::runtime_error on violation. Import paths rely on this.
    IntegerSubset(SubsetSpec spec, std::vector<uint64_t> elements);

    const SubsetSpec& spec() const { return spec_; }
    const std::vector<uint64_t>& elements() const { return elements_; }

    bool contains(uint64_t x) const {
        if (x > spec_.limit) return false;
        return (bits_[x >> 6] >> (x & 63)) & 1ULL;
    }

    // pi_Q(n) = |{q in Q : q <= n}|. Throws std::out_of_range for n > limit.
    uint64_t counting_function(uint64_t n) const;

private:
    SubsetSpec spec_;
    std::vector<uint64_t> elements_;
    std::vector<uint64_t> bits_;  // membership over [0, limit]
};

struct SimilarityReport {
    uint64_t c_observed;  // max over 1 <= n <= limit of |pi_Q(n) - pi(n)|
    uint64_t argmax_n;    // smallest n attaining it
    uint64_t limit;
};

// Constructions:
//   primes: {p <= limit}
//   shift:  {p + t : p prime, p + t <= limit}, t >= 0
//   jitter: one splitmix64 draw per prime p <= limit, ascending; bit 0 of
//           the draw picks delta (+1 if set, else -1). Candidates are tried
//           in the order p+delta, p-delta, p; the first one not already a
//           member is chosen and admitted iff it lies in [1, limit].
//           Dropping (instead of re-falling-back on) a chosen candidate just
//           above the limit keeps the subset at a smaller limit a restriction
//           of the subset at any larger one over [1, limit-1].
// Requires table.limit >= spec.limit and spec.limit >= 3. Negative shifts
// are rejected: silently dropping nonpositive elements would corrupt the
// counting-function identity pi_Q(n) = pi(n - t).
IntegerSubset build_subset(const SubsetSpec& spec, const PrimeTable& table);

// Exact maximum deviation |pi_Q(n) - pi(n)| over 1 <= n <= limit, found by
// one merged scan of the two sorted sequences. Requires table.limit >= limit.
SimilarityReport similarity_deviation(const IntegerSubset& q, const PrimeTable& table);

// Text form: a `# spec kind=... t=... seed=... limit=...` comment line, then
// one element per line, ascending.
void export_subset(const IntegerSubset& q, std::ostream& out);
IntegerSubset import_subset(std::istream& in);

}  // namespace goldbach
