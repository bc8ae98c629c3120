// sieve.hpp
// Segmented sieve of Eratosthenes and the prime counting function pi(n).
// The PrimeTable is the substrate every subset construction starts from:
// read-only once built, safe to share across threads.

#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace goldbach {

// Hard cap on sieve limits. The prime sequence for 4e9 already needs
// ~1.5 GB; anything above that does not belong in memory on a desktop.
inline constexpr uint64_t kSieveLimitBudget = 4'000'000'000ULL;

// Numbers covered by one sieve segment (1 MiB of scratch per segment).
inline constexpr uint64_t kSieveSegmentSize = 1ULL << 20;

// All primes <= limit, ascending. pi(n) is answered by binary search over
// the sequence instead of a dense per-n count array: the sequence is the
// only O(limit)-sized thing we keep.
class PrimeTable {
public:
    PrimeTable(uint64_t limit, std::vector<uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    uint64_t limit() const { return limit_; }
    const std::vector<uint64_t>& primes() const { return primes_; }

    // pi(n) = |{p prime : p <= n}|. Throws std::out_of_range for n > limit.
    uint64_t prime_count(uint64_t n) const;

private:
    uint64_t limit_;
    std::vector<uint64_t> primes_;
};

// Deterministic, single-threaded construction of all primes <= limit.
// Throws std::length_error when limit exceeds kSieveLimitBudget.
PrimeTable sieve_primes(uint64_t limit);

// n / ln(n). Throws std::domain_error for n <= 1 where ln(n) <= 0.
double pi_approx(double n);

// On-disk prime cache: an 8-byte little-endian limit header followed by the
// prime sequence as little-endian 64-bit words, ascending. load validates
// the header and strict monotonicity and throws std::runtime_error on any
// corruption.
void save_prime_cache(const PrimeTable& table, const std::string& path);
PrimeTable load_prime_cache(const std::string& path);

}  // namespace goldbach
