// sieve.cpp
// Segmented sieve: a base sieve up to sqrt(limit), then fixed-size segments
// marked with the base primes. Segments keep the working set at ~1 MiB no
// matter the limit.

#include "goldbach/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace goldbach {

static uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

uint64_t PrimeTable::prime_count(uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("prime_count: n=" + std::to_string(n) +
                                " exceeds table limit " + std::to_string(limit_));
    auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
    return static_cast<uint64_t>(it - primes_.begin());
}

PrimeTable sieve_primes(uint64_t limit) {
    if (limit > kSieveLimitBudget)
        throw std::length_error("sieve limit " + std::to_string(limit) +
                                " exceeds memory budget limit " +
                                std::to_string(kSieveLimitBudget));

    std::vector<uint64_t> primes;
    if (limit < 2) return PrimeTable(limit, std::move(primes));

    // Base sieve up to sqrt(limit).
    const uint64_t sq = isqrt(limit);
    std::vector<uint8_t> small(sq + 1, 1);
    if (sq >= 1) small[1] = 0;
    small[0] = 0;
    for (uint64_t i = 2; i * i <= sq; ++i)
        if (small[i])
            for (uint64_t j = i * i; j <= sq; j += i) small[j] = 0;

    std::vector<uint64_t> base;
    for (uint64_t i = 2; i <= sq; ++i)
        if (small[i]) base.push_back(i);

    primes.reserve(static_cast<size_t>(
        limit > 16 ? 1.2 * pi_approx(static_cast<double>(limit)) + 16 : 16));

    std::vector<uint8_t> seg;
    for (uint64_t lo = 2; lo <= limit; lo += kSieveSegmentSize) {
        const uint64_t hi = std::min(lo + kSieveSegmentSize - 1, limit);
        seg.assign(static_cast<size_t>(hi - lo + 1), 1);
        for (uint64_t p : base) {
            if (p * p > hi) break;
            uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (uint64_t j = start; j <= hi; j += p) seg[static_cast<size_t>(j - lo)] = 0;
        }
        for (uint64_t v = lo; v <= hi; ++v)
            if (seg[static_cast<size_t>(v - lo)]) primes.push_back(v);
    }
    return PrimeTable(limit, std::move(primes));
}

double pi_approx(double n) {
    if (!(n > 1.0))
        throw std::domain_error("pi_approx: n must exceed 1, got " + std::to_string(n));
    return n / std::log(n);
}

// ------------------------------------------------------------------
// Binary cache
// ------------------------------------------------------------------

static void put_u64le(std::ostream& out, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 8);
}

static bool get_u64le(std::istream& in, uint64_t& v) {
    char b[8];
    in.read(b, 8);
    if (in.gcount() != 8) return false;
    v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return true;
}

void save_prime_cache(const PrimeTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open prime cache for writing: " + path);
    put_u64le(out, table.limit());
    for (uint64_t p : table.primes()) put_u64le(out, p);
    if (!out) throw std::runtime_error("short write to prime cache: " + path);
}

PrimeTable load_prime_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open prime cache: " + path);
    uint64_t limit = 0;
    if (!get_u64le(in, limit))
        throw std::runtime_error("prime cache missing limit header: " + path);

    std::vector<uint64_t> primes;
    uint64_t v = 0, prev = 0;
    while (get_u64le(in, v)) {
        if (v < 2 || v > limit || (prev != 0 && v <= prev))
            throw std::runtime_error("prime cache not strictly ascending at value " +
                                     std::to_string(v) + ": " + path);
        primes.push_back(v);
        prev = v;
    }
    if (in.gcount() != 0)
        throw std::runtime_error("prime cache truncated mid-value: " + path);
    return PrimeTable(limit, std::move(primes));
}

}  // namespace goldbach
