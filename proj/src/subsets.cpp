// subsets.cpp

#include "goldbach/subsets.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "goldbach/rng.hpp"

namespace goldbach {

const char* to_string(SubsetKind kind) {
    switch (kind) {
        case SubsetKind::primes: return "primes";
        case SubsetKind::shift: return "shift";
        case SubsetKind::jitter: return "jitter";
    }
    return "?";
}

SubsetKind subset_kind_from_string(const std::string& s) {
    if (s == "primes") return SubsetKind::primes;
    if (s == "shift") return SubsetKind::shift;
    if (s == "jitter") return SubsetKind::jitter;
    throw std::invalid_argument("unknown subset kind: " + s);
}

IntegerSubset::IntegerSubset(SubsetSpec spec, std::vector<uint64_t> elements)
    : spec_(spec), elements_(std::move(elements)) {
    bits_.assign(static_cast<size_t>(spec_.limit / 64 + 1), 0);
    uint64_t prev = 0;
    for (uint64_t x : elements_) {
        if (x < 1 || x > spec_.limit)
            throw std::runtime_error("subset element " + std::to_string(x) +
                                     " outside [1, " + std::to_string(spec_.limit) + "]");
        if (x <= prev)
            throw std::runtime_error("subset elements not strictly ascending at " +
                                     std::to_string(x));
        bits_[x >> 6] |= 1ULL << (x & 63);
        prev = x;
    }
}

uint64_t IntegerSubset::counting_function(uint64_t n) const {
    if (n > spec_.limit)
        throw std::out_of_range("counting_function: n=" + std::to_string(n) +
                                " exceeds subset limit " + std::to_string(spec_.limit));
    auto it = std::upper_bound(elements_.begin(), elements_.end(), n);
    return static_cast<uint64_t>(it - elements_.begin());
}

static std::vector<uint64_t> jitter_elements(const SubsetSpec& spec, const PrimeTable& table) {
    // Membership-so-far, kept locally: the collision rule consults it.
    std::vector<uint64_t> bits(static_cast<size_t>(spec.limit / 64 + 1), 0);
    auto member = [&](uint64_t x) {
        return x <= spec.limit && ((bits[x >> 6] >> (x & 63)) & 1ULL);
    };

    std::vector<uint64_t> elems;
    SplitMix64 stream(spec.seed);
    for (uint64_t p : table.primes()) {
        if (p > spec.limit) break;
        const uint64_t draw = stream.next();  // exactly one draw per prime
        const bool plus = (draw & 1ULL) != 0;
        const uint64_t cand[3] = {plus ? p + 1 : p - 1, plus ? p - 1 : p + 1, p};
        for (uint64_t c : cand) {
            if (member(c)) continue;
            if (c >= 1 && c <= spec.limit) {
                bits[c >> 6] |= 1ULL << (c & 63);
                elems.push_back(c);
            }
            break;  // out-of-range candidates are dropped, not re-tried
        }
    }
    // p=2 then p=3 can admit 3 then 2; everything else is already ascending.
    std::sort(elems.begin(), elems.end());
    return elems;
}

IntegerSubset build_subset(const SubsetSpec& spec, const PrimeTable& table) {
    if (spec.limit < 3)
        throw std::domain_error("subset limit must be at least 3, got " +
                                std::to_string(spec.limit));
    if (table.limit() < spec.limit)
        throw std::invalid_argument("prime table limit " + std::to_string(table.limit()) +
                                    " below subset limit " + std::to_string(spec.limit));

    std::vector<uint64_t> elems;
    switch (spec.kind) {
        case SubsetKind::primes:
            for (uint64_t p : table.primes()) {
                if (p > spec.limit) break;
                elems.push_back(p);
            }
            break;
        case SubsetKind::shift: {
            if (spec.t < 0)
                throw std::invalid_argument("negative shift t=" + std::to_string(spec.t) +
                                            " is not supported");
            const uint64_t t = static_cast<uint64_t>(spec.t);
            for (uint64_t p : table.primes()) {
                if (p + t > spec.limit) break;
                elems.push_back(p + t);
            }
            break;
        }
        case SubsetKind::jitter:
            elems = jitter_elements(spec, table);
            break;
    }
    return IntegerSubset(spec, std::move(elems));
}

SimilarityReport similarity_deviation(const IntegerSubset& q, const PrimeTable& table) {
    const uint64_t limit = q.spec().limit;
    if (table.limit() < limit)
        throw std::invalid_argument("prime table limit below subset limit");

    const auto& qs = q.elements();
    const auto& ps = table.primes();

    // Deviation only changes where one of the sequences has an element, so
    // scanning the merged event points covers every n in [1, limit].
    uint64_t best = 0, arg = 1;
    size_t i = 0, j = 0;
    uint64_t cq = 0, cp = 0;
    while (true) {
        uint64_t nq = i < qs.size() ? qs[i] : UINT64_MAX;
        uint64_t np = (j < ps.size() && ps[j] <= limit) ? ps[j] : UINT64_MAX;
        uint64_t v = std::min(nq, np);
        if (v == UINT64_MAX) break;
        if (nq == v) { ++cq; ++i; }
        if (np == v) { ++cp; ++j; }
        uint64_t dev = cq > cp ? cq - cp : cp - cq;
        if (dev > best) { best = dev; arg = v; }
    }
    return SimilarityReport{best, arg, limit};
}

void export_subset(const IntegerSubset& q, std::ostream& out) {
    const auto& s = q.spec();
    out << "# spec kind=" << to_string(s.kind) << " t=" << s.t << " seed=" << s.seed
        << " limit=" << s.limit << "\n";
    for (uint64_t x : q.elements()) out << x << "\n";
}

IntegerSubset import_subset(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("subset import: empty input");

    SubsetSpec spec;
    {
        std::istringstream hs(header);
        std::string hash, word;
        hs >> hash >> word;
        if (hash != "#" || word != "spec")
            throw std::runtime_error("subset import: malformed header: " + header);
        bool have_kind = false, have_limit = false;
        std::string kv;
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("subset import: malformed header field: " + kv);
            const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "kind") {
                spec.kind = subset_kind_from_string(val);
                have_kind = true;
            } else if (key == "t") {
                spec.t = std::strtoll(val.c_str(), nullptr, 10);
            } else if (key == "seed") {
                spec.seed = std::strtoull(val.c_str(), nullptr, 10);
            } else if (key == "limit") {
                spec.limit = std::strtoull(val.c_str(), nullptr, 10);
                have_limit = true;
            } else {
                throw std::runtime_error("subset import: unknown header key: " + key);
            }
        }
        if (!have_kind || !have_limit)
            throw std::runtime_error("subset import: header missing kind or limit");
    }

    std::vector<uint64_t> elems;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        char* end = nullptr;
        uint64_t v = std::strtoull(line.c_str(), &end, 10);
        if (end == line.c_str() || *end != '\0')
            throw std::runtime_error("subset import: bad element line: " + line);
        elems.push_back(v);
    }
    // The constructor enforces ascending order and the [1, limit] range.
    return IntegerSubset(spec, std::move(elems));
}

}  // namespace goldbach
