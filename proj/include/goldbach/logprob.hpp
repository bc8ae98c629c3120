// logprob.hpp
// A probability carried as its natural logarithm. Magnitudes like 1e-183
// or exp(-1e15) never exist as plain doubles anywhere in this project;
// they stay in log space from formula to output.

#pragma once
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace goldbach {

class LogProb {
public:
    // ln_value <= 0; -infinity encodes probability zero.
    static LogProb from_ln(double ln_value) {
        if (std::isnan(ln_value) || ln_value > 0.0)
            throw std::domain_error("LogProb: ln value must be <= 0");
        return LogProb(ln_value);
    }
    static LogProb zero() { return LogProb(-std::numeric_limits<double>::infinity()); }
    static LogProb one() { return LogProb(0.0); }

    double ln() const { return ln_; }
    double log10() const { return ln_ / std::numbers::ln10; }

private:
    explicit LogProb(double v) : ln_(v) {}
    double ln_;
};

// ln(exp(a) + exp(b)) staying in log space.
inline double log_add(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace goldbach
