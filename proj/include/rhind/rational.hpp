#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rhind {

using Int = std::int64_t;

// Checked 64-bit arithmetic. The table workload stays far below the limits,
// but the general solver contract is to reject out-of-range inputs rather
// than wrap around.
inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer product out of 64-bit range: " + std::to_string(a) +
                                  " * " + std::to_string(b));
    return out;
}

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer sum out of 64-bit range: " + std::to_string(a) +
                                  " + " + std::to_string(b));
    return out;
}

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const Int g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integral() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                checked_mul(a.den_, b.den_)};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num_, b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_)};
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return {num_ < 0 ? -num_ : num_, den_}; }

    /// "2" or "10/7" style rendering, matching the printed tables.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    Int num_;
    Int den_;
};

} // namespace rhind
