#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhind/rational.hpp"

namespace rhind {

/// An irreducible target fraction p/q < 1. For the Egyptian table workload
/// p = 2 and q is odd.
struct TargetFraction {
    Int p;
    Int q;

    TargetFraction(Int num, Int den) : p(num), q(den) {
        if (p <= 0 || q <= 0) throw std::invalid_argument("target fraction must be positive");
        if (p >= q) throw std::invalid_argument("target fraction must be < 1");
        if (std::gcd(p, q) != 1) throw std::invalid_argument("target fraction must be irreducible");
    }

    Rational value() const { return {p, q}; }

    friend bool operator==(const TargetFraction& a, const TargetFraction& b) {
        return a.p == b.p && a.q == b.q;
    }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

/// A sum of distinct unit fractions 1/d1 + 1/d2 + ... attached to a target.
/// Parts are stored sorted ascending; equal parts are rejected at
/// construction. Whether the sum actually equals the target is a separate
/// question, answered by verify_identity().
class Decomposition {
  public:
    Decomposition(TargetFraction target, std::vector<Int> parts)
        : target_(target), parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("decomposition needs at least one part");
        for (Int d : parts_)
            if (d < 1) throw std::invalid_argument("part denominator must be positive");
        std::sort(parts_.begin(), parts_.end());
        if (std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end())
            throw std::invalid_argument("equal part denominators are not allowed");
    }

    Decomposition(TargetFraction target, std::initializer_list<Int> parts)
        : Decomposition(target, std::vector<Int>(parts)) {}

    const TargetFraction& target() const { return target_; }
    const std::vector<Int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.target_ == b.target_ && a.parts_ == b.parts_;
    }
    friend bool operator<(const Decomposition& a, const Decomposition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const {
        std::string out = target_.str() + " = ";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += " + ";
            out += "1/" + std::to_string(parts_[i]);
        }
        return out;
    }

  private:
    TargetFraction target_;
    std::vector<Int> parts_;
};

/// Exact check that the parts sum to the target. Pure integer arithmetic,
/// total over all valid Decomposition values.
inline bool verify_identity(const Decomposition& d) {
    Rational sum(0);
    for (Int part : d.parts()) sum = sum + Rational(1, part);
    return sum == d.target().value();
}

/// Divide a decomposition of p/x by f, giving a decomposition of p/(x*f)
/// with every part denominator multiplied by f.
inline Decomposition scale_decomposition(const Decomposition& d, Int f) {
    if (f <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<Int> parts;
    parts.reserve(d.size());
    for (Int part : d.parts()) parts.push_back(checked_mul(part, f));
    // the scaled target p/(q*f) may be reducible (p = 2, f even); keep the
    // target irreducible, the part sum is unchanged
    const Rational target = Rational(d.target().p, checked_mul(d.target().q, f));
    return {TargetFraction(target.num(), target.den()), std::move(parts)};
}

inline bool all_even_parts(const Decomposition& d) {
    return std::all_of(d.parts().begin(), d.parts().end(), [](Int p) { return p % 2 == 0; });
}

} // namespace rhind
