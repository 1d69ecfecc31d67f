#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rhind/core.hpp"

namespace rhind {

/// One factorization q = k * r * s with r < s.
struct Triplet {
    Int k;
    Int r;
    Int s;

    friend bool operator==(const Triplet& a, const Triplet& b) {
        return a.k == b.k && a.r == b.r && a.s == b.s;
    }
    friend bool operator<(const Triplet& a, const Triplet& b) {
        return std::tie(a.k, a.r, a.s) < std::tie(b.k, b.r, b.s);
    }
};

/// A two-term solution 1/n1 + 1/n2 = p/q together with the triplet that
/// generated it and its derived attributes.
struct Candidate {
    TargetFraction target;
    Triplet triplet;
    Int n1;
    Int n2;
    Int delta;            // s - r
    Rational multiplicity; // n2/q = (r+s)/(p*r)
    bool trivial;          // (k, r, s) == (1, 1, q)

    Int sigma1() const { return checked_add(n1, n2); }
    Int sigma2() const { return checked_mul(n1, n2); }
    std::pair<Int, Int> pair() const { return {n1, n2}; }

    Decomposition decomposition() const { return {target, {n1, n2}}; }
};

/// D = l * m with l <= m, both odd.
struct FactorSplit {
    Int l;
    Int m;
};

/// k1 * k2 = D^2 with k1 < k2 odd and k1 != D.
struct SquarePair {
    Int k1;
    Int k2;
};

/// All triplets (k, r, s) with k*r*s = q and r < s, ascending by k then r.
inline std::vector<Triplet> divisor_triplets(Int q) {
    if (q < 1) throw std::invalid_argument("divisor_triplets: q must be >= 1");
    std::vector<Triplet> out;
    for (Int k = 1; k <= q; ++k) {
        if (q % k != 0) continue;
        const Int rs = q / k;
        for (Int r = 1; r * r < rs; ++r)
            if (rs % r == 0) out.push_back({k, r, rs / r});
    }
    return out;
}

namespace detail {

inline Candidate make_candidate(const TargetFraction& t, const Triplet& tr) {
    const Int sum = checked_add(tr.r, tr.s);
    const Int n1 = checked_mul(tr.k, checked_mul(tr.r, sum)) / t.p;
    const Int n2 = checked_mul(tr.k, checked_mul(tr.s, sum)) / t.p;
    return {t, tr, n1, n2, tr.s - tr.r, Rational(sum, t.p * tr.r),
            tr.k == 1 && tr.r == 1 && tr.s == t.q};
}

} // namespace detail

/// Every solution of 1/N1 + 1/N2 = p/q via the divisor-triplet theorem:
/// N1 = k*r*(r+s)/p, N2 = k*s*(r+s)/p, keeping only triplets whose (r+s)
/// is divisible by p. For p = 2 and q odd the filter passes everything.
inline std::vector<Candidate> theorem_candidates(const TargetFraction& target) {
    std::vector<Candidate> out;
    for (const Triplet& tr : divisor_triplets(target.q))
        if ((tr.r + tr.s) % target.p == 0) out.push_back(detail::make_candidate(target, tr));
    return out;
}

/// The trivial identity p/q = p/(q+1) + p/(q(q+1)), i.e. the candidate of
/// triplet (1, 1, q). Requires (q+1) divisible by p.
inline Candidate prime_formula(const TargetFraction& target) {
    if ((target.q + 1) % target.p != 0)
        throw std::invalid_argument("prime_formula: q+1 not divisible by p for " + target.str());
    return detail::make_candidate(target, {1, 1, target.q});
}

/// All splits D = l * m with l <= m.
inline std::vector<FactorSplit> factor_splits(Int d) {
    std::vector<FactorSplit> out;
    for (Int l = 1; l * l <= d; ++l)
        if (d % l == 0) out.push_back({l, d / l});
    return out;
}

namespace detail {

inline void require_odd_target(Int d, const char* who) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": D must be odd and >= 3");
}

inline std::vector<Decomposition> normalized(Int d, std::set<std::pair<Int, Int>>&& pairs) {
    std::vector<Decomposition> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.emplace_back(TargetFraction(2, d), std::vector<Int>{a, b});
    return out;
}

} // namespace detail

/// Two-term decompositions of 2/D through the key equation r1*s2 = D:
/// for each split D = l*m and each pair (r1, s2) with r1*s2 = D, excluding
/// the degenerate choice r1 = m, s2 = l, the parts are l(m+r1)/2 and
/// m(l+s2)/2. Output sorted and deduplicated.
inline std::vector<Decomposition> keyeq_candidates(Int d) {
    detail::require_odd_target(d, "keyeq_candidates");
    std::set<std::pair<Int, Int>> pairs;
    for (const FactorSplit& split : factor_splits(d)) {
        for (Int r1 = 1; r1 <= d; ++r1) {
            if (d % r1 != 0) continue;
            const Int s2 = d / r1;
            if (r1 == split.m && s2 == split.l) continue;
            const Int d1 = checked_mul(split.l, split.m + r1) / 2;
            const Int d2 = checked_mul(split.m, split.l + s2) / 2;
            pairs.emplace(std::min(d1, d2), std::max(d1, d2));
        }
    }
    return detail::normalized(d, std::move(pairs));
}

/// All pairs k1 < k2 with k1*k2 = D^2 and k1 != D.
inline std::vector<SquarePair> square_pairs(Int d) {
    detail::require_odd_target(d, "square_pairs");
    const Int dd = checked_mul(d, d);
    std::vector<SquarePair> out;
    for (Int k1 = 1; k1 < d; ++k1)
        if (dd % k1 == 0) out.push_back({k1, dd / k1});
    return out;
}

/// Two-term decompositions of 2/D through squares: for each k1*k2 = D^2
/// the parts are (D+k1)/2 and (D+k2)/2.
inline std::vector<Decomposition> square_candidates(Int d) {
    std::set<std::pair<Int, Int>> pairs;
    for (const SquarePair& sp : square_pairs(d))
        pairs.emplace((d + sp.k1) / 2, (d + sp.k2) / 2);
    return detail::normalized(d, std::move(pairs));
}

/// Independent oracle: scan every D1 in (D/2, D] and keep it whenever
/// D2 = D*D1/(2*D1 - D) is integral; D1 = D is excluded because it forces
/// D2 = D (equal parts).
inline std::vector<Decomposition> brute_force(Int d) {
    detail::require_odd_target(d, "brute_force");
    std::set<std::pair<Int, Int>> pairs;
    for (Int d1 = d / 2 + 1; d1 <= d; ++d1) {
        const Int den = 2 * d1 - d;
        const Int num = checked_mul(d, d1);
        if (num % den != 0) continue;
        const Int d2 = num / den;
        if (d1 < d2) pairs.emplace(d1, d2);
    }
    return detail::normalized(d, std::move(pairs));
}

/// (k1+k2)^2 = (k1-k2)^2 + (2D)^2, exactly.
inline bool pythagorean_check(const SquarePair& pair, Int d) {
    const Int sum = checked_add(pair.k1, pair.k2);
    const Int diff = pair.k2 - pair.k1;
    const Int leg = checked_mul(2, d);
    return checked_mul(sum, sum) == checked_add(checked_mul(diff, diff), checked_mul(leg, leg));
}

/// Candidates for one (n1, n2) pair: the generating triplets sorted by
/// ascending delta, plus the pair's minimal delta (its rank).
struct PairGroup {
    Int n1;
    Int n2;
    Int rank_delta;
    std::vector<Triplet> triplets;
};

/// Groups candidates of a single target by denominator pair. The same pair
/// typically arises from several triplets at different delta values; its
/// rank is the smallest of them. Groups are ordered by (rank, n1).
inline std::vector<PairGroup> dedup(const std::vector<Candidate>& candidates) {
    if (candidates.empty()) return {};
    for (const Candidate& c : candidates)
        if (!(c.target == candidates.front().target))
            throw std::invalid_argument("dedup: candidates must share one target");

    std::map<std::pair<Int, Int>, std::vector<const Candidate*>> groups;
    for (const Candidate& c : candidates) groups[c.pair()].push_back(&c);

    std::vector<PairGroup> out;
    for (auto& [pair, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [](const Candidate* a, const Candidate* b) { return a->delta < b->delta; });
        PairGroup g{pair.first, pair.second, members.front()->delta, {}};
        for (const Candidate* c : members) g.triplets.push_back(c->triplet);
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const PairGroup& a, const PairGroup& b) {
        return std::tie(a.rank_delta, a.n1) < std::tie(b.rank_delta, b.n1);
    });
    return out;
}

} // namespace rhind
