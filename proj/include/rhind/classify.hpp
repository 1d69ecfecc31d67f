#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "rhind/enumerate.hpp"

namespace rhind {

/// Tunable rule constants. The defaults are the values the table was built
/// with; the CLI can override them for sensitivity exploration.
struct RuleConfig {
    Int topflag = 6;    // multiplicity cap on the last denominator
    Int delta_cap = 10; // cap on delta = s - r
    std::set<Int> precept_set{77, 95};    // "no odd denominators" applied here
    std::set<Int> mother_necessity{55};   // must be a scaling of mother row 2/11
};

struct CandidateFlags {
    bool barred = false;  // multiplicity above the top-flag
    bool slashed = false; // delta above the cap
    bool trivial = false;
    bool all_even = false;

    bool countable() const { return !barred && !slashed && !trivial; }
};

inline CandidateFlags flag_candidate(const Candidate& c, Int topflag = 6, Int delta_cap = 10) {
    CandidateFlags f;
    f.barred = c.multiplicity > Rational(topflag);
    f.slashed = c.delta > delta_cap;
    f.trivial = c.trivial;
    f.all_even = c.n1 % 2 == 0 && c.n2 % 2 == 0;
    return f;
}

/// One classified per-triplet row of the alternatives table.
struct ClassifiedRow {
    Candidate candidate;
    CandidateFlags flags;

    bool countable() const { return flags.countable(); }
};

struct ClassifiedTable {
    Int d = 0; // 0 for multi-D tables
    std::vector<ClassifiedRow> rows;
};

inline bool is_odd_composite(Int d) {
    if (d < 9 || d % 2 == 0) return false;
    for (Int i = 3; i * i <= d; ++i)
        if (d % i == 0) return true;
    return false;
}

namespace detail {

inline void sort_rows(std::vector<ClassifiedRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ClassifiedRow& a, const ClassifiedRow& b) {
        return std::tie(a.candidate.delta, a.candidate.target.q, a.candidate.n1, a.candidate.triplet.k) <
               std::tie(b.candidate.delta, b.candidate.target.q, b.candidate.n1, b.candidate.triplet.k);
    });
}

} // namespace detail

/// All per-triplet rows for 2/D, trivial rows included, sorted by
/// (delta, n1). The selector and the table diff both need the full set.
inline std::vector<ClassifiedRow> classified_rows(Int d, const RuleConfig& cfg = {}) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("classified_rows: D must be odd, >= 3");
    std::vector<ClassifiedRow> rows;
    for (const Candidate& c : theorem_candidates(TargetFraction(2, d)))
        rows.push_back({c, flag_candidate(c, cfg.topflag, cfg.delta_cap)});
    detail::sort_rows(rows);
    return rows;
}

/// The alternatives table for one composite D: per-triplet rows with the
/// trivial ones removed, each carrying its flags. Barred and slashed rows
/// are kept (they are printed in the source tables) but do not count.
inline ClassifiedTable alternatives(Int d, const RuleConfig& cfg = {}) {
    if (!is_odd_composite(d) || d > 99)
        throw std::invalid_argument("alternatives: D must be an odd composite in 9..99");
    ClassifiedTable table{d, {}};
    for (ClassifiedRow& row : classified_rows(d, cfg))
        if (!row.flags.trivial) table.rows.push_back(std::move(row));
    return table;
}

/// Total countable rows (non-trivial, not barred, not slashed, counted per
/// triplet) over a range of composites.
inline Int count_alternatives(const std::vector<Int>& d_range, const RuleConfig& cfg = {}) {
    Int total = 0;
    for (Int d : d_range)
        for (const ClassifiedRow& row : alternatives(d, cfg).rows)
            if (row.countable()) ++total;
    return total;
}

inline std::vector<Int> odd_composites_9_99() {
    std::vector<Int> out;
    for (Int d = 9; d <= 99; d += 2)
        if (is_odd_composite(d)) out.push_back(d);
    return out;
}

} // namespace rhind
