#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rhind/classify.hpp"

namespace rhind {

/// One of the four generator decompositions 2/3, 2/5, 2/7, 2/11.
struct MotherRow {
    Int d;
    Decomposition decomposition;
    Int m2; // multiplicity of the last denominator
};

inline const std::array<MotherRow, 4>& mother_table() {
    static const std::array<MotherRow, 4> rows{
        MotherRow{3, {TargetFraction(2, 3), {2, 6}}, 2},
        MotherRow{5, {TargetFraction(2, 5), {3, 15}}, 3},
        MotherRow{7, {TargetFraction(2, 7), {4, 28}}, 4},
        MotherRow{11, {TargetFraction(2, 11), {6, 66}}, 6},
    };
    return rows;
}

/// 2/19 in three terms, the template the 2/95 row is divided from.
inline const Decomposition& two_nineteen_three_term() {
    static const Decomposition d{TargetFraction(2, 19), {12, 76, 114}};
    static const bool checked = verify_identity(d);
    if (!checked) throw std::logic_error("embedded 2/19 row fails its identity");
    return d;
}

/// The four-term 2/95 row considered and rejected by the scribes. Embedded
/// for verification only; never produced by the selector.
inline const Decomposition& rejected_four_term_95() {
    static const Decomposition d{TargetFraction(2, 95), {90, 190, 285, 855}};
    static const bool checked = verify_identity(d);
    if (!checked) throw std::logic_error("embedded 4-term 2/95 row fails its identity");
    return d;
}

/// Signed and absolute closeness of a fractional multiplicity to 2.
struct DeltaMu {
    Rational value;    // 2 - mu, signed
    Rational distance; // |2 - mu|

    explicit DeltaMu(const Rational& mu)
        : value(Rational(2) - mu), distance((Rational(2) - mu).abs()) {}
};

/// If d is row.decomposition scaled by f for some mother row (with
/// D = row.d * f), return that row and f.
inline std::optional<std::pair<MotherRow, Int>> mother_scaling_of(const Decomposition& d) {
    const Int target_q = d.target().q;
    for (const MotherRow& row : mother_table()) {
        if (target_q % row.d != 0) continue;
        const Int f = target_q / row.d;
        if (scale_decomposition(row.decomposition, f) == d) return std::make_pair(row, f);
    }
    return std::nullopt;
}

enum class Group { A, B, C, D55, E95 };

inline const char* group_name(Group g) {
    switch (g) {
        case Group::A: return "A";
        case Group::B: return "B";
        case Group::C: return "C";
        case Group::D55: return "D55";
        case Group::E95: return "E95";
    }
    return "?";
}

enum class Reason { barred, slashed, trivial, conflict_lost, odd_parts, mother_necessity_override };

inline const char* reason_name(Reason r) {
    switch (r) {
        case Reason::barred: return "barred";
        case Reason::slashed: return "slashed";
        case Reason::trivial: return "trivial";
        case Reason::conflict_lost: return "conflict-lost";
        case Reason::odd_parts: return "odd-parts";
        case Reason::mother_necessity_override: return "mother-necessity-override";
    }
    return "?";
}

struct Rejection {
    ClassifiedRow row;
    Reason reason;
};

/// The auditable record of one selection: everything that was on the table,
/// everything removed and why, and the decomposition that won.
struct SelectionTrace {
    Int d;
    Group group;
    std::vector<ClassifiedRow> considered;
    std::vector<Rejection> rejected;
    Decomposition chosen;
    Int chosen_rank; // minimal delta of the chosen pair; -1 for the 3-term case
    std::optional<std::pair<MotherRow, Int>> mother_link;
};

/// One deduplicated pair inside a conflict tier.
struct TierRow {
    Int n1;
    Int n2;
    Int rank_delta;
    Rational multiplicity;
};

struct ConflictResult {
    TierRow winner;
    std::vector<TierRow> losers;
};

/// Conflict rule for pairs tied at the minimal delta: an integral
/// multiplicity of 2 wins outright, otherwise the multiplicity closest to 2
/// (exact |2 - mu| compare). Equal distances fall back to the smaller n1 so
/// the operation stays total and order-independent.
inline ConflictResult resolve_conflict(const std::vector<TierRow>& tier) {
    if (tier.empty()) throw std::invalid_argument("resolve_conflict: empty tier");
    auto better = [](const TierRow& a, const TierRow& b) {
        const bool a2 = a.multiplicity == Rational(2);
        const bool b2 = b.multiplicity == Rational(2);
        if (a2 != b2) return a2;
        const Rational da = DeltaMu(a.multiplicity).distance;
        const Rational db = DeltaMu(b.multiplicity).distance;
        if (da != db) return da < db;
        return a.n1 < b.n1;
    };
    ConflictResult res{tier.front(), {}};
    for (const TierRow& row : tier)
        if (better(row, res.winner)) res.winner = row;
    for (const TierRow& row : tier)
        if (row.n1 != res.winner.n1 || row.n2 != res.winner.n2) res.losers.push_back(row);
    return res;
}

/// Remove every row whose decomposition has an odd part; order preserved.
inline std::vector<ClassifiedRow> apply_precept(const std::vector<ClassifiedRow>& rows) {
    std::vector<ClassifiedRow> out;
    for (const ClassifiedRow& row : rows)
        if (row.flags.all_even) out.push_back(row);
    return out;
}

namespace detail {

inline std::vector<TierRow> pair_tiers(const std::vector<ClassifiedRow>& countable,
                                       std::vector<TierRow>* all_pairs = nullptr) {
    std::vector<Candidate> cands;
    for (const ClassifiedRow& row : countable) cands.push_back(row.candidate);
    std::vector<TierRow> pairs;
    for (const PairGroup& g : dedup(cands)) {
        Rational mult(0);
        for (const ClassifiedRow& row : countable)
            if (row.candidate.n1 == g.n1 && row.candidate.n2 == g.n2) mult = row.candidate.multiplicity;
        pairs.push_back({g.n1, g.n2, g.rank_delta, mult});
    }
    if (all_pairs) *all_pairs = pairs;
    std::vector<TierRow> tier;
    for (const TierRow& p : pairs)
        if (p.rank_delta == pairs.front().rank_delta) tier.push_back(p);
    return tier;
}

} // namespace detail

/// Replay the selection cascade for one composite D and return the full
/// trace. Steps: classify and discard trivial/barred/slashed rows; apply
/// the "no odd denominators" precept where configured; honor the 2/55
/// mother-necessity; otherwise take the minimal-delta tier and resolve any
/// conflict; fall back to the scaled 2/19 three-term row when nothing
/// two-term survives.
inline SelectionTrace select(Int d, const RuleConfig& cfg = {}) {
    if (!is_odd_composite(d) || d > 99)
        throw std::invalid_argument("select: D must be an odd composite in 9..99");

    const std::vector<ClassifiedRow> rows = classified_rows(d, cfg);
    std::vector<Rejection> rejected;
    std::vector<ClassifiedRow> countable;
    for (const ClassifiedRow& row : rows) {
        if (row.flags.trivial)
            rejected.push_back({row, Reason::trivial});
        else if (row.flags.barred)
            rejected.push_back({row, Reason::barred});
        else if (row.flags.slashed)
            rejected.push_back({row, Reason::slashed});
        else
            countable.push_back(row);
    }

    bool precept_applied = false;
    if (cfg.precept_set.count(d)) {
        precept_applied = true;
        std::vector<ClassifiedRow> kept = apply_precept(countable);
        for (const ClassifiedRow& row : countable)
            if (!row.flags.all_even) rejected.push_back({row, Reason::odd_parts});
        countable = std::move(kept);
        if (countable.empty()) {
            // three-term fallback
            if (d % 19 != 0)
                throw std::runtime_error("select: no two-term decomposition survives for D=" +
                                         std::to_string(d));
            Decomposition chosen = scale_decomposition(two_nineteen_three_term(), d / 19);
            return {d, Group::E95, rows, std::move(rejected), std::move(chosen), -1, std::nullopt};
        }
    }

    if (cfg.mother_necessity.count(d)) {
        const MotherRow& row11 = mother_table().back();
        if (d % row11.d != 0)
            throw std::runtime_error("select: mother-necessity needs D divisible by 11, got " +
                                     std::to_string(d));
        const Decomposition required = scale_decomposition(row11.decomposition, d / row11.d);
        std::optional<ClassifiedRow> match;
        Int rank = -1;
        for (const ClassifiedRow& row : countable) {
            if (row.candidate.decomposition() == required) {
                if (!match) match = row;
                rank = rank < 0 ? row.candidate.delta : std::min(rank, row.candidate.delta);
            } else {
                rejected.push_back({row, Reason::mother_necessity_override});
            }
        }
        if (!match)
            throw std::runtime_error("select: no countable scaling of 2/11 for D=" + std::to_string(d));
        return {d,    Group::D55, rows, std::move(rejected), required,
                rank, std::make_pair(row11, d / row11.d)};
    }

    std::vector<TierRow> tier = detail::pair_tiers(countable);
    if (tier.empty())
        throw std::runtime_error("select: no countable alternative for D=" + std::to_string(d) +
                                 " under the current rule configuration");
    ConflictResult res = resolve_conflict(tier);
    for (const TierRow& loser : res.losers)
        for (const ClassifiedRow& row : countable)
            if (row.candidate.n1 == loser.n1 && row.candidate.n2 == loser.n2)
                rejected.push_back({row, Reason::conflict_lost});

    Decomposition chosen{TargetFraction(2, d), {res.winner.n1, res.winner.n2}};
    auto mother_link = mother_scaling_of(chosen);
    const Group group =
        precept_applied ? Group::C : (res.losers.empty() ? Group::A : Group::B);
    return {d,
            group,
            rows,
            std::move(rejected),
            std::move(chosen),
            res.winner.rank_delta,
            std::move(mother_link)};
}

/// All 25 traces, in ascending D.
inline std::vector<SelectionTrace> select_all(const RuleConfig& cfg = {}) {
    std::vector<SelectionTrace> traces;
    for (Int d : odd_composites_9_99()) traces.push_back(select(d, cfg));
    return traces;
}

/// The order the table was built in: group A, then B, then the precept
/// cases, then 2/55, then 2/95. Within A and B, ascending (rank delta, D).
inline std::vector<std::pair<Group, Int>> selection_order(const RuleConfig& cfg = {}) {
    std::vector<SelectionTrace> traces = select_all(cfg);
    std::vector<std::pair<Group, Int>> out;
    for (Group g : {Group::A, Group::B, Group::C, Group::D55, Group::E95}) {
        std::vector<const SelectionTrace*> members;
        for (const SelectionTrace& t : traces)
            if (t.group == g) members.push_back(&t);
        std::sort(members.begin(), members.end(),
                  [](const SelectionTrace* a, const SelectionTrace* b) {
                      return std::tie(a->chosen_rank, a->d) < std::tie(b->chosen_rank, b->d);
                  });
        for (const SelectionTrace* t : members) out.emplace_back(g, t->d);
    }
    return out;
}

/// How often each mother row was used, which two-term selections are no
/// scaling at all, and which D went to three terms.
struct MotherUsage {
    std::array<Int, 4> counts{0, 0, 0, 0}; // rows 2/3, 2/5, 2/7, 2/11
    std::set<Int> unscaled;
    std::set<Int> three_term;
};

inline MotherUsage mother_usage_stats(const std::vector<SelectionTrace>& traces) {
    MotherUsage usage;
    for (const SelectionTrace& t : traces) {
        if (t.chosen.size() != 2) {
            usage.three_term.insert(t.d);
            continue;
        }
        if (!t.mother_link) {
            usage.unscaled.insert(t.d);
            continue;
        }
        const auto& table = mother_table();
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table[i].d == t.mother_link->first.d) ++usage.counts[i];
    }
    return usage;
}

} // namespace rhind
