#pragma once

#include <string>
#include <vector>

#include "rhind/ground_truth.hpp"

namespace rhind {

enum class DiffKind {
    missing_in_paper,
    missing_in_computed,
    value_mismatch,
    delta_label_mismatch,
    flag_mismatch,
};

inline const char* diff_kind_name(DiffKind k) {
    switch (k) {
        case DiffKind::missing_in_paper: return "missing-in-paper";
        case DiffKind::missing_in_computed: return "missing-in-computed";
        case DiffKind::value_mismatch: return "value-mismatch";
        case DiffKind::delta_label_mismatch: return "delta-label-mismatch";
        case DiffKind::flag_mismatch: return "flag-mismatch";
    }
    return "?";
}

/// One structured discrepancy between the computed tables and the printed
/// ones. `delta` is the printed delta where one exists, otherwise the
/// computed one.
struct DiffEntry {
    DiffKind kind;
    Int d;
    Int delta;
    std::string details;

    friend bool operator==(const DiffEntry& a, const DiffEntry& b) {
        return a.kind == b.kind && a.d == b.d && a.delta == b.delta;
    }
};

namespace detail {

inline std::string pair_str(Int n1, Int n2) {
    return "1/" + std::to_string(n1) + "+1/" + std::to_string(n2);
}

struct ComputedRow {
    const ClassifiedRow* row;
    bool used = false;
};

struct PaperRow {
    const Table3Row* row;
    bool used = false;
};

inline bool same_pair(const ClassifiedRow& c, const Table3Row& p) {
    return c.candidate.n1 == p.parts[0] && c.candidate.n2 == p.parts[1];
}

} // namespace detail

/// Diff the computed tables against the printed ones. Part (a): the
/// selector's 25 choices against the Ahmes rows. Part (b): the per-triplet
/// classified rows against the printed alternatives table, row by row.
/// Matching order per D: identical (pair, delta) first, then same pair at
/// another delta (a delta-label anomaly, absorbing any computed row left at
/// the printed delta), then same delta with another pair (a value anomaly);
/// leftovers are missing on one side. Trivial rows the classifier does not
/// bar are skipped: the printed table only shows trivial rows as barred.
inline std::vector<DiffEntry> verify_all(const GroundTruthStore& store, const RuleConfig& cfg = {}) {
    std::vector<DiffEntry> diffs;

    // (a) selections
    for (Int d : odd_composites_9_99()) {
        const SelectionTrace trace = select(d, cfg);
        const Decomposition& expected = store.ahmes.at(d);
        if (!(trace.chosen == expected))
            diffs.push_back({DiffKind::value_mismatch, d, -1,
                             "selection: computed " + trace.chosen.str() + " vs printed " +
                                 expected.str()});
    }

    // (b) alternatives table
    for (Int d : odd_composites_9_99()) {
        std::vector<detail::ComputedRow> comp;
        const std::vector<ClassifiedRow> rows = classified_rows(d, cfg);
        for (const ClassifiedRow& row : rows)
            if (!row.flags.trivial || row.flags.barred) comp.push_back({&row});
        std::vector<detail::PaperRow> paper;
        for (const Table3Row& row : store.table3)
            if (row.d == d) paper.push_back({&row});

        // pass 1: exact (pair, delta) matches; check multiplicity and flags
        for (auto& p : paper) {
            for (auto& c : comp) {
                if (c.used || !detail::same_pair(*c.row, *p.row) ||
                    c.row->candidate.delta != p.row->delta)
                    continue;
                p.used = c.used = true;
                if (c.row->candidate.multiplicity != p.row->multiplicity)
                    diffs.push_back({DiffKind::value_mismatch, d, p.row->delta,
                                     "multiplicity of " + detail::pair_str(c.row->candidate.n1,
                                                                           c.row->candidate.n2) +
                                         ": computed " + c.row->candidate.multiplicity.str() +
                                         " vs printed " + p.row->multiplicity.str()});
                if (c.row->flags.barred != p.row->barred || c.row->flags.slashed != p.row->slashed)
                    diffs.push_back({DiffKind::flag_mismatch, d, p.row->delta,
                                     "flags of " + detail::pair_str(c.row->candidate.n1,
                                                                    c.row->candidate.n2)});
                break;
            }
        }
        // pass 2: same pair printed under another delta
        for (auto& p : paper) {
            if (p.used) continue;
            for (auto& c : comp) {
                if (c.used || !detail::same_pair(*c.row, *p.row)) continue;
                p.used = c.used = true;
                std::string details = detail::pair_str(p.row->parts[0], p.row->parts[1]) +
                                      " printed at delta=" + std::to_string(p.row->delta) +
                                      ", computed at delta=" +
                                      std::to_string(c.row->candidate.delta);
                for (auto& c2 : comp) {
                    if (c2.used || c2.row->candidate.delta != p.row->delta) continue;
                    c2.used = true;
                    details += "; computed row at the printed delta is " +
                               detail::pair_str(c2.row->candidate.n1, c2.row->candidate.n2);
                }
                diffs.push_back({DiffKind::delta_label_mismatch, d, p.row->delta, details});
                break;
            }
        }
        // pass 3: same delta, different pair
        for (auto& p : paper) {
            if (p.used) continue;
            for (auto& c : comp) {
                if (c.used || c.row->candidate.delta != p.row->delta) continue;
                p.used = c.used = true;
                diffs.push_back({DiffKind::value_mismatch, d, p.row->delta,
                                 "printed " + detail::pair_str(p.row->parts[0], p.row->parts[1]) +
                                     " vs computed " +
                                     detail::pair_str(c.row->candidate.n1, c.row->candidate.n2)});
                break;
            }
        }
        for (auto& p : paper)
            if (!p.used)
                diffs.push_back({DiffKind::missing_in_computed, d, p.row->delta,
                                 detail::pair_str(p.row->parts[0], p.row->parts[1])});
        for (auto& c : comp)
            if (!c.used)
                diffs.push_back({DiffKind::missing_in_paper, d, c.row->candidate.delta,
                                 detail::pair_str(c.row->candidate.n1, c.row->candidate.n2) +
                                     " (multiplicity " + c.row->candidate.multiplicity.str() +
                                     ")"});
    }

    std::sort(diffs.begin(), diffs.end(), [](const DiffEntry& a, const DiffEntry& b) {
        return std::tie(a.d, a.delta, a.details) < std::tie(b.d, b.delta, b.details);
    });
    return diffs;
}

/// The discrepancies the printed tables are known to contain, confirmed
/// against the brute-force oracle. `verify` treats exactly this set as a
/// clean run.
inline const std::vector<DiffEntry>& expected_anomalies() {
    static const std::vector<DiffEntry> expected{
        {DiffKind::value_mismatch, 27, 6, "printed 1/15+1/135 vs computed 1/18+1/54"},
        {DiffKind::missing_in_paper, 45, 4, "1/35+1/63 (multiplicity 7/5)"},
        {DiffKind::missing_in_paper, 69, 20, "1/39+1/299 (multiplicity 13/3)"},
        {DiffKind::missing_in_paper, 75, 4, "1/45+1/225 (multiplicity 3)"},
        {DiffKind::delta_label_mismatch, 95, 94,
         "1/50+1/950 printed at delta=94, computed at delta=18; computed row at the printed "
         "delta is 1/48+1/4560"},
    };
    return expected;
}

/// True iff the diff is exactly the known anomaly set.
inline bool diffs_are_expected(const std::vector<DiffEntry>& diffs) {
    return diffs == expected_anomalies();
}

} // namespace rhind
