#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhind/verify.hpp"

namespace rhind {

enum class Format { text, markdown, json, csv };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "markdown") return Format::markdown;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> row_flags(const ClassifiedRow& row, bool eg) {
    std::vector<std::string> flags;
    if (eg) flags.push_back("Eg");
    if (row.flags.barred) flags.push_back("barred");
    if (row.flags.slashed) flags.push_back("slashed");
    if (row.flags.trivial) flags.push_back("trivial");
    return flags;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

inline Json row_json(const ClassifiedRow& row, bool eg) {
    Json j;
    j["delta"] = row.candidate.delta;
    j["parts"] = {row.candidate.n1, row.candidate.n2};
    j["multiplicity"] = {{"num", row.candidate.multiplicity.num()},
                         {"den", row.candidate.multiplicity.den()}};
    j["flags"] = row_flags(row, eg);
    j["triplet"] = {{"k", row.candidate.triplet.k},
                    {"r", row.candidate.triplet.r},
                    {"s", row.candidate.triplet.s}};
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace detail

/// Render the classified rows of one target. `eg` marks the row equal to
/// the table's selection, when one is known.
inline std::string render_rows(const TargetFraction& target, const std::vector<ClassifiedRow>& rows,
                               Format format,
                               std::optional<std::pair<Int, Int>> eg = std::nullopt) {
    auto is_eg = [&](const ClassifiedRow& r) {
        return eg && r.candidate.n1 == eg->first && r.candidate.n2 == eg->second;
    };
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            Json doc;
            doc["target"] = target.str();
            doc["rows"] = Json::array();
            for (const ClassifiedRow& row : rows) doc["rows"].push_back(detail::row_json(row, is_eg(row)));
            return detail::dump(doc);
        }
        case Format::csv:
            out << "delta,n1,n2,multiplicity,flags,k,r,s\n";
            for (const ClassifiedRow& row : rows)
                out << row.candidate.delta << ',' << row.candidate.n1 << ',' << row.candidate.n2
                    << ',' << row.candidate.multiplicity.str() << ','
                    << detail::join(detail::row_flags(row, is_eg(row)), ";") << ','
                    << row.candidate.triplet.k << ',' << row.candidate.triplet.r << ','
                    << row.candidate.triplet.s << '\n';
            return out.str();
        case Format::markdown:
            out << "| delta | decomposition | multiplicity | flags |\n";
            out << "|---|---|---|---|\n";
            for (const ClassifiedRow& row : rows)
                out << "| " << row.candidate.delta << " | " << target.str() << " = 1/"
                    << row.candidate.n1 << " + 1/" << row.candidate.n2 << " | "
                    << row.candidate.multiplicity.str() << " | "
                    << detail::join(detail::row_flags(row, is_eg(row)), " ") << " |\n";
            return out.str();
        case Format::text:
            for (const ClassifiedRow& row : rows) {
                out << "delta=" << row.candidate.delta << "  " << target.str() << " = 1/"
                    << row.candidate.n1 << " + 1/" << row.candidate.n2 << "  m="
                    << row.candidate.multiplicity.str();
                const auto flags = detail::row_flags(row, is_eg(row));
                if (!flags.empty()) out << "  [" << detail::join(flags, " ") << "]";
                out << '\n';
            }
            return out.str();
    }
    throw std::invalid_argument("unknown format");
}

inline Json trace_json(const SelectionTrace& trace) {
    Json j;
    j["D"] = trace.d;
    j["group"] = group_name(trace.group);
    j["chosen"] = trace.chosen.parts();
    j["rank_delta"] = trace.chosen_rank;
    if (trace.mother_link)
        j["mother"] = {{"row", trace.mother_link->first.d}, {"divisor", trace.mother_link->second}};
    j["rejected"] = Json::array();
    for (const Rejection& r : trace.rejected)
        j["rejected"].push_back({{"parts", {r.row.candidate.n1, r.row.candidate.n2}},
                                 {"delta", r.row.candidate.delta},
                                 {"reason", reason_name(r.reason)}});
    return j;
}

inline std::string render_trace(const SelectionTrace& trace, Format format) {
    if (format == Format::json) return detail::dump(trace_json(trace));
    std::ostringstream out;
    out << "2/" << trace.d << "  group " << group_name(trace.group) << "\n";
    out << "considered:\n";
    out << render_rows(TargetFraction(2, trace.d), trace.considered, Format::text,
                       trace.chosen.size() == 2
                           ? std::optional(std::pair{trace.chosen.parts()[0], trace.chosen.parts()[1]})
                           : std::nullopt);
    out << "rejected:\n";
    for (const Rejection& r : trace.rejected)
        out << "  1/" << r.row.candidate.n1 << " + 1/" << r.row.candidate.n2 << "  ("
            << reason_name(r.reason) << ")\n";
    out << "chosen: " << trace.chosen.str();
    if (trace.chosen_rank >= 0) out << "  (rank delta " << trace.chosen_rank << ")";
    if (trace.mother_link)
        out << "  = [2/" << trace.mother_link->first.d << " row] / " << trace.mother_link->second;
    out << '\n';
    return out.str();
}

/// The reconstructed table, one line per composite.
inline std::string render_table(const std::vector<SelectionTrace>& traces, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            Json doc = Json::array();
            for (const SelectionTrace& t : traces) doc.push_back(trace_json(t));
            return detail::dump(doc);
        }
        case Format::csv:
            out << "D,parts,group,rank_delta,mother_row,divisor\n";
            for (const SelectionTrace& t : traces) {
                out << t.d << ',';
                std::vector<std::string> ps;
                for (Int p : t.chosen.parts()) ps.push_back(std::to_string(p));
                out << detail::join(ps, ";") << ',' << group_name(t.group) << ',' << t.chosen_rank
                    << ',';
                if (t.mother_link)
                    out << t.mother_link->first.d << ',' << t.mother_link->second;
                else
                    out << ',';
                out << '\n';
            }
            return out.str();
        case Format::markdown:
            out << "| D | decomposition | group | mother row |\n|---|---|---|---|\n";
            for (const SelectionTrace& t : traces) {
                out << "| " << t.d << " | " << t.chosen.str() << " Eg | " << group_name(t.group)
                    << " | ";
                if (t.mother_link)
                    out << "2/" << t.mother_link->first.d << " / " << t.mother_link->second;
                else
                    out << "-";
                out << " |\n";
            }
            return out.str();
        case Format::text:
            for (const SelectionTrace& t : traces) {
                out << t.chosen.str() << "  [group " << group_name(t.group);
                if (t.mother_link)
                    out << ", 2/" << t.mother_link->first.d << " row / " << t.mother_link->second;
                out << "]\n";
            }
            return out.str();
    }
    throw std::invalid_argument("unknown format");
}

inline std::string render_diffs(const std::vector<DiffEntry>& diffs, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::json: {
            Json doc = Json::array();
            for (const DiffEntry& e : diffs)
                doc.push_back({{"kind", diff_kind_name(e.kind)},
                               {"D", e.d},
                               {"delta", e.delta},
                               {"details", e.details}});
            return detail::dump(doc);
        }
        case Format::csv:
            out << "kind,D,delta,details\n";
            for (const DiffEntry& e : diffs)
                out << diff_kind_name(e.kind) << ',' << e.d << ',' << e.delta << ",\"" << e.details
                    << "\"\n";
            return out.str();
        case Format::markdown:
            out << "| kind | D | delta | details |\n|---|---|---|---|\n";
            for (const DiffEntry& e : diffs)
                out << "| " << diff_kind_name(e.kind) << " | " << e.d << " | " << e.delta << " | "
                    << e.details << " |\n";
            return out.str();
        case Format::text:
            for (const DiffEntry& e : diffs)
                out << diff_kind_name(e.kind) << "  2/" << e.d << "  delta=" << e.delta << "  "
                    << e.details << '\n';
            return out.str();
    }
    throw std::invalid_argument("unknown format");
}

inline std::string render_stats(const MotherUsage& usage, Format format) {
    const auto& rows = mother_table();
    if (format == Format::json) {
        Json doc;
        doc["counts"] = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            doc["counts"].push_back({{"row", rows[i].d}, {"used", usage.counts[i]}});
        doc["unscaled"] = usage.unscaled;
        doc["three_term"] = usage.three_term;
        return detail::dump(doc);
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << rows[i].decomposition.str() << "  used " << usage.counts[i] << " times\n";
    out << "no mother scaling: ";
    std::vector<std::string> ds;
    for (Int d : usage.unscaled) ds.push_back("2/" + std::to_string(d));
    out << detail::join(ds, ", ") << '\n';
    ds.clear();
    for (Int d : usage.three_term) ds.push_back("2/" + std::to_string(d));
    out << "three terms: " << detail::join(ds, ", ") << '\n';
    return out.str();
}

inline std::string render_order(const std::vector<std::pair<Group, Int>>& order, Format format) {
    if (format == Format::json) {
        Json doc = Json::array();
        for (const auto& [g, d] : order) doc.push_back({{"group", group_name(g)}, {"D", d}});
        return detail::dump(doc);
    }
    std::ostringstream out;
    Group cur = order.empty() ? Group::A : order.front().first;
    bool first = true;
    for (const auto& [g, d] : order) {
        if (first || g != cur) {
            if (!first) out << '\n';
            out << "group " << group_name(g) << ":";
            cur = g;
            first = false;
        }
        out << " 2/" << d;
    }
    out << '\n';
    return out.str();
}

} // namespace rhind
