#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhind/core.hpp"
#include "rhind/ground_truth_data.hpp"
#include "rhind/select.hpp"

namespace rhind {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("ground truth line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

/// One printed row of the full alternatives table.
struct Table3Row {
    Int d = 0;
    Int delta = 0;
    std::vector<Int> parts;
    Rational multiplicity;
    bool eg = false;
    bool barred = false;
    bool slashed = false;
};

/// The transcribed printed tables: the scribes' 25 selections plus every
/// row of the alternatives table. All identities are verified at load.
struct GroundTruthStore {
    std::map<Int, Decomposition> ahmes;
    std::vector<Table3Row> table3;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Int parse_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a positive integer, got '" + s + "'");
    }
}

inline std::vector<Int> parse_parts(const std::string& s, int line) {
    std::vector<Int> parts;
    for (const std::string& f : split(s, ',')) parts.push_back(parse_int(f, line));
    return parts;
}

inline Rational parse_rational(const std::string& s, int line) {
    const std::vector<std::string> f = split(s, '/');
    if (f.size() == 1) return Rational(parse_int(f[0], line));
    if (f.size() == 2) return Rational(parse_int(f[0], line), parse_int(f[1], line));
    throw ParseError(line, "malformed rational '" + s + "'");
}

} // namespace detail

inline GroundTruthStore load_ground_truth(std::istream& in) {
    GroundTruthStore store;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        // strip trailing CR and surrounding spaces
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ')) raw.pop_back();
        if (raw.empty() || raw[0] == '#') continue;

        const std::vector<std::string> f = detail::split(raw, '|');
        if (f[0] == "A") {
            if (f.size() != 3) throw ParseError(lineno, "A record needs 3 fields");
            const Int d = detail::parse_int(f[1], lineno);
            if (store.ahmes.count(d)) throw ParseError(lineno, "duplicate Ahmes row for D=" + f[1]);
            Decomposition dec{TargetFraction(2, d), detail::parse_parts(f[2], lineno)};
            if (!verify_identity(dec))
                throw ParseError(lineno, "identity fails: " + dec.str());
            store.ahmes.emplace(d, std::move(dec));
        } else if (f[0] == "T") {
            if (f.size() != 6) throw ParseError(lineno, "T record needs 6 fields");
            Table3Row row;
            row.d = detail::parse_int(f[1], lineno);
            row.delta = detail::parse_int(f[2], lineno);
            row.parts = detail::parse_parts(f[3], lineno);
            if (row.parts.size() != 2) throw ParseError(lineno, "T record needs a two-term pair");
            row.multiplicity = detail::parse_rational(f[4], lineno);
            for (const std::string& flag : detail::split(f[5], ',')) {
                if (flag.empty()) continue;
                if (flag == "Eg")
                    row.eg = true;
                else if (flag == "barred")
                    row.barred = true;
                else if (flag == "slashed")
                    row.slashed = true;
                else
                    throw ParseError(lineno, "unknown flag '" + flag + "'");
            }
            Decomposition dec{TargetFraction(2, row.d), row.parts};
            if (!verify_identity(dec))
                throw ParseError(lineno, "identity fails: " + dec.str());
            store.table3.push_back(std::move(row));
        } else {
            throw ParseError(lineno, "unknown record kind '" + f[0] + "'");
        }
    }

    const std::vector<Int> expected = odd_composites_9_99();
    for (Int d : expected)
        if (!store.ahmes.count(d))
            throw ParseError(lineno, "Ahmes row missing for D=" + std::to_string(d));
    if (store.ahmes.size() != expected.size())
        throw ParseError(lineno, "Ahmes rows must cover exactly the odd composites 9..99");
    return store;
}

inline GroundTruthStore load_ground_truth(const std::string& text) {
    std::istringstream in(text);
    return load_ground_truth(in);
}

inline const GroundTruthStore& default_ground_truth() {
    static const GroundTruthStore store = load_ground_truth(std::string(kDefaultGroundTruth));
    return store;
}

} // namespace rhind
