// Command-line front end for the 2/D table reconstruction library.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhind/render.hpp"

namespace {

rhind::Int parse_target(rhind::Int d) {
    if (d < 3 || d % 2 == 0) throw CLI::ValidationError("D must be odd and >= 3");
    return d;
}

std::string render_pairs(rhind::Int d, const std::vector<rhind::Decomposition>& decs,
                         rhind::Format fmt) {
    if (fmt == rhind::Format::json) {
        rhind::Json doc;
        doc["target"] = "2/" + std::to_string(d);
        doc["pairs"] = rhind::Json::array();
        for (const auto& dec : decs) doc["pairs"].push_back(dec.parts());
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (const auto& dec : decs) out += dec.str() + "\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reconstruction of the Rhind papyrus 2/D table (D odd composite)"};
    app.require_subcommand(1);

    rhind::RuleConfig cfg;
    std::vector<rhind::Int> precept{77, 95};
    std::vector<rhind::Int> necessity{55};
    app.add_option("--topflag", cfg.topflag, "multiplicity cap (default 6)");
    app.add_option("--delta-cap", cfg.delta_cap, "delta cap (default 10)");
    app.add_option("--precept-set", precept, "D values under the no-odd-denominators precept")
        ->delimiter(',');
    app.add_option("--mother-necessity", necessity, "D values pinned to a 2/11 scaling")
        ->delimiter(',');

    std::string format = "text";

    auto* table = app.add_subcommand("table", "reconstruct the full 25-row table");
    table->add_option("--format", format, "text|markdown|json|csv");

    auto* decompose = app.add_subcommand("decompose", "select the decomposition of one 2/D");
    rhind::Int decompose_d = 0;
    bool explain = false;
    decompose->add_option("D", decompose_d, "odd composite in 9..99")->required();
    decompose->add_flag("--explain", explain, "print the full selection trace");
    decompose->add_option("--format", format, "text|markdown|json|csv");

    auto* candidates = app.add_subcommand("candidates", "enumerate two-term decompositions of 2/D");
    rhind::Int candidates_d = 0;
    std::string method = "theorem";
    bool all = false, countable = false;
    candidates->add_option("D", candidates_d, "odd integer >= 3")->required();
    candidates->add_option("--method", method, "theorem|keyeq|squares|brute");
    candidates->add_flag("--all", all, "include trivial, barred and slashed rows (default)");
    candidates->add_flag("--countable", countable, "only countable rows");
    candidates->add_option("--format", format, "text|markdown|json|csv");

    auto* verify = app.add_subcommand("verify", "diff computed tables against the printed ones");
    std::string ground_truth_path;
    verify->add_option("--ground-truth", ground_truth_path, "record file (default: embedded)");
    verify->add_option("--format", format, "text|markdown|json|csv");

    auto* stats = app.add_subcommand("stats", "mother-table usage statistics");
    stats->add_option("--format", format, "text|json");

    auto* order = app.add_subcommand("order", "the order the selections were made in");
    order->add_option("--format", format, "text|json");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.precept_set = std::set<rhind::Int>(precept.begin(), precept.end());
    cfg.mother_necessity = std::set<rhind::Int>(necessity.begin(), necessity.end());

    try {
        const rhind::Format fmt = rhind::parse_format(format);

        if (table->parsed()) {
            std::cout << rhind::render_table(rhind::select_all(cfg), fmt);
        } else if (decompose->parsed()) {
            const rhind::SelectionTrace trace = rhind::select(decompose_d, cfg);
            if (explain)
                std::cout << rhind::render_trace(trace, fmt);
            else if (fmt == rhind::Format::json)
                std::cout << rhind::detail::dump(rhind::trace_json(trace));
            else
                std::cout << trace.chosen.str() << '\n';
        } else if (candidates->parsed()) {
            parse_target(candidates_d);
            if (method == "theorem") {
                std::vector<rhind::ClassifiedRow> rows = rhind::classified_rows(candidates_d, cfg);
                if (countable && !all) {
                    std::erase_if(rows, [](const rhind::ClassifiedRow& r) { return !r.countable(); });
                }
                std::optional<std::pair<rhind::Int, rhind::Int>> eg;
                if (rhind::is_odd_composite(candidates_d) && candidates_d <= 99) {
                    const auto chosen = rhind::select(candidates_d, cfg).chosen;
                    if (chosen.size() == 2) eg = {chosen.parts()[0], chosen.parts()[1]};
                }
                std::cout << rhind::render_rows(rhind::TargetFraction(2, candidates_d), rows, fmt, eg);
            } else {
                std::vector<rhind::Decomposition> decs;
                if (method == "keyeq")
                    decs = rhind::keyeq_candidates(candidates_d);
                else if (method == "squares")
                    decs = rhind::square_candidates(candidates_d);
                else if (method == "brute")
                    decs = rhind::brute_force(candidates_d);
                else
                    throw std::invalid_argument("unknown method '" + method + "'");
                std::cout << render_pairs(candidates_d, decs, fmt);
            }
        } else if (verify->parsed()) {
            rhind::GroundTruthStore store;
            if (ground_truth_path.empty()) {
                store = rhind::default_ground_truth();
            } else {
                std::ifstream in(ground_truth_path);
                if (!in) throw std::runtime_error("cannot open " + ground_truth_path);
                store = rhind::load_ground_truth(in);
            }
            const std::vector<rhind::DiffEntry> diffs = rhind::verify_all(store, cfg);
            std::cout << rhind::render_diffs(diffs, fmt);
            if (rhind::diffs_are_expected(diffs)) {
                std::cerr << diffs.size() << " known anomalies, nothing unexpected\n";
                return 0;
            }
            std::cerr << "unexpected discrepancies present\n";
            return 1;
        } else if (stats->parsed()) {
            std::cout << rhind::render_stats(rhind::mother_usage_stats(rhind::select_all(cfg)), fmt);
        } else if (order->parsed()) {
            std::cout << rhind::render_order(rhind::selection_order(cfg), fmt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
