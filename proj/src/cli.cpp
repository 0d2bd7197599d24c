#include "listpack/cli.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "listpack/errors.hpp"
#include "listpack/galvin.hpp"
#include "listpack/io.hpp"
#include "listpack/packer.hpp"
#include "listpack/search.hpp"

namespace listpack::cli {

namespace {

using io::json;

struct Options {
    std::string graph;
    std::string lists;
    std::string edge_lists;
    std::string packing;
    std::string output;
    std::string family{"complete"};
    std::size_t n{0};
    std::size_t size{0};
    std::size_t max_k{4};
    std::uint64_t budget_nodes{SearchBudget{}.node_limit};
    double budget_seconds{SearchBudget{}.time_limit};
    std::uint64_t seed{0};

    SearchBudget budget() const { return {budget_nodes, budget_seconds}; }
};

struct Result {
    int code{exit_ok};
    std::optional<std::size_t> value;
    std::string detail;
    std::string problem;  // stderr line for non-ok results
};

std::string_view status_word(int code) {
    switch (code) {
        case exit_ok:
            return "ok";
        case exit_negative:
            return "negative";
        case exit_exhausted:
            return "exhausted";
        default:
            return "error";
    }
}

int emit(const Result& r, std::ostream& out, std::ostream& err) {
    out << "STATUS=" << status_word(r.code) << " VALUE=";
    if (r.value) out << *r.value;
    out << '\n' << r.detail;
    if (!r.detail.empty() && r.detail.back() != '\n') out << '\n';
    if (r.code != exit_ok) err << status_word(r.code) << ": " << r.problem << '\n';
    return r.code;
}

std::string packing_table(const Packing& p) {
    std::ostringstream os;
    for (std::size_t j = 1; j <= p.size(); ++j) {
        os << "f_" << j << ':';
        for (Color c : p.row(j).values()) os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

void maybe_write(const Options& opt, const json& doc) {
    if (!opt.output.empty()) io::write_json_file(opt.output, doc);
}

json witness_json(const std::optional<ListAssignment>& lists) {
    return lists ? io::lists_to_json(*lists) : json(nullptr);
}

// ---------------------------------------------------------------- commands

Result cmd_pack_complete(const Options& opt) {
    ListAssignment lists;
    std::size_t m = 0;
    bool generated = false;
    if (!opt.lists.empty()) {
        lists = io::lists_from_json(io::read_json_file(opt.lists), opt.n, opt.lists);
        const auto size = lists.uniform_size();
        if (!size) throw InputError(opt.lists + ": lists do not all have the same size");
        m = *size;
        if (opt.size != 0 && opt.size != m)
            throw InputError("--size " + std::to_string(opt.size) + " disagrees with list size " + std::to_string(m));
    } else {
        m = opt.size != 0 ? opt.size : opt.n;
        std::mt19937_64 rng(opt.seed);
        lists = random_assignment(opt.n, m, static_cast<Color>(3 * m), rng);
        generated = true;
    }

    const Packing packing = pack_complete({opt.n, lists, m});
    const VerifyReport report = is_proper_packing(complete_graph(opt.n), lists, packing);
    if (!report.ok()) throw InternalError("pack-complete output failed re-verification: " + report.summary());
    maybe_write(opt, io::packing_to_json(packing));

    Result r{exit_ok, m, {}, {}};
    if (generated) r.detail = "lists (seed " + std::to_string(opt.seed) + "): " + io::lists_to_json(lists).dump() + "\n";
    r.detail += packing_table(packing);
    return r;
}

Result cmd_solve(const Options& opt) {
    const auto in = io::parse_inputs(opt.graph, opt.lists);
    const std::size_t k = opt.size != 0 ? opt.size : in.lists.min_list_size();
    const auto outcome = solve_packing(in.graph, in.lists, k, opt.budget());
    switch (outcome.status) {
        case SearchStatus::found:
            maybe_write(opt, io::packing_to_json(*outcome.value));
            return {exit_ok, k, packing_table(*outcome.value), {}};
        case SearchStatus::absent:
            maybe_write(opt, json{{"status", "negative"}, {"k", k}, {"lists", io::lists_to_json(in.lists)},
                                  {"reason", "no proper packing of this size exists"}});
            return {exit_negative, std::nullopt, "no proper packing of size " + std::to_string(k) + "\n",
                    "no proper packing of size " + std::to_string(k)};
        case SearchStatus::exhausted:
            break;
    }
    return {exit_exhausted, std::nullopt, "", "search budget exhausted after " + std::to_string(outcome.nodes) + " nodes"};
}

Result cmd_verify(const Options& opt) {
    const auto in = io::parse_inputs(opt.graph, opt.lists);
    const Packing packing = io::packing_from_json(io::read_json_file(opt.packing), in.graph.order(), opt.packing);
    const VerifyReport report = is_proper_packing(in.graph, in.lists, packing);
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(v.describe());
    maybe_write(opt, json{{"ok", report.ok()}, {"violations", violations}});
    if (report.ok()) return {exit_ok, packing.size(), "proper packing of size " + std::to_string(packing.size()), {}};
    return {exit_negative, std::nullopt, report.summary(), report.summary()};
}

Result cmd_edge_color(const Options& opt) {
    const Graph g = io::read_dimacs_file(opt.graph);
    const Bipartition sides = bipartition(g);
    EdgeColoring coloring;
    VerifyReport report;
    if (opt.edge_lists.empty()) {
        coloring = edge_color_bipartite(g, sides);
        report = verify_edge_coloring(g, coloring);
    } else {
        const EdgeListAssignment lists =
            io::edge_lists_from_json(io::read_json_file(opt.edge_lists), g, opt.edge_lists);
        coloring = list_edge_color(g, sides, lists);
        report = verify_edge_coloring(g, coloring, &lists);
    }
    if (!report.ok()) throw InternalError("edge coloring failed re-verification: " + report.summary());
    const json doc = io::edge_coloring_to_json(coloring);
    maybe_write(opt, doc);
    return {exit_ok, coloring.palette_size(), doc["colors"].dump(), {}};
}

Result cmd_chi(const Options& opt) {
    const Graph g = io::read_dimacs_file(opt.graph);
    const std::size_t chi = chromatic_number(g, opt.budget());
    return {exit_ok, chi, "chromatic number " + std::to_string(chi), {}};
}

Result number_command(const Options& opt, const char* quantity, bool packing) {
    const Graph g = io::read_dimacs_file(opt.graph);
    const ChiStarResult res = packing ? list_packing_number(g, opt.max_k, opt.budget())
                                      : list_chromatic_number(g, opt.max_k, opt.budget());

    // The witness must fail a fresh search along an independent route.
    if (res.lower_witness) {
        const std::size_t k = res.lower_witness->uniform_size().value_or(0);
        const bool fails = packing ? solve_packing_lifted(g, *res.lower_witness, k, opt.budget()).is_absent()
                                   : solve_list_coloring(g, *res.lower_witness, opt.budget()).is_absent();
        if (!fails) throw InternalError("lower witness did not re-verify");
    }

    json levels = json::array();
    std::ostringstream detail;
    for (const auto& l : res.levels) {
        levels.push_back({{"k", l.k}, {"checked", l.assignments_checked}, {"bad_found", l.bad_found}});
        detail << "k=" << l.k << " checked=" << l.assignments_checked << (l.bad_found ? " bad assignment found" : " all good")
               << '\n';
    }
    json cert{{"quantity", quantity},
              {"status", std::string(to_string(res.status))},
              {"max_k", opt.max_k},
              {"color_cap", res.color_cap},
              {"upper_evidence", res.upper_evidence},
              {"lower_witness", witness_json(res.lower_witness)},
              {"levels", levels}};
    if (res.status == SearchStatus::found) cert["value"] = res.value;
    maybe_write(opt, cert);

    switch (res.status) {
        case SearchStatus::found:
            return {exit_ok, res.value, detail.str(), {}};
        case SearchStatus::absent:
            return {exit_negative, std::nullopt, detail.str(),
                    std::string(quantity) + " exceeds --max-k " + std::to_string(opt.max_k)};
        case SearchStatus::exhausted:
            break;
    }
    return {exit_exhausted, std::nullopt, detail.str(), "search budget exhausted"};
}

Graph family_member(const std::string& family, std::size_t n) {
    if (family == "complete") return complete_graph(n);
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "star") return n == 1 ? complete_graph(1) : complete_bipartite(1, n - 1).first;
    if (family == "empty") return Graph(n, {});
    throw InputError("unknown family '" + family + "' (complete, path, cycle, star, empty)");
}

Result cmd_scan(const Options& opt) {
    const std::size_t first = opt.family == "cycle" ? 3 : 1;
    family_member(opt.family, first);  // validates the family name
    if (opt.n < first) throw InputError("-n must be at least " + std::to_string(first) + " for this family");

    std::ostringstream csv;
    csv << "n,chi,chi_l,chi_star,ratio\n";
    int code = exit_ok;
    std::size_t rows = 0;
    auto cell = [&](const ChiStarResult& r) -> std::string {
        if (r.status == SearchStatus::found) return std::to_string(r.value);
        if (r.status == SearchStatus::absent) {
            code = std::max(code, static_cast<int>(exit_negative));
            return ">" + std::to_string(opt.max_k);
        }
        code = exit_exhausted;
        return "?";
    };
    for (std::size_t n = first; n <= opt.n && code != exit_exhausted; ++n) {
        const Graph g = family_member(opt.family, n);
        const std::size_t chi = chromatic_number(g, opt.budget());
        const ChiStarResult list = list_chromatic_number(g, opt.max_k, opt.budget());
        const ChiStarResult star = list_packing_number(g, opt.max_k, opt.budget());
        csv << n << ',' << chi << ',' << cell(list) << ',' << cell(star) << ',';
        if (list.status == SearchStatus::found && star.status == SearchStatus::found) {
            char ratio[32];
            std::snprintf(ratio, sizeof ratio, "%.3f", static_cast<double>(star.value) / static_cast<double>(list.value));
            csv << ratio;
        }
        csv << '\n';
        ++rows;
    }
    if (!opt.output.empty()) io::write_text_file(opt.output, csv.str());
    const std::string problem = code == exit_exhausted ? "search budget exhausted" : "some value exceeds --max-k";
    return {code, rows, csv.str(), code == exit_ok ? "" : problem};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact and constructive list packing tools", "listpack"};
    app.require_subcommand(1);

    std::function<Result()> action;
    auto budget_flags = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", opt.budget_nodes, "Search node limit per instance")->check(CLI::PositiveNumber);
        sub->add_option("--budget-seconds", opt.budget_seconds, "Search time limit per instance")
            ->check(CLI::PositiveNumber);
    };
    auto output_flag = [&](CLI::App* sub, const char* what) { sub->add_option("-o", opt.output, what); };

    auto* pack = app.add_subcommand("pack-complete", "Pack an m-assignment of K_n into m proper colorings");
    pack->add_option("-n", opt.n, "Number of vertices of K_n")->required()->check(CLI::PositiveNumber);
    pack->add_option("--size", opt.size, "Packing size m (defaults to n, or the list size)");
    pack->add_option("--lists", opt.lists, "Lists file; random lists over [3m] when omitted");
    pack->add_option("--seed", opt.seed, "Seed for random lists");
    output_flag(pack, "Packing output file");
    pack->callback([&] { action = [&] { return cmd_pack_complete(opt); }; });

    auto* solve = app.add_subcommand("solve", "Exhaustive proper packing search on any graph");
    solve->add_option("--graph", opt.graph, "DIMACS graph file")->required();
    solve->add_option("--lists", opt.lists, "Lists file")->required();
    solve->add_option("--size", opt.size, "Packing size (defaults to the shortest list)");
    budget_flags(solve);
    output_flag(solve, "Packing or negative certificate output file");
    solve->callback([&] { action = [&] { return cmd_solve(opt); }; });

    auto* verify = app.add_subcommand("verify", "Check a packing file against a graph and lists");
    verify->add_option("--graph", opt.graph, "DIMACS graph file")->required();
    verify->add_option("--lists", opt.lists, "Lists file")->required();
    verify->add_option("--packing", opt.packing, "Packing file")->required();
    output_flag(verify, "Report output file");
    verify->callback([&] { action = [&] { return cmd_verify(opt); }; });

    auto* edge = app.add_subcommand("edge-color", "Edge-color a bipartite graph, optionally from edge lists");
    edge->add_option("--graph", opt.graph, "DIMACS graph file")->required();
    edge->add_option("--edge-lists", opt.edge_lists, "Edge lists file keyed \"u-v\"");
    output_flag(edge, "Edge coloring output file");
    edge->callback([&] { action = [&] { return cmd_edge_color(opt); }; });

    auto* chi = app.add_subcommand("chi", "Chromatic number");
    chi->add_option("--graph", opt.graph, "DIMACS graph file")->required();
    budget_flags(chi);
    chi->callback([&] { action = [&] { return cmd_chi(opt); }; });

    for (const auto& entry : {std::tuple{"chi-list", "chi_list", false}, std::tuple{"chi-star", "chi_star", true}}) {
        const char* name = std::get<0>(entry);
        const char* quantity = std::get<1>(entry);
        const bool packing = std::get<2>(entry);
        auto* sub = app.add_subcommand(name, packing ? "List packing number with certificates"
                                                     : "List chromatic number with certificates");
        sub->add_option("--graph", opt.graph, "DIMACS graph file")->required();
        sub->add_option("--max-k", opt.max_k, "Largest k to try")->check(CLI::PositiveNumber);
        budget_flags(sub);
        output_flag(sub, "Certificate output file");
        sub->callback([&, quantity, packing] { action = [&, quantity, packing] { return number_command(opt, quantity, packing); }; });
    }

    auto* scan = app.add_subcommand("scan", "Table of n, chi, chi_l, chi_star and chi_star/chi_l over a family");
    scan->add_option("--family", opt.family, "complete, path, cycle, star or empty");
    scan->add_option("-n", opt.n, "Largest member size")->required();
    scan->add_option("--max-k", opt.max_k, "Largest k to try")->check(CLI::PositiveNumber);
    budget_flags(scan);
    output_flag(scan, "CSV output file");
    scan->callback([&] { action = [&] { return cmd_scan(opt); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << "STATUS=ok VALUE=\n" << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << "STATUS=ok VALUE=\n" << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return emit({exit_input, std::nullopt, "", e.what()}, out, err);
    }

    try {
        return emit(action(), out, err);
    } catch (const SearchExhausted& e) {
        return emit({exit_exhausted, std::nullopt, "", e.what()}, out, err);
    } catch (const InputError& e) {
        return emit({exit_input, std::nullopt, "", e.what()}, out, err);
    } catch (const json::exception& e) {
        return emit({exit_input, std::nullopt, "", e.what()}, out, err);
    } catch (const InternalError& e) {
        return emit({exit_input, std::nullopt, "", std::string("internal error: ") + e.what()}, out, err);
    } catch (const std::exception& e) {
        return emit({exit_input, std::nullopt, "", e.what()}, out, err);
    }
}

}  // namespace listpack::cli
