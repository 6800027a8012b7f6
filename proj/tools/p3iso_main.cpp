// p3iso: P3-isolation numbers, certified bounded isolating sets, extremal
// family generators, and exhaustive small-graph verification.
//
// Exit codes: 0 ok, 1 verification found violations, 2 parse/usage error,
// 3 precondition violation, 4 internal-invariant failure.
// stdout carries exactly one JSON document; diagnostics go to stderr when
// ISO_LOG is set.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "p3iso/bounded.hpp"
#include "p3iso/constructions.hpp"
#include "p3iso/enumerate.hpp"
#include "p3iso/exact.hpp"
#include "p3iso/patterns.hpp"

using nlohmann::json;
using namespace p3iso;

namespace {

bool log_enabled() {
    const char* v = std::getenv("ISO_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "p3iso: " << msg << "\n";
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

Graph load_graph(const std::string& positional, const std::string& input) {
    std::string line = positional;
    if (!input.empty()) {
        if (!positional.empty())
            throw parse_error("give either a graph6 argument or --input, not both");
        if (input == "-") {
            if (!std::getline(std::cin, line)) throw parse_error("empty standard input");
        } else {
            std::ifstream file(input);
            if (!file) throw parse_error("cannot open " + input);
            if (!std::getline(file, line)) throw parse_error("empty file " + input);
        }
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw parse_error("no graph6 input given");
    return parse_graph6(line);
}

std::vector<int> parse_label_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw parse_error("bad label in --set: '" + item + "'");
        }
    }
    return out;
}

json report_json(const VerificationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"claim", v.claim}, {"g6", v.g6}});
    return json{{"n", r.n},
                {"counts", {{"connected", r.connected_count}, {"c6free", r.c6free_count}}},
                {"empirical_f", r.empirical_f},
                {"bound", r.bound},
                {"tight_witnesses", r.tight_witnesses},
                {"violations", violations},
                {"wall_ms", r.wall_ms}};
}

int cmd_compute(const std::string& positional, const std::string& input, bool exact,
                bool bound, const std::string& mode_name) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = load_graph(positional, input);
    if (exact == bound) throw parse_error("choose exactly one of --exact / --bound");
    json doc{{"status", "ok"}, {"n", g.order()}, {"delta_max", g.max_degree()}};
    if (exact) {
        const ExactResult res = iota_exact(g);
        doc["iota"] = res.iota;
        doc["witness"] = res.witness.to_vector();
    } else {
        BoundMode mode;
        if (mode_name == "exact-oracle")
            mode = BoundMode::exact_oracle;
        else if (mode_name == "fast")
            mode = BoundMode::fast;
        else
            throw parse_error("--mode must be exact-oracle or fast");
        const BoundedSetResult res = isolating_set_bounded(g, mode);
        doc["bound_size"] = res.set.count();
        doc["bound"] = res.bound;
        doc["witness"] = res.set.to_vector();
        doc["case_trace"] = res.case_trace;
    }
    doc["wall_ms"] = elapsed_ms(start);
    emit(doc);
    return 0;
}

int cmd_certify(const std::string& positional, const std::string& input,
                const std::string& set_text) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = load_graph(positional, input);
    VertexSet d;
    for (int v : parse_label_list(set_text)) {
        if (v < 0 || v >= g.order())
            throw parse_error("label " + std::to_string(v) + " out of range");
        d.add(v);
    }
    const DeletionResult residual = delete_closed_neighborhood(g, d);
    emit(json{{"status", "ok"},
              {"n", g.order()},
              {"isolating", is_p3_isolating(g, d)},
              {"residual_max_degree", residual.graph.max_degree()},
              {"wall_ms", elapsed_ms(start)}});
    return 0;
}

int cmd_construct(const std::string& family, int k, int n, int h) {
    const auto start = std::chrono::steady_clock::now();
    ConstructionParams params;
    params.k = k;
    params.n = n;
    params.h = h;
    if (family == "bkstar")
        params.family = Family::bk_star;
    else if (family == "bn")
        params.family = Family::b_n;
    else if (family == "bnk3h")
        params.family = Family::b_n_k3_h;
    else if (family == "cycle")
        params.family = Family::cycle;
    else if (family == "path")
        params.family = Family::path;
    else if (family == "k4minus")
        params.family = Family::k4_minus;
    else
        throw parse_error("unknown family '" + family +
                          "' (bkstar, bn, bnk3h, cycle, path, k4minus)");
    const Graph g = params.build();
    emit(json{{"status", "ok"},
              {"graph6", to_graph6(g)},
              {"n", g.order()},
              {"edges", g.edge_count()},
              {"delta_max", g.max_degree()},
              {"wall_ms", elapsed_ms(start)}});
    return 0;
}

int cmd_verify(int max_n, int jobs, const std::string& ingest) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    if (!ingest.empty()) {
        std::ifstream file(ingest);
        if (!file) throw parse_error("cannot open " + ingest);
        const std::vector<Graph> graphs = ingest_graph6_stream(file);
        log_line("ingested " + std::to_string(graphs.size()) + " graphs");
        reports = verify_catalog(graphs, jobs);
    } else {
        reports = verify_theorem(max_n, jobs);
    }
    bool clean = true;
    json out = json::array();
    for (const VerificationReport& r : reports) {
        log_line("n=" + std::to_string(r.n) + " connected=" + std::to_string(r.connected_count) +
                 " c6free=" + std::to_string(r.c6free_count) +
                 " f=" + std::to_string(r.empirical_f));
        clean = clean && r.violations.empty();
        out.push_back(report_json(r));
    }
    emit(json{{"status", clean ? "ok" : "violations"},
              {"reports", out},
              {"wall_ms", elapsed_ms(start)}});
    return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P3-isolation toolkit"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    std::string positional, input, set_text, mode_name = "exact-oracle", family, ingest;
    bool exact = false, bound = false;
    int k = 1, n = 1, h = 5, max_n = 8, jobs = 1;

    CLI::App* compute = app.add_subcommand("compute", "iota or a certified bounded set");
    compute->add_option("graph6", positional, "graph6 line");
    compute->add_option("--input", input, "read graph6 from FILE or - for stdin");
    compute->add_flag("--exact", exact, "exact isolation number");
    compute->add_flag("--bound", bound, "certified set within floor((n+1)/4)");
    compute->add_option("--mode", mode_name, "exact-oracle (default) or fast");

    CLI::App* certify = app.add_subcommand("certify", "check a candidate isolating set");
    certify->add_option("graph6", positional, "graph6 line");
    certify->add_option("--input", input, "read graph6 from FILE or - for stdin");
    certify->add_option("--set", set_text, "comma-separated vertex labels");

    CLI::App* construct = app.add_subcommand("construct", "emit an extremal family member");
    construct->set_help_flag("--help", "print help");
    construct->add_option("family", family, "bkstar | bn | bnk3h | cycle | path | k4minus")
        ->required();
    construct->add_option("--k", k, "block count for bkstar");
    construct->add_option("--n", n, "vertex count");
    construct->add_option("--h", h, "maximum degree for bnk3h");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive verification up to max-n");
    verify->add_option("--max-n", max_n, "largest order to enumerate (<= 9)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--ingest", ingest, "verify a graph6 catalog instead of enumerating");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(positional, input, exact, bound, mode_name);
        if (certify->parsed()) return cmd_certify(positional, input, set_text);
        if (construct->parsed()) return cmd_construct(family, k, n, h);
        if (verify->parsed()) return cmd_verify(max_n, jobs, ingest);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit(json{{"status", "error"}, {"kind", "parse"}, {"message", e.what()}});
        return 2;
    } catch (const parse_error& e) {
        emit(json{{"status", "error"}, {"kind", "parse"}, {"message", e.what()}});
        return 2;
    } catch (const precondition_error& e) {
        emit(json{{"status", "error"}, {"kind", "precondition"}, {"message", e.what()}});
        return 3;
    } catch (const std::exception& e) {
        emit(json{{"status", "error"}, {"kind", "internal"}, {"message", e.what()}});
        return 4;
    }
}
