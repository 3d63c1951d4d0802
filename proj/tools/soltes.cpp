// Command-line frontend: total-distance analysis under vertex deletion.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "soltes/bounds.hpp"
#include "soltes/census.hpp"
#include "soltes/codec.hpp"
#include "soltes/enumerate.hpp"
#include "soltes/families.hpp"
#include "soltes/metrics.hpp"
#include "soltes/props.hpp"
#include "soltes/random.hpp"
#include "soltes/transforms.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDecodeErrors = 2;
constexpr int kExitUsage = 64;

struct GraphInput {
    std::string path;      // empty = stdin
    std::string format = "graph6";
};

void add_input_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--input", in.path, "input file (default: stdin)");
    cmd->add_option("--input-format", in.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
}

soltes::Graph read_graph(const GraphInput& in) {
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (!in.path.empty()) {
        file.open(in.path);
        if (!file) soltes::fail(soltes::Errc::decode_error, "cannot open " + in.path);
        stream = &file;
    }
    if (in.format == "edgelist") return soltes::read_edge_list(*stream);
    std::string line;
    do {
        if (!std::getline(*stream, line))
            soltes::fail(soltes::Errc::empty_stream, "no graph6 line in input");
    } while (line.find_first_not_of(" \t\r\n") == std::string::npos);
    return soltes::decode_graph6(line);
}

void write_graph(const soltes::Graph& g, const std::string& format, std::ostream& out) {
    if (format == "edgelist") soltes::write_edge_list(out, g);
    else out << soltes::encode_graph6(g) << '\n';
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) soltes::fail(soltes::Errc::decode_error, "cannot open " + path);
    out << text << '\n';
}

ordered_json int128_json(soltes::Int128 v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return soltes::int128_to_string(v);
}

std::string plan_to_json(const soltes::BalancerPlan& plan) {
    ordered_json j;
    j["schema"] = 1;
    j["x"] = plan.x;
    j["k"] = plan.k;
    j["ell"] = plan.ell;
    j["y"] = plan.y;
    j["tree_order"] = plan.tree_order();
    auto& recipe = j["recipe"] = ordered_json::array();
    for (const auto& a : plan.recipe)
        recipe.push_back({{"vertex", a.vertex},
                          {"attached_to", a.attached_to},
                          {"target_distance", a.target_distance}});
    return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"soltes: total-distance behaviour of graphs under single-vertex deletion"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // wiener
    auto* wiener_cmd = app.add_subcommand("wiener", "total distance of a connected graph");
    GraphInput wiener_in;
    add_input_options(wiener_cmd, wiener_in);
    std::string wiener_out;
    wiener_cmd->add_option("--output", wiener_out, "output file (default: stdout)");
    wiener_cmd->callback([&] {
        auto g = read_graph(wiener_in);
        ordered_json j;
        j["schema"] = 1;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["wiener"] = soltes::wiener(g);
        write_text(j.dump(), wiener_out);
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "per-vertex deletion analysis");
    GraphInput classify_in;
    add_input_options(classify_cmd, classify_in);
    std::string classify_format = "json", classify_out;
    int classify_workers = 0;
    classify_cmd->add_option("--format", classify_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    classify_cmd->add_option("--workers", classify_workers, "worker threads (default: all cores)");
    classify_cmd->add_option("--output", classify_out, "output file (default: stdout)");
    classify_cmd->callback([&] {
        auto g = read_graph(classify_in);
        auto c = soltes::classify_vertices(g, {.workers = classify_workers, .verify = false});
        std::string text = classify_format == "csv" ? soltes::classification_to_csv(c)
                                                    : soltes::classification_to_json(c);
        while (!text.empty() && text.back() == '\n') text.pop_back();
        write_text(text, classify_out);
    });

    // arcgraph
    auto* arc_cmd = app.add_subcommand("arcgraph", "arc graph (line graph of the subdivision)");
    GraphInput arc_in;
    add_input_options(arc_cmd, arc_in);
    std::string arc_format = "graph6", arc_index_out;
    arc_cmd->add_option("--format", arc_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    arc_cmd->add_option("--index-out", arc_index_out, "write the arc id <-> (tail, head) table as JSON");
    arc_cmd->callback([&] {
        auto g = read_graph(arc_in);
        auto [h, index] = soltes::arc_graph(g);
        if (!arc_index_out.empty()) write_text(soltes::arc_index_to_json(index), arc_index_out);
        write_graph(h, arc_format, std::cout);
    });

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "emit a catalogued family graph");
    std::string gen_family;
    long long gen_n = 0;
    int gen_k = 0;
    std::string gen_format = "graph6";
    gen_cmd->add_option("family", gen_family,
                        "cycle | path | complete | circular-ladder-k4 | triangle-bipartite | "
                        "fig4-left | fig4-right | fig5-60 | fig6-69")
        ->required();
    gen_cmd->add_option("--n", gen_n, "order for cycle/path/complete");
    gen_cmd->add_option("--k", gen_k, "parameter for the parametric families");
    gen_cmd->add_option("--format", gen_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen_cmd->callback([&] {
        auto family = soltes::parse_family(gen_family);
        if (!family) soltes::fail(soltes::Errc::bad_parameter, "unknown family: " + gen_family);
        soltes::FamilySpec spec;
        spec.family = *family;
        if (soltes::family_takes_n(*family)) {
            if (gen_n <= 0) soltes::fail(soltes::Errc::bad_parameter, "--n is required for " + gen_family);
            spec.param = static_cast<int>(gen_n);
        } else if (soltes::family_takes_k(*family)) {
            if (gen_k <= 0) soltes::fail(soltes::Errc::bad_parameter, "--k is required for " + gen_family);
            spec.param = gen_k;
        }
        write_graph(soltes::build_family(spec), gen_format, std::cout);
    });

    // balance
    auto* balance_cmd = app.add_subcommand("balance", "append a compensating tree to an edge");
    GraphInput balance_in;
    add_input_options(balance_cmd, balance_in);
    long long balance_u = 0, balance_v = 0, balance_x = 0;
    int balance_k = 0;
    std::string balance_format = "graph6", balance_plan_out;
    balance_cmd->add_option("--u", balance_u, "edge endpoint")->required();
    balance_cmd->add_option("--v", balance_v, "edge endpoint")->required();
    balance_cmd->add_option("--x", balance_x, "target distance sum (> 16k^2)")->required();
    balance_cmd->add_option("--k", balance_k, "girth parameter")->required();
    balance_cmd->add_option("--format", balance_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    balance_cmd->add_option("--plan-out", balance_plan_out, "write the tree recipe as JSON");
    balance_cmd->callback([&] {
        auto g = read_graph(balance_in);
        auto [h, plan] = soltes::append_balancer(g, static_cast<soltes::Vertex>(balance_u),
                                                 static_cast<soltes::Vertex>(balance_v), balance_x,
                                                 balance_k);
        if (!balance_plan_out.empty()) write_text(plan_to_json(plan), balance_plan_out);
        write_graph(h, balance_format, std::cout);
    });

    // q-construct
    auto* q_cmd = app.add_subcommand("q-construct", "attach the fixed 112-vertex compensator to an edge");
    GraphInput q_in;
    add_input_options(q_cmd, q_in);
    long long q_u = 0, q_v = 0;
    std::string q_format = "graph6";
    q_cmd->add_option("--u", q_u, "edge endpoint")->required();
    q_cmd->add_option("--v", q_v, "edge endpoint")->required();
    q_cmd->add_option("--format", q_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    q_cmd->callback([&] {
        auto g = read_graph(q_in);
        auto h = soltes::construct_q(
            g, soltes::EdgeRef(static_cast<soltes::Vertex>(q_u), static_cast<soltes::Vertex>(q_v)));
        write_graph(h, q_format, std::cout);
    });

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Moore bound and degree-7 girth bounds");
    int bounds_d = 0, bounds_g = 0;
    long long bounds_coeff = 1000;
    std::string bounds_out;
    bounds_cmd->add_option("--d", bounds_d, "degree")->required();
    bounds_cmd->add_option("--g", bounds_g, "even girth")->required();
    bounds_cmd->add_option("--threshold-coeff", bounds_coeff, "gap threshold coefficient (default 1000)");
    bounds_cmd->add_option("--output", bounds_out, "output file (default: stdout)");
    bounds_cmd->callback([&] {
        auto params = soltes::moore_params(bounds_d, bounds_g);
        ordered_json j;
        j["schema"] = 1;
        j["d"] = params.d;
        j["g"] = params.g;
        j["k"] = params.k;
        j["moore"] = int128_json(params.moore);
        if (bounds_d == 7) {
            auto diff = soltes::diff_lower_bound_7(params.k);
            j["diff_lb"] = int128_json(diff.value());
            j["diff_routes_agree"] = diff.routes_agree;
            j["sigma_ub"] = soltes::sigma_upper_bound_7(params.k).str();
            j["gap_ok"] = soltes::gap_check(params.k, bounds_coeff);
        } else {
            j["diff_lb"] = nullptr;
            j["sigma_ub"] = nullptr;
            j["gap_ok"] = nullptr;
        }
        write_text(j.dump(), bounds_out);
    });

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "stream classification of a graph file");
    std::string scan_input, scan_format = "graph6", scan_output;
    int scan_min_degree = -1, scan_min_diameter = -1, scan_workers = 0;
    bool scan_aggregate = false;
    scan_cmd->add_option("--input", scan_input, "input file (default: stdin)");
    scan_cmd->add_option("--format", scan_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    scan_cmd->add_option("--min-degree", scan_min_degree, "prefilter: require minimum degree >= D");
    scan_cmd->add_option("--min-diameter", scan_min_diameter, "prefilter: require diameter >= D");
    scan_cmd->add_option("--workers", scan_workers, "worker threads (default: all cores)");
    scan_cmd->add_flag("--aggregate", scan_aggregate, "omit per-vertex deltas from the report");
    scan_cmd->add_option("--output", scan_output, "report file (default: stdout)");
    scan_cmd->callback([&] {
        soltes::ScanFilter filter;
        if (scan_min_degree >= 0) filter.min_degree_at_least = scan_min_degree;
        if (scan_min_diameter >= 0) filter.require_diameter_at_least = scan_min_diameter;
        filter.classify_fully = !scan_aggregate;
        std::ifstream file;
        std::istream* stream = &std::cin;
        if (!scan_input.empty()) {
            file.open(scan_input);
            if (!file) soltes::fail(soltes::Errc::decode_error, "cannot open " + scan_input);
            stream = &file;
        }
        auto report = soltes::scan(*stream, filter, scan_workers,
                                   scan_format == "edgelist" ? soltes::ScanFormat::edgelist
                                                             : soltes::ScanFormat::graph6);
        write_text(soltes::scan_report_to_json(report), scan_output);
        if (!report.clean()) exit_code = kExitDecodeErrors;
    });

    // props
    auto* props_cmd = app.add_subcommand("props", "run the deletion property suites");
    int props_max_n = 0, props_random = 0, props_random_max_n = 40, props_workers = 0;
    std::uint64_t props_seed = 1;
    std::string props_input, props_format = "graph6";
    props_cmd->add_option("--max-n", props_max_n, "exhaustive corpus: all connected graphs up to this order");
    props_cmd->add_option("--random", props_random, "add this many random connected graphs");
    props_cmd->add_option("--random-max-n", props_random_max_n, "max order of random graphs (default 40)");
    props_cmd->add_option("--seed", props_seed, "random corpus seed (default 1)");
    props_cmd->add_option("--input", props_input, "add a graph file to the corpus");
    props_cmd->add_option("--format", props_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    props_cmd->add_option("--workers", props_workers, "worker threads (default: all cores)");
    props_cmd->callback([&] {
        std::vector<soltes::Graph> corpus;
        if (props_max_n > 0) {
            soltes::GraphEnumerator enumerator;
            for (int n = 1; n <= props_max_n; ++n)
                for (auto& g : enumerator.connected(n)) corpus.push_back(std::move(g));
        }
        if (props_random > 0) {
            for (auto& g : soltes::random_connected_corpus(props_random, props_random_max_n, props_seed))
                corpus.push_back(std::move(g));
        }
        if (!props_input.empty()) {
            std::ifstream file(props_input);
            if (!file) soltes::fail(soltes::Errc::decode_error, "cannot open " + props_input);
            if (props_format == "graph6") {
                std::string line;
                while (std::getline(file, line)) {
                    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
                    auto g = soltes::decode_graph6(line);
                    if (soltes::is_connected(g)) corpus.push_back(std::move(g));
                }
            } else {
                while (file >> std::ws && !file.eof()) {
                    auto g = soltes::read_edge_list(file);
                    if (soltes::is_connected(g)) corpus.push_back(std::move(g));
                }
            }
        }
        if (corpus.empty())
            soltes::fail(soltes::Errc::empty_stream,
                         "empty corpus: use --max-n, --random and/or --input");
        auto results = soltes::run_all_props(corpus, props_workers);
        bool all_passed = true;
        for (const auto& r : results) {
            std::cout << (r.passed() ? "PASS" : "FAIL") << ' ' << r.name << ": checked "
                      << r.graphs_checked << " graphs, hypothesis held on " << r.hypothesis_hits
                      << '\n';
            for (const auto& cx : r.counterexamples)
                std::cout << "counterexample: " << soltes::encode_graph6(cx) << '\n';
            all_passed = all_passed && r.passed();
        }
        if (!all_passed) exit_code = kExitError;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << app.help() << std::flush;
        return kExitUsage;
    } catch (const soltes::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return exit_code;
}
