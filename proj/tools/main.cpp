// graphonlab: graph-limit laboratory CLI.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphonlab/classes.hpp"
#include "graphonlab/cutnorm.hpp"
#include "graphonlab/experiments.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/json_io.hpp"
#include "graphonlab/literals.hpp"
#include "graphonlab/parallel.hpp"

namespace gl = graphonlab;

namespace {

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw gl::DomainError("expected a comma-separated integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(gl::parse_double(item));
    }
    if (out.empty()) throw gl::DomainError("expected a comma-separated number list");
    return out;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct Output {
    bool json = false;
    std::string out_path;

    void deliver(const nlohmann::json& doc, const std::string& plain) const {
        std::string text = json ? doc.dump(2) + "\n" : plain;
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw gl::IoError("cannot open " + out_path + " for writing");
            f << text;
        }
    }
};

void deliver_report(const gl::ExperimentReport& report, const std::string& format,
                    const std::string& out_path) {
    if (out_path.empty()) {
        gl::emit(report, format, std::cout);
    } else {
        gl::emit_to_file(report, format, out_path);
    }
}

int locate_config_line(const std::string& path, const std::string& message) {
    // pull the offending token out of CLI11's message and find its line
    std::string token;
    std::size_t colon = message.rfind(": ");
    if (colon != std::string::npos) token = message.substr(colon + 2);
    if (token.empty()) return 0;
    std::ifstream in(path);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find(token) != std::string::npos) return number;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphonlab: step graphons, cut metrics, hereditary-class censuses"};
    app.require_subcommand(0, 1);
    app.set_config("--config", "", "read options from a TOML config file");
    app.allow_config_extras(false);
    app.footer(R"(Graphon literals: constant:p, turan:r, wrs:r,s, string_a:a, from_graph:<graph>, @file.json
Graph literals: K5, C4, P3, E2, K3,3, g6:<string>, @file.g6
Class literals: bipartite, split, all, kt_free:t, crs:r,s, forbidden:@file.g6

Examples:
  graphonlab entropy --graphon wrs:2,0
  graphonlab density --edge --graphon string_a:1/8
  graphonlab density --pattern K3 --host C5
  graphonlab census --class kt_free:3 --n 3
  graphonlab colouring --class split
  graphonlab sample --graphon wrs:2,0 --n 8 --seed 7
  graphonlab cutdist --u turan:2 --v wrs:2,0 --delta --m 2
  graphonlab entropy-rate --graphon wrs:2,0 --n-max 5
  graphonlab balls --graphon wrs:2,0 --n 4 --delta 0.2,0.5
  graphonlab growth --class bipartite --n-max 5
  graphonlab regularity --subject wrs:3,2 --k 2,4 --seed 11
  graphonlab graphon make wrs:2,0
  graphonlab graph6 decode Bw)");

    Output output;
    app.add_flag("--json", output.json, "machine-readable JSON output");
    app.add_option("--out", output.out_path, "write output to a file instead of stdout");
    app.add_option("--threads", "worker pool size (default: available parallelism)")
        ->each([](const std::string& v) {
            unsigned long n = std::stoul(v);
            if (n < 1) throw CLI::ValidationError("--threads needs a positive count");
            gl::set_worker_count(n);
        });

    // ---- entropy -----------------------------------------------------------
    auto* cmd_entropy = app.add_subcommand("entropy", "graphon entropy Ent(W)");
    std::string entropy_graphon;
    cmd_entropy->add_option("--graphon", entropy_graphon, "graphon literal")->required();
    cmd_entropy->callback([&] {
        gl::StepGraphon w = gl::parse_graphon_spec(entropy_graphon);
        double value = gl::entropy(w);
        output.deliver({{"entropy", value}}, fmt12(value) + "\n");
    });

    // ---- density -----------------------------------------------------------
    auto* cmd_density = app.add_subcommand("density", "edge/induced/homomorphism densities");
    std::string density_graphon, density_pattern, density_host;
    bool density_edge = false, density_hom = false;
    cmd_density->add_option("--graphon", density_graphon, "graphon literal");
    cmd_density->add_option("--pattern", density_pattern, "pattern graph literal");
    cmd_density->add_option("--host", density_host, "host graph literal");
    cmd_density->add_flag("--edge", density_edge, "edge density of a graphon");
    cmd_density->add_flag("--hom", density_hom, "homomorphism density instead of induced");
    cmd_density->callback([&] {
        if (!density_graphon.empty() && density_pattern.empty()) {
            double value = gl::edge_density(gl::parse_graphon_spec(density_graphon));
            output.deliver({{"edge_density", value}}, fmt12(value) + "\n");
            return;
        }
        if (!density_graphon.empty() && !density_pattern.empty()) {
            double value = gl::p_induced(gl::parse_graph_spec(density_pattern),
                                         gl::parse_graphon_spec(density_graphon));
            output.deliver({{"p_induced", value}}, fmt12(value) + "\n");
            return;
        }
        if (density_pattern.empty() || density_host.empty())
            throw gl::DomainError("density needs --graphon, or --pattern with --host");
        gl::Graph h = gl::parse_graph_spec(density_pattern);
        gl::Graph g = gl::parse_graph_spec(density_host);
        double value = density_hom ? gl::hom_density(h, g) : gl::induced_density(h, g);
        output.deliver({{density_hom ? "hom_density" : "induced_density", value}},
                       fmt12(value) + "\n");
    });

    // ---- cutnorm -----------------------------------------------------------
    auto* cmd_cutnorm = app.add_subcommand("cutnorm", "cut norm of a kernel (exact or heuristic)");
    std::string cutnorm_kernel;
    bool cutnorm_heuristic = false;
    int cutnorm_restarts = 8;
    std::optional<std::uint64_t> cutnorm_seed;
    cmd_cutnorm->add_option("--kernel", cutnorm_kernel, "@file.json with a kernel document")->required();
    cmd_cutnorm->add_flag("--heuristic", cutnorm_heuristic, "alternating maximization instead of exact scan");
    cmd_cutnorm->add_option("--restarts", cutnorm_restarts, "heuristic restarts");
    cmd_cutnorm->add_option("--seed", cutnorm_seed, "heuristic seed");
    cmd_cutnorm->callback([&] {
        if (cutnorm_kernel.empty() || cutnorm_kernel[0] != '@')
            throw gl::DomainError("cutnorm expects --kernel @file.json");
        gl::Kernel kern = gl::load_kernel(cutnorm_kernel.substr(1));
        gl::CutResult result;
        std::string plain;
        nlohmann::json doc;
        if (cutnorm_heuristic) {
            std::uint64_t seed = resolve_seed(cutnorm_seed);
            plain += "seed: " + std::to_string(seed) + "\n";
            result = gl::cut_norm_heuristic(kern, cutnorm_restarts, seed);
            doc = gl::cut_result_to_json(result);
            doc["seed"] = seed;
            doc["restarts"] = cutnorm_restarts;
        } else {
            result = gl::cut_norm_exact(kern);
            doc = gl::cut_result_to_json(result);
        }
        plain += fmt12(result.value) + "\n";
        output.deliver(doc, plain);
    });

    // ---- cutdist -----------------------------------------------------------
    auto* cmd_cutdist = app.add_subcommand("cutdist", "cut metric between graphons or graph vs graphon");
    std::string cutdist_u, cutdist_v, cutdist_graph;
    bool cutdist_delta = false;
    int cutdist_m = 4;
    std::optional<std::uint64_t> cutdist_seed;
    cmd_cutdist->add_option("--u", cutdist_u, "first graphon literal");
    cmd_cutdist->add_option("--v", cutdist_v, "second graphon literal")->required();
    cmd_cutdist->add_option("--graph", cutdist_graph, "graph literal (distance to --v)");
    cmd_cutdist->add_flag("--delta", cutdist_delta, "permutation-minimized upper bound at resolution --m");
    cmd_cutdist->add_option("--m", cutdist_m, "equipartition resolution for --delta");
    cmd_cutdist->add_option("--seed", cutdist_seed, "seed for annealing fallbacks");
    cmd_cutdist->callback([&] {
        gl::StepGraphon v = gl::parse_graphon_spec(cutdist_v);
        if (!cutdist_graph.empty()) {
            gl::Graph g = gl::parse_graph_spec(cutdist_graph);
            std::uint64_t seed = resolve_seed(cutdist_seed);
            gl::GraphAlignment align = gl::delta_graph_graphon(g, v, seed);
            nlohmann::json doc = {{"value", align.value},
                                  {"kind", "UPPER_BOUND"},
                                  {"exhaustive", align.exhaustive},
                                  {"seed", seed}};
            output.deliver(doc, fmt12(align.value) + "\n");
            return;
        }
        if (cutdist_u.empty()) throw gl::DomainError("cutdist needs --u or --graph");
        gl::StepGraphon u = gl::parse_graphon_spec(cutdist_u);
        if (cutdist_delta) {
            std::uint64_t seed = resolve_seed(cutdist_seed);
            gl::DeltaBound bound = gl::delta_box_upper(u, v, cutdist_m, seed);
            nlohmann::json doc = {{"value", bound.value},
                                  {"kind", "UPPER_BOUND"},
                                  {"m", cutdist_m},
                                  {"exhaustive", bound.exhaustive},
                                  {"seed", seed}};
            output.deliver(doc, fmt12(bound.value) + "\n");
            return;
        }
        double value = gl::d_box(u, v);
        output.deliver({{"value", value}, {"kind", "EXACT"}}, fmt12(value) + "\n");
    });

    // ---- step ---------------------------------------------------------------
    auto* cmd_step = app.add_subcommand("step", "average a graphon over a partition");
    std::string step_graphon, step_groups;
    int step_k = 0;
    cmd_step->add_option("--graphon", step_graphon, "graphon literal")->required();
    cmd_step->add_option("--k", step_k, "average over the k-interval equipartition");
    cmd_step->add_option("--groups", step_groups, "explicit block grouping, e.g. 0,0,1");
    cmd_step->callback([&] {
        gl::StepGraphon w = gl::parse_graphon_spec(step_graphon);
        gl::StepGraphon result = w;
        if (step_k > 0) {
            result = gl::equipartition_average(w, step_k);
        } else if (!step_groups.empty()) {
            gl::Partition p;
            p.groups = parse_int_list(step_groups);
            p.group_count = *std::max_element(p.groups.begin(), p.groups.end()) + 1;
            result = gl::step(w, p);
        } else {
            throw gl::DomainError("step needs --k or --groups");
        }
        nlohmann::json doc = gl::stepgraphon_to_json(result);
        output.deliver(doc, doc.dump(2) + "\n");
    });

    // ---- sample ---------------------------------------------------------------
    auto* cmd_sample = app.add_subcommand("sample", "draw W-random graphs, graph6 output");
    std::string sample_graphon;
    int sample_n = 0, sample_count = 1;
    std::optional<std::uint64_t> sample_seed;
    cmd_sample->add_option("--graphon", sample_graphon, "graphon literal")->required();
    cmd_sample->add_option("--n", sample_n, "vertex count")->required();
    cmd_sample->add_option("--count", sample_count, "number of draws");
    cmd_sample->add_option("--seed", sample_seed, "seed (draw i uses seed + i)");
    cmd_sample->callback([&] {
        gl::StepGraphon w = gl::parse_graphon_spec(sample_graphon);
        std::uint64_t seed = resolve_seed(sample_seed);
        std::string plain = "seed: " + std::to_string(seed) + "\n";
        nlohmann::json graphs = nlohmann::json::array();
        for (int i = 0; i < sample_count; ++i) {
            std::string g6 = gl::graph6_encode(gl::sample(w, sample_n, seed + static_cast<std::uint64_t>(i)));
            plain += g6 + "\n";
            graphs.push_back(g6);
        }
        output.deliver({{"seed", seed}, {"graphs", graphs}}, plain);
    });

    // ---- census ---------------------------------------------------------------
    auto* cmd_census = app.add_subcommand("census", "exact labelled/unlabelled census of a class");
    std::string census_class;
    int census_n = 0;
    cmd_census->add_option("--class", census_class, "class literal")->required();
    cmd_census->add_option("--n", census_n, "order")->required();
    cmd_census->callback([&] {
        gl::CensusRow row = gl::census(gl::parse_class_spec(census_class), census_n);
        nlohmann::json doc = {{"n", row.n},
                              {"labelled", row.labelled},
                              {"unlabelled", row.unlabelled},
                              {"exponent", row.exponent}};
        std::string plain = "n " + std::to_string(row.n) + "\nlabelled " + std::to_string(row.labelled) +
                            "\nunlabelled " + std::to_string(row.unlabelled) + "\nexponent " +
                            fmt12(row.exponent) + "\n";
        output.deliver(doc, plain);
    });

    // ---- growth ---------------------------------------------------------------
    auto* cmd_growth = app.add_subcommand("growth", "census exponents against the predicted limit");
    std::string growth_class, growth_format = "csv";
    int growth_nmax = 6;
    cmd_growth->add_option("--class", growth_class, "class literal")->required();
    cmd_growth->add_option("--n-max", growth_nmax, "largest order");
    cmd_growth->add_option("--format", growth_format, "json, csv or svg");
    cmd_growth->callback([&] {
        gl::ExperimentReport report = gl::run_growth(gl::parse_class_spec(growth_class), growth_nmax);
        deliver_report(report, output.json ? "json" : growth_format, output.out_path);
    });

    // ---- colouring ---------------------------------------------------------------
    auto* cmd_colouring = app.add_subcommand("colouring", "finite-n colouring-number certificate");
    std::string colouring_class;
    int colouring_tmax = gl::kMaxColouringT, colouring_ncheck = 6;
    cmd_colouring->add_option("--class", colouring_class, "class literal")->required();
    cmd_colouring->add_option("--t-max", colouring_tmax, "largest t tried");
    cmd_colouring->add_option("--n-check", colouring_ncheck, "order of the certificate scan");
    cmd_colouring->callback([&] {
        gl::HereditaryClass c = gl::parse_class_spec(colouring_class);
        gl::ColouringNumber r = gl::colouring_number(c, colouring_tmax, colouring_ncheck);
        nlohmann::json doc = {{"r_hat", r.r_hat}, {"s_witness", r.s_witness}, {"at_cap", r.at_cap}};
        std::string plain = "r_hat " + std::to_string(r.r_hat) + "\ns_witness " +
                            std::to_string(r.s_witness) + "\nat_cap " + (r.at_cap ? "true" : "false") + "\n";
        try {
            double prediction = gl::max_entropy_prediction(c, r);
            doc["prediction"] = prediction;
            plain += "prediction " + fmt12(prediction) + "\n";
        } catch (const gl::InconclusiveError&) {
            doc["prediction"] = nullptr;
            plain += "prediction inconclusive\n";
        }
        output.deliver(doc, plain);
    });

    // ---- converge ---------------------------------------------------------------
    auto* cmd_converge = app.add_subcommand("converge", "distance of uniform members to a maximizer");
    std::string converge_class, converge_maximizer, converge_ns = "4,6,8", converge_format = "csv";
    int converge_samples = 100;
    std::optional<std::uint64_t> converge_seed;
    cmd_converge->add_option("--class", converge_class, "class literal")->required();
    cmd_converge->add_option("--maximizer", converge_maximizer, "graphon literal")->required();
    cmd_converge->add_option("--n", converge_ns, "comma-separated orders");
    cmd_converge->add_option("--samples", converge_samples, "draws per order");
    cmd_converge->add_option("--seed", converge_seed, "seed");
    cmd_converge->add_option("--format", converge_format, "json, csv or svg");
    cmd_converge->callback([&] {
        std::uint64_t seed = resolve_seed(converge_seed);
        std::cout << "seed: " << seed << "\n";
        gl::ExperimentReport report =
            gl::run_convergence(gl::parse_class_spec(converge_class),
                                gl::parse_graphon_spec(converge_maximizer),
                                parse_int_list(converge_ns), converge_samples, seed);
        deliver_report(report, output.json ? "json" : converge_format, output.out_path);
    });

    // ---- entropy-rate ---------------------------------------------------------------
    auto* cmd_rate = app.add_subcommand("entropy-rate", "exact H(G(n,W)) against C(n,2) Ent(W)");
    std::string rate_graphon, rate_format = "csv";
    int rate_nmax = 5;
    cmd_rate->add_option("--graphon", rate_graphon, "graphon literal")->required();
    cmd_rate->add_option("--n-max", rate_nmax, "largest order (<= 7)");
    cmd_rate->add_option("--format", rate_format, "json, csv or svg");
    cmd_rate->callback([&] {
        gl::ExperimentReport report =
            gl::run_entropy_rate(gl::parse_graphon_spec(rate_graphon), rate_nmax);
        deliver_report(report, output.json ? "json" : rate_format, output.out_path);
    });

    // ---- balls ---------------------------------------------------------------
    auto* cmd_balls = app.add_subcommand("balls", "graph counts within cut-metric balls");
    std::string balls_graphon, balls_deltas = "0.1,0.2,0.3", balls_format = "csv";
    int balls_n = 4;
    cmd_balls->add_option("--graphon", balls_graphon, "graphon literal")->required();
    cmd_balls->add_option("--n", balls_n, "order (<= 6)");
    cmd_balls->add_option("--delta", balls_deltas, "comma-separated radii");
    cmd_balls->add_option("--format", balls_format, "json, csv or svg");
    cmd_balls->callback([&] {
        gl::ExperimentReport report = gl::run_ball_count(gl::parse_graphon_spec(balls_graphon),
                                                         balls_n, parse_double_list(balls_deltas));
        deliver_report(report, output.json ? "json" : balls_format, output.out_path);
    });

    // ---- regularity ---------------------------------------------------------------
    auto* cmd_reg = app.add_subcommand("regularity", "weak regularity residuals over a corpus");
    std::vector<std::string> reg_subjects, reg_graphs;
    std::string reg_ks = "2,4,8", reg_format = "csv";
    std::optional<std::uint64_t> reg_seed;
    cmd_reg->add_option("--subject", reg_subjects, "graphon literal (repeatable)");
    cmd_reg->add_option("--graph", reg_graphs, "graph literal (repeatable)");
    cmd_reg->add_option("--k", reg_ks, "comma-separated part counts");
    cmd_reg->add_option("--seed", reg_seed, "seed");
    cmd_reg->add_option("--format", reg_format, "json, csv or svg");
    cmd_reg->callback([&] {
        std::vector<gl::RegularitySubject> subjects;
        for (const std::string& s : reg_subjects)
            subjects.push_back({s, gl::parse_graphon_spec(s)});
        for (const std::string& s : reg_graphs)
            subjects.push_back({s, gl::make_from_graph(gl::parse_graph_spec(s))});
        if (subjects.empty()) throw gl::DomainError("regularity needs at least one --subject or --graph");
        std::uint64_t seed = resolve_seed(reg_seed);
        std::cout << "seed: " << seed << "\n";
        gl::ExperimentReport report = gl::run_regularity(subjects, parse_int_list(reg_ks), seed);
        deliver_report(report, output.json ? "json" : reg_format, output.out_path);
    });

    // ---- graphon make ---------------------------------------------------------------
    auto* cmd_graphon = app.add_subcommand("graphon", "graphon documents");
    auto* cmd_make = cmd_graphon->add_subcommand("make", "write a graphon literal as JSON");
    std::string make_spec;
    cmd_make->add_option("spec", make_spec, "graphon literal")->required();
    cmd_make->callback([&] {
        nlohmann::json doc = gl::stepgraphon_to_json(gl::parse_graphon_spec(make_spec));
        output.deliver(doc, doc.dump(2) + "\n");
    });
    cmd_graphon->require_subcommand(1);

    // ---- graph6 ---------------------------------------------------------------
    auto* cmd_g6 = app.add_subcommand("graph6", "encode/decode the graph6 format");
    auto* cmd_decode = cmd_g6->add_subcommand("decode", "print order and edges of a graph6 string");
    std::string decode_text;
    cmd_decode->add_option("text", decode_text, "graph6 string")->required();
    cmd_decode->callback([&] {
        gl::Graph g = gl::graph6_decode(decode_text);
        nlohmann::json edges = nlohmann::json::array();
        std::string plain = "n " + std::to_string(g.order()) + "\n";
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i)
                if (g.adjacent(i, j)) {
                    edges.push_back({i, j});
                    plain += std::to_string(i) + "-" + std::to_string(j) + "\n";
                }
        output.deliver({{"n", g.order()}, {"edges", edges}}, plain);
    });
    auto* cmd_encode = cmd_g6->add_subcommand("encode", "encode --n and --edges as graph6");
    int encode_n = 0;
    std::string encode_edges;
    cmd_encode->add_option("--n", encode_n, "vertex count")->required();
    cmd_encode->add_option("--edges", encode_edges, "comma-separated i-j pairs, e.g. 0-1,1-2");
    cmd_encode->callback([&] {
        gl::Graph g(encode_n);
        std::stringstream ss(encode_edges);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            std::size_t dash = item.find('-');
            if (dash == std::string::npos) throw gl::DomainError("edge '" + item + "' is not i-j");
            g.set_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)), true);
        }
        std::string g6 = gl::graph6_encode(g);
        output.deliver({{"graph6", g6}}, g6 + "\n");
    });
    cmd_g6->require_subcommand(1);

    std::function<void(CLI::App*)> mark = [&](CLI::App* node) {
        for (CLI::App* sub : node->get_subcommands(std::function<bool(CLI::App*)>{})) {
            sub->fallthrough();
            sub->configurable(true);
            mark(sub);
        }
    };
    mark(&app);

    try {
        app.parse(argc, argv);
        if (app.get_subcommands().empty()) {
            std::cout << app.help();
            return 0;
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ConfigError& e) {
        std::string path = app.get_config_ptr() ? app.get_config_ptr()->as<std::string>() : "";
        int line = path.empty() ? 0 : locate_config_line(path, e.what());
        std::cerr << "config error";
        if (line > 0) std::cerr << " at " << path << ":" << line;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n" << app.get_name() << " --help shows usage\n";
        return 2;
    } catch (const gl::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const gl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
