#include "graphonlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "graphonlab/rng.hpp"

namespace graphonlab {

namespace {

double choose2(int n) { return n * (n - 1) / 2.0; }

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(seed ^ mix64(a * 1000003ULL + b));
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

std::string format_cell(const nlohmann::json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
}

// lower/upper quartiles and median by order statistics on a sorted copy
struct Quartiles {
    double q1 = 0.0, median = 0.0, q3 = 0.0;
};

Quartiles quartiles(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t m = values.size();
    auto at = [&](double q) {
        double pos = q * static_cast<double>(m - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = lo + 1 < m ? lo + 1 : lo;
        double frac = pos - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    return Quartiles{at(0.25), at(0.5), at(0.75)};
}

}  // namespace

// ---- serialization --------------------------------------------------------

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json doc;
    doc["schema"] = report.version;
    doc["kind"] = report.kind;
    doc["spec"] = report.spec;
    doc["columns"] = report.columns;
    doc["rows"] = report.rows;
    doc["summary"] = report.summary;
    doc["seed"] = report.seed;
    doc["wall_clock_ms"] = report.wall_clock_ms;
    return doc;
}

std::string report_to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out << ",";
        out << report.columns[i];
    }
    out << "\n";
    for (const nlohmann::json& row : report.rows) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
            if (i) out << ",";
            if (row.contains(report.columns[i])) out << format_cell(row[report.columns[i]]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string report_to_svg(const ExperimentReport& report) {
    // x = first column, y = series named in summary.plot_y (default: second column)
    const double width = 640, height = 400, margin = 56;
    std::string xcol = report.columns.empty() ? "" : report.columns.front();
    std::string ycol = report.summary.contains("plot_y") ? report.summary["plot_y"].get<std::string>()
                       : report.columns.size() > 1      ? report.columns[1]
                                                        : "";
    std::vector<std::pair<double, double>> points;
    for (const nlohmann::json& row : report.rows)
        if (row.contains(xcol) && row.contains(ycol) && row[xcol].is_number() && row[ycol].is_number())
            points.emplace_back(row[xcol].get<double>(), row[ycol].get<double>());

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!points.empty()) {
        xmin = xmax = points.front().first;
        ymin = ymax = points.front().second;
        for (auto& [x, y] : points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    bool has_asymptote = report.summary.contains("prediction") && report.summary["prediction"].is_number();
    double asymptote = has_asymptote ? report.summary["prediction"].get<double>() : 0.0;
    if (has_asymptote) {
        ymin = std::min(ymin, asymptote);
        ymax = std::max(ymax, asymptote);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    svg << "<line class=\"axis\" x1=\"" << svg_num(margin) << "\" y1=\"" << svg_num(height - margin)
        << "\" x2=\"" << svg_num(width - margin) << "\" y2=\"" << svg_num(height - margin)
        << "\" stroke=\"black\"/>\n";
    svg << "<line class=\"axis\" x1=\"" << svg_num(margin) << "\" y1=\"" << svg_num(margin)
        << "\" x2=\"" << svg_num(margin) << "\" y2=\"" << svg_num(height - margin)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << svg_num(width / 2) << "\" y=\"" << svg_num(height - margin / 4)
        << "\" text-anchor=\"middle\">" << xcol << "</text>\n";
    svg << "<text x=\"" << svg_num(margin / 3) << "\" y=\"" << svg_num(height / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << svg_num(margin / 3) << " "
        << svg_num(height / 2) << ")\">" << ycol << "</text>\n";
    if (has_asymptote) {
        svg << "<line class=\"asymptote\" x1=\"" << svg_num(margin) << "\" y1=\""
            << svg_num(py(asymptote)) << "\" x2=\"" << svg_num(width - margin) << "\" y2=\""
            << svg_num(py(asymptote)) << "\" stroke=\"gray\" stroke-dasharray=\"6 3\"/>\n";
    }
    if (!points.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) svg << " ";
            svg << svg_num(px(points[i].first)) << "," << svg_num(py(points[i].second));
        }
        svg << "\"/>\n";
        for (auto& [x, y] : points)
            svg << "<circle cx=\"" << svg_num(px(x)) << "\" cy=\"" << svg_num(py(y))
                << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit(const ExperimentReport& report, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << report_to_json(report).dump(2) << "\n";
    else if (format == "csv")
        out << report_to_csv(report);
    else if (format == "svg")
        out << report_to_svg(report);
    else
        throw DomainError("unknown report format '" + format + "' (use json, csv or svg)");
}

void emit_to_file(const ExperimentReport& report, const std::string& format, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    emit(report, format, out);
    if (!out) throw IoError("write failed for " + path);
}

// ---- experiments -----------------------------------------------------------

ExperimentReport run_growth(const HereditaryClass& c, int n_max) {
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.kind = "growth";
    report.spec = {{"class", c.name()}, {"n_max", n_max}};
    report.columns = {"n", "labelled", "unlabelled", "exponent"};

    std::vector<CensusRow> rows = growth_series(c, n_max);
    for (const CensusRow& r : rows)
        report.rows.push_back(
            {{"n", r.n}, {"labelled", r.labelled}, {"unlabelled", r.unlabelled}, {"exponent", r.exponent}});

    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].exponent > rows[i - 1].exponent) decreasing = false;
    report.summary["exponent_decreasing"] = decreasing;
    report.summary["plot_y"] = "exponent";

    try {
        ColouringNumber cn = colouring_number(c);
        report.summary["r_hat"] = cn.r_hat;
        report.summary["s_witness"] = cn.s_witness;
        report.summary["at_cap"] = cn.at_cap;
        double prediction = max_entropy_prediction(c, cn);
        report.summary["prediction"] = prediction;
        report.summary["final_exponent_at_least_prediction"] =
            !rows.empty() && rows.back().exponent >= prediction;
    } catch (const InconclusiveError&) {
        report.summary["prediction"] = nullptr;
    }

    report.wall_clock_ms = elapsed_ms(start);
    return report;
}

ExperimentReport run_convergence(const HereditaryClass& c, const StepGraphon& maximizer,
                                 const std::vector<int>& orders, int samples, std::uint64_t seed,
                                 std::uint64_t mcmc_steps) {
    if (samples < 1) throw DomainError("convergence runs need at least one sample");
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.kind = "convergence";
    report.seed = seed;
    report.spec = {{"class", c.name()}, {"orders", orders}, {"samples", samples}, {"seed", seed}};
    report.columns = {"n", "median", "q1", "q3", "sampler", "seed"};

    for (int n : orders) {
        bool exact = n <= kMaxCensusOrder;
        std::uint64_t steps = mcmc_steps != 0 ? mcmc_steps
                                              : 10ULL * static_cast<std::uint64_t>(n) * (n - 1) / 2;
        std::uint64_t row_seed = sub_seed(seed, static_cast<std::uint64_t>(n), 0);
        std::vector<double> distances;
        distances.reserve(static_cast<std::size_t>(samples));
        for (int i = 0; i < samples; ++i) {
            std::uint64_t draw_seed = sub_seed(row_seed, 1, static_cast<std::uint64_t>(i));
            Graph g = exact ? uniform_exact(c, n, draw_seed)
                            : uniform_mcmc(c, n, steps, draw_seed);
            distances.push_back(delta_graph_graphon(g, maximizer).value);
        }
        Quartiles q = quartiles(distances);
        nlohmann::json row = {{"n", n},   {"median", q.median},           {"q1", q.q1},
                              {"q3", q.q3}, {"sampler", exact ? "EXACT" : "HEURISTIC"},
                              {"seed", row_seed}};
        if (!exact) row["mcmc_steps"] = steps;
        report.rows.push_back(std::move(row));
    }

    if (report.rows.size() >= 2) {
        bool non_increasing = true;
        for (std::size_t i = 1; i < report.rows.size(); ++i)
            if (report.rows[i]["median"].get<double>() >
                report.rows[i - 1]["median"].get<double>())
                non_increasing = false;
        report.summary["medians_non_increasing"] = non_increasing;
    }
    report.summary["plot_y"] = "median";
    report.wall_clock_ms = elapsed_ms(start);
    return report;
}

ExperimentReport run_entropy_rate(const StepGraphon& w, int n_max) {
    if (n_max < 2 || n_max > kMaxExactEntropyOrder)
        throw CapacityError("entropy-rate runs support 2 <= n_max <= " +
                            std::to_string(kMaxExactEntropyOrder));
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.kind = "entropy_rate";
    report.spec = {{"n_max", n_max}};
    report.columns = {"n", "entropy_bits", "ratio", "lower_bound_bits", "gap"};

    double ent = entropy(w);
    bool lower_bound_ok = true;
    for (int n = 2; n <= n_max; ++n) {
        double bits = exact_rg_entropy(w, n);
        double ratio = bits / choose2(n);
        double lower = choose2(n) * ent;
        if (bits < lower - 1e-9) lower_bound_ok = false;
        report.rows.push_back({{"n", n},
                               {"entropy_bits", bits},
                               {"ratio", ratio},
                               {"lower_bound_bits", lower},
                               {"gap", std::abs(ratio - ent)}});
    }
    report.summary["graphon_entropy"] = ent;
    report.summary["prediction"] = ent;
    report.summary["lower_bound_holds"] = lower_bound_ok;
    report.summary["plot_y"] = "ratio";
    report.wall_clock_ms = elapsed_ms(start);
    return report;
}

ExperimentReport run_ball_count(const StepGraphon& w, int n, const std::vector<double>& deltas) {
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.kind = "ball_count";
    report.spec = {{"n", n}, {"deltas", deltas}};
    report.columns = {"delta", "n_hat", "n_full", "exponent_hat", "exponent_full"};

    auto [hat, full] = ball_distance_table(n, w);
    bool hnn_ok = true;
    std::uint64_t prev_hat = 0, prev_full = 0;
    bool monotone = true;
    std::vector<double> sorted_deltas = deltas;
    std::sort(sorted_deltas.begin(), sorted_deltas.end());
    for (double delta : sorted_deltas) {
        std::uint64_t n_hat = 0, n_full = 0;
        for (std::size_t i = 0; i < hat.size(); ++i) {
            if (hat[i] <= delta + 1e-12) ++n_hat;
            if (full[i] <= delta + 1e-12) ++n_full;
        }
        if (n_hat > n_full) hnn_ok = false;
        if (n_hat < prev_hat || n_full < prev_full) monotone = false;
        prev_hat = n_hat;
        prev_full = n_full;
        double c2 = choose2(n);
        report.rows.push_back({{"delta", delta},
                               {"n_hat", n_hat},
                               {"n_full", n_full},
                               {"exponent_hat", n_hat == 0 ? 0.0 : std::log2(static_cast<double>(n_hat)) / c2},
                               {"exponent_full",
                                n_full == 0 ? 0.0 : std::log2(static_cast<double>(n_full)) / c2}});
    }
    report.summary["graphon_entropy"] = entropy(w);
    report.summary["prediction"] = entropy(w);
    report.summary["hat_le_full"] = hnn_ok;
    report.summary["monotone_in_delta"] = monotone;
    report.summary["n_full_is_lower_bound"] = true;
    report.summary["plot_y"] = "exponent_full";
    report.wall_clock_ms = elapsed_ms(start);
    return report;
}

ExperimentReport run_regularity(const std::vector<RegularitySubject>& subjects,
                                const std::vector<int>& ks, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.kind = "regularity";
    report.seed = seed;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& s : subjects) labels.push_back(s.label);
    report.spec = {{"subjects", labels}, {"ks", ks}, {"seed", seed}};
    report.columns = {"subject", "k",         "residual",      "bound",
                      "residual_exact", "entropy_subject", "entropy_stepped", "seed"};

    bool bound_ok = true, entropy_ok = true;
    for (std::size_t s = 0; s < subjects.size(); ++s) {
        double ent_subject = entropy(subjects[s].graphon);
        for (int k : ks) {
            std::uint64_t run_seed = sub_seed(seed, s, static_cast<std::uint64_t>(k));
            RegularityResult reg = weak_regularity(subjects[s].graphon, k, run_seed);
            double bound = weak_regularity_bound(k);
            double ent_stepped = entropy(reg.stepped);
            if (reg.residual > bound + 1e-9) bound_ok = false;
            if (ent_stepped < ent_subject - 1e-12) entropy_ok = false;
            report.rows.push_back({{"subject", subjects[s].label},
                                   {"k", k},
                                   {"residual", reg.residual},
                                   {"bound", bound},
                                   {"residual_exact", reg.residual_exact},
                                   {"entropy_subject", ent_subject},
                                   {"entropy_stepped", ent_stepped},
                                   {"seed", run_seed}});
        }
    }
    report.summary["residual_within_bound"] = bound_ok;
    report.summary["stepped_entropy_dominates"] = entropy_ok;
    report.summary["plot_y"] = "residual";
    report.wall_clock_ms = elapsed_ms(start);
    return report;
}

}  // namespace graphonlab
