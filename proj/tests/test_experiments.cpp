#include <doctest.h>

#include <sstream>

#include "graphonlab/experiments.hpp"
#include "graphonlab/literals.hpp"

using namespace graphonlab;

TEST_CASE("growth experiment") {
    ExperimentReport report = run_growth(HereditaryClass::kt_free(3), 6);
    REQUIRE(report.rows.size() == 5);
    CHECK(report.summary["prediction"].get<double>() == 0.5);
    CHECK(report.summary["r_hat"].get<int>() == 2);
    CHECK(report.summary["exponent_decreasing"].get<bool>());
    CHECK(report.summary["final_exponent_at_least_prediction"].get<bool>());
    for (const auto& row : report.rows) CHECK(row["exponent"].get<double>() > 0.5);

    ExperimentReport all = run_growth(HereditaryClass::all(), 5);
    CHECK(all.summary["prediction"].get<double>() == 1.0);
    for (const auto& row : all.rows) CHECK(row["exponent"].get<double>() == 1.0);
}

TEST_CASE("convergence experiment") {
    ExperimentReport report =
        run_convergence(HereditaryClass::kt_free(3), make_wrs(2, 0), {3, 5}, 40, 2024);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0]["sampler"] == "EXACT");
    CHECK(report.summary.contains("medians_non_increasing"));
    CHECK(report.rows[0]["median"].get<double>() >= report.rows[0]["q1"].get<double>());
    CHECK(report.rows[0]["q3"].get<double>() >= report.rows[0]["median"].get<double>());

    // single-order report carries no trend flag
    ExperimentReport single = run_convergence(HereditaryClass::all(), make_constant(0.5), {4}, 10, 7);
    CHECK(single.rows.size() == 1);
    CHECK(!single.summary.contains("medians_non_increasing"));

    // beyond the enumeration cap the sampler switches to the edge-toggle
    // chain and says so
    ExperimentReport chain =
        run_convergence(HereditaryClass::kt_free(3), make_wrs(2, 0), {10}, 5, 31, 500);
    CHECK(chain.rows[0]["sampler"] == "HEURISTIC");
    CHECK(chain.rows[0]["mcmc_steps"].get<std::uint64_t>() == 500);
}

TEST_CASE("entropy-rate experiment") {
    ExperimentReport flat = run_entropy_rate(make_constant(0.5), 5);
    for (const auto& row : flat.rows) CHECK(row["ratio"].get<double>() == 1.0);
    CHECK(flat.summary["lower_bound_holds"].get<bool>());

    ExperimentReport report = run_entropy_rate(make_wrs(2, 0), 5);
    CHECK(report.rows[0]["ratio"].get<double>() ==
          doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
    CHECK(report.summary["lower_bound_holds"].get<bool>());
    // the ratio approaches Ent from above
    double gap3 = report.rows[1]["gap"].get<double>();
    double gap5 = report.rows[3]["gap"].get<double>();
    CHECK(gap5 < gap3);
}

TEST_CASE("ball-count experiment") {
    ExperimentReport report = run_ball_count(make_wrs(2, 0), 4, {0.1, 0.2, 0.3, 1.0});
    REQUIRE(report.rows.size() == 4);
    CHECK(report.summary["hat_le_full"].get<bool>());
    CHECK(report.summary["monotone_in_delta"].get<bool>());
    const auto& last = report.rows.back();
    CHECK(last["n_hat"].get<std::uint64_t>() == 64);
    CHECK(last["exponent_hat"].get<double>() == 1.0);
}

TEST_CASE("regularity experiment") {
    std::vector<RegularitySubject> subjects;
    subjects.push_back({"turan:3", make_turan(3)});
    subjects.push_back({"wrs:3,2", make_wrs(3, 2)});
    subjects.push_back({"g64", make_from_graph(sample(make_constant(0.5), 64, 11))});
    ExperimentReport report = run_regularity(subjects, {2, 4}, 55);
    REQUIRE(report.rows.size() == 6);
    CHECK(report.summary["residual_within_bound"].get<bool>());
    CHECK(report.summary["stepped_entropy_dominates"].get<bool>());
    for (const auto& row : report.rows) {
        CHECK(row["residual"].get<double>() <= row["bound"].get<double>() + 1e-9);
        CHECK(row["entropy_stepped"].get<double>() >= row["entropy_subject"].get<double>() - 1e-12);
    }
    // turan(3) at k = 3 steps to itself
    ExperimentReport zero = run_regularity({{"turan:3", make_turan(3)}}, {3}, 1);
    CHECK(zero.rows[0]["residual"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("report emission") {
    ExperimentReport report = run_entropy_rate(make_wrs(2, 0), 4);

    // identical runs serialize byte-identically once the volatile clock is zeroed
    ExperimentReport again = run_entropy_rate(make_wrs(2, 0), 4);
    report.wall_clock_ms = 0;
    again.wall_clock_ms = 0;
    CHECK(report_to_json(report).dump(2) == report_to_json(again).dump(2));

    // csv carries the rows at printed precision
    std::string csv = report_to_csv(report);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,entropy_bits,ratio,lower_bound_bits,gap");
    std::string first_row;
    std::getline(lines, first_row);
    CHECK(first_row.substr(0, 2) == "2,");
    char expected[32];
    std::snprintf(expected, sizeof expected, "%.12g", binary_entropy(0.25));
    CHECK(first_row.find(expected) != std::string::npos);

    // svg renders a polyline and the asymptote rule
    std::string svg = report_to_svg(report);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("class=\"asymptote\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    // a growth chart carries exactly one asymptote line, at the prediction
    std::string growth_svg = report_to_svg(run_growth(HereditaryClass::bipartite(), 4));
    std::size_t first = growth_svg.find("class=\"asymptote\"");
    CHECK(first != std::string::npos);
    CHECK(growth_svg.find("class=\"asymptote\"", first + 1) == std::string::npos);

    // empty-row report still yields a valid header-only csv and valid svg
    ExperimentReport empty;
    empty.kind = "growth";
    empty.columns = {"n", "exponent"};
    CHECK(report_to_csv(empty) == "n,exponent\n");
    std::string empty_svg = report_to_svg(empty);
    CHECK(empty_svg.find("<svg") != std::string::npos);
    CHECK(empty_svg.find("</svg>") != std::string::npos);

    std::ostringstream sink;
    CHECK_THROWS_AS(emit(report, "yaml", sink), DomainError);
}

TEST_CASE("convergence rows carry their seeds") {
    ExperimentReport report =
        run_convergence(HereditaryClass::bipartite(), make_wrs(2, 0), {4, 5}, 20, 99);
    for (const auto& row : report.rows) CHECK(row.contains("seed"));
    // reruns with the same seed reproduce rows exactly
    ExperimentReport again =
        run_convergence(HereditaryClass::bipartite(), make_wrs(2, 0), {4, 5}, 20, 99);
    CHECK(nlohmann::json(report.rows) == nlohmann::json(again.rows));
}
