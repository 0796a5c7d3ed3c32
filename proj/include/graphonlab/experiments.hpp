#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphonlab/classes.hpp"
#include "graphonlab/cutnorm.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

inline constexpr const char* kReportSchema = "graphonlab.report/1";

// Tabular record of one experiment run. Rows are JSON objects with sorted
// keys and every assertion in `summary` is re-derivable from the rows.
// Identical parameters and seed reproduce the same rows byte for byte;
// wall_clock_ms is the one volatile field.
struct ExperimentReport {
    std::string kind;
    nlohmann::json spec;  // parameter echo, including the seed when stochastic
    std::vector<std::string> columns;
    std::vector<nlohmann::json> rows;
    nlohmann::json summary;
    std::uint64_t seed = 0;
    std::string version = kReportSchema;
    long long wall_clock_ms = 0;
};

nlohmann::json report_to_json(const ExperimentReport& report);
std::string report_to_csv(const ExperimentReport& report);
std::string report_to_svg(const ExperimentReport& report);

// format in {json, csv, svg}
void emit(const ExperimentReport& report, const std::string& format, std::ostream& out);
void emit_to_file(const ExperimentReport& report, const std::string& format, const std::string& path);

// ---- scripted experiments -----------------------------------------------

// Census exponents a_n = log2|Q^L_n| / C(n,2) for n = 2..n_max plus the
// predicted limit 1 - 1/r from the colouring certificate when available.
ExperimentReport run_growth(const HereditaryClass& c, int n_max);

// Distance of uniform members to a given maximal-entropy graphon per order.
// Exact sampling for n <= 8, edge-toggle chain above (rows tagged HEURISTIC).
ExperimentReport run_convergence(const HereditaryClass& c, const StepGraphon& maximizer,
                                 const std::vector<int>& orders, int samples, std::uint64_t seed,
                                 std::uint64_t mcmc_steps = 0);

// Exact H(G(n,W)) per n with the certified lower bound C(n,2) Ent(W).
ExperimentReport run_entropy_rate(const StepGraphon& w, int n_max);

// Ball counts per radius with exponents against Ent(W).
ExperimentReport run_ball_count(const StepGraphon& w, int n, const std::vector<double>& deltas);

// Regularity residuals and bounds over a corpus, with the stepped-entropy
// audit per row.
struct RegularitySubject {
    std::string label;
    StepGraphon graphon;
};
ExperimentReport run_regularity(const std::vector<RegularitySubject>& subjects,
                                const std::vector<int>& ks, std::uint64_t seed);

}  // namespace graphonlab
