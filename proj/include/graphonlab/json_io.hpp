#pragma once

#include <string>

#include <json.hpp>

#include "graphonlab/cutnorm.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

inline constexpr const char* kStepGraphonSchema = "graphonlab.stepgraphon/1";
inline constexpr const char* kKernelSchema = "graphonlab.kernel/1";

// {"schema", "measures": ["p/q", ...], "values": [[decimal strings]]};
// round-trip exact (masses rational, values printed with 17 significant digits).
nlohmann::json stepgraphon_to_json(const StepGraphon& w);
StepGraphon stepgraphon_from_json(const nlohmann::json& doc);

nlohmann::json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const nlohmann::json& doc);

nlohmann::json cut_result_to_json(const CutResult& r);
nlohmann::json ball_counts_to_json(const BallCounts& b);

StepGraphon load_stepgraphon(const std::string& path);
Kernel load_kernel(const std::string& path);
void save_json(const nlohmann::json& doc, const std::string& path);

// 17-significant-digit decimal, parses back to the same double.
std::string double_repr(double v);
double parse_double(const std::string& text);

}  // namespace graphonlab
