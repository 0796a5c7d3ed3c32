#pragma once

#include <string>

#include "graphonlab/classes.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

// Graph literals: K5, C4, P3, E2, K3,3 (complete bipartite), g6:<string>,
// @file.g6 (first graph in the file).
Graph parse_graph_spec(const std::string& spec);

// Graphon literals: constant:p, turan:r, wrs:r,s, string_a:a (a rational),
// from_graph:<graph spec>, @file.json.
StepGraphon parse_graphon_spec(const std::string& spec);

// Class literals: bipartite, split, all, kt_free:t, crs:r,s,
// forbidden:@file.g6 (newline-delimited graph6 list).
HereditaryClass parse_class_spec(const std::string& spec);

}  // namespace graphonlab
