#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/rational.hpp"

namespace graphonlab {

inline constexpr int kMaxExactCutBlocks = 24;      // 2^k subset scan
inline constexpr int kMaxExhaustivePermBlocks = 9; // m! cell permutations
inline constexpr int kMaxExhaustiveAssignOrder = 10;
inline constexpr int kMaxExhaustiveAssignBlocks = 4;

// Signed step function on [0,1]^2; differences of graphons. Entries in [-1,1].
struct Kernel {
    std::vector<Rational> masses;
    std::vector<std::vector<double>> values;

    int block_count() const { return static_cast<int>(masses.size()); }
    void validate() const;

    // u - v on their common refinement.
    static Kernel difference(const StepGraphon& u, const StepGraphon& v);

    // Integral of the kernel over (union of row blocks) x (union of column
    // blocks); subsets given as bit masks.
    double box_integral(std::uint32_t rows, std::uint32_t cols) const;
};

// Cut-norm value with the block subsets attaining it. exact means the value
// is a certified optimum; otherwise it is a feasible lower bound.
struct CutResult {
    double value = 0.0;
    std::vector<int> row_set;
    std::vector<int> col_set;
    bool exact = false;
};

// Certified cut norm for step kernels: the optimum over measurable 0/1
// functions is attained at block unions, so a 2^k scan over row subsets with
// a sign-greedy column choice is exact. k <= 24.
CutResult cut_norm_exact(const Kernel& kern);

// Alternating sign maximization from random starts; always a lower bound.
CutResult cut_norm_heuristic(const Kernel& kern, int restarts, std::uint64_t seed);

// d_box(u, v) = cut norm of the difference kernel; exact, so the common
// refinement must have at most 24 blocks.
double d_box(const StepGraphon& u, const StepGraphon& v);
double d_box_heuristic(const StepGraphon& u, const StepGraphon& v, int restarts, std::uint64_t seed);

// Upper bound on the cut distance at resolution m: both graphons are
// averaged onto the m-interval equipartition and the best cell permutation
// is taken (exhaustive for m <= 9, annealed above).
struct DeltaBound {
    double value = 0.0;
    std::vector<int> permutation;
    bool exhaustive = false;
};
DeltaBound delta_box_upper(const StepGraphon& u, const StepGraphon& v, int m, std::uint64_t seed = 1);

// Upper bound on the cut distance between a graph and a graphon: minimum of
// d_box over assignments of the graph's uniform blocks to the graphon's
// blocks respecting masses within rounding, plus the identity alignment.
// Exhaustive for |g| <= 10 and <= 4 blocks; local search above.
struct GraphAlignment {
    double value = 0.0;
    std::vector<int> assignment;  // empty when the identity alignment won
    bool exhaustive = false;
};
GraphAlignment delta_graph_graphon(const Graph& g, const StepGraphon& w, std::uint64_t seed = 1);

// Greedy discrepancy-splitting regularity partition rebalanced to a
// k-group equipartition. residual = cut norm of subject minus its stepping,
// certified exact when the refined kernel fits the exact cut-norm cap.
struct RegularityResult {
    StepGraphon refined;   // subject with blocks split as needed
    Partition partition;   // groups over refined blocks, k equal-mass groups
    StepGraphon stepped;   // step(refined, partition)
    double residual = 0.0;
    bool residual_exact = false;
};
RegularityResult weak_regularity(const StepGraphon& subject, int k, std::uint64_t seed = 1);
RegularityResult weak_regularity(const Graph& subject, int k, std::uint64_t seed = 1);

// Frieze-Kannan guarantee for a k-part partition.
double weak_regularity_bound(int k);

// Counts of graphs in L_n within delta of w: n_hat uses the unaligned
// distance d_box(W_G, w), n_full the alignment-minimized upper bound, which
// makes it a certified lower bound on the true ball count.
struct BallCounts {
    int n = 0;
    double delta = 0.0;
    std::uint64_t n_hat = 0;
    std::uint64_t n_full = 0;
    bool n_full_is_lower_bound = true;
};
BallCounts count_balls(int n, double delta, const StepGraphon& w);

// Per-graph distances over all of L_n (indexed by edge mask): first the
// unaligned d_box(W_G, w), then the alignment-minimized bound. Lets callers
// threshold several radii from one scan.
std::pair<std::vector<double>, std::vector<double>> ball_distance_table(int n, const StepGraphon& w);

}  // namespace graphonlab
