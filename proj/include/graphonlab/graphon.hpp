#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphonlab/graph.hpp"
#include "graphonlab/rational.hpp"

namespace graphonlab {

// Values this close to 0 or 1 count as deterministic when deciding
// randomness support and clique-freeness; absorbs float dust.
inline constexpr double kSupportEps = 1e-15;

inline constexpr int kMaxInducedPattern = 12;   // p(H;W) cost is k^|H|
inline constexpr int kMaxExactEntropyOrder = 7; // exact H(G(n,W)) enumerates L_n

// Step function on [0,1]^2: finite block partition with exact rational
// masses and a symmetric value matrix in [0,1]. Immutable after
// construction; safe to share across threads.
class StepGraphon {
public:
    StepGraphon(std::vector<Rational> masses, std::vector<std::vector<double>> values);

    int block_count() const { return static_cast<int>(masses_.size()); }
    const Rational& mass(int i) const { return masses_[static_cast<std::size_t>(i)]; }
    double mass_d(int i) const { return masses_[static_cast<std::size_t>(i)].to_double(); }
    double value(int i, int j) const {
        return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<Rational>& masses() const { return masses_; }
    const std::vector<std::vector<double>>& values() const { return values_; }

    friend bool operator==(const StepGraphon& a, const StepGraphon& b) {
        return a.masses_ == b.masses_ && a.values_ == b.values_;
    }

private:
    std::vector<Rational> masses_;
    std::vector<std::vector<double>> values_;
};

// Grouping of a graphon's blocks; group masses are the sums of member
// masses. group_count groups, groups[i] in [0, group_count).
struct Partition {
    std::vector<int> groups;
    int group_count = 0;

    static Partition identity(int k);
    void validate(int block_count) const;
};

// ---- constructors ------------------------------------------------------

StepGraphon make_constant(double p);
StepGraphon make_from_graph(const Graph& g);
// Balanced complete r-partite limit: r uniform blocks, 1 off-diagonal, 0 diagonal.
StepGraphon make_turan(int r);
// r uniform blocks, 1/2 off-diagonal, diagonal 1 for the first s blocks else 0.
StepGraphon make_wrs(int r, int s);
// Splits the first block of make_wrs(4,4) into masses a and 1/4-a with value 0
// across the split; a = 0 collapses back to four blocks. Requires 0 <= a <= 1/8.
StepGraphon make_string_a(const Rational& a);

// ---- entropy and densities ---------------------------------------------

// h(x) = -x log2 x - (1-x) log2 (1-x); h(0) = h(1) = 0 by continuity.
double binary_entropy(double x);
// h(min(x, 1/2)) for x >= 0; nondecreasing, equal to 1 from 1/2 on.
double binary_entropy_clipped(double x);

double entropy(const StepGraphon& w);       // sum mu_i mu_j h(w_ij)
double edge_density(const StepGraphon& w);  // sum mu_i mu_j w_ij

// ---- stepping ----------------------------------------------------------

// Averages w over the cells of the grouping; masses follow the partition.
StepGraphon step(const StepGraphon& w, const Partition& p);

// Averages w over the k-interval equipartition. Blocks crossing interval
// boundaries are split first, which is lossless for step functions.
StepGraphon equipartition_average(const StepGraphon& w, int k);

// Splits blocks at the given cumulative-mass cut points (exact rationals).
StepGraphon refine_at(const StepGraphon& w, const std::vector<Rational>& cuts);

// Re-expresses both graphons on the overlay of their interval partitions.
// Values are unchanged as functions on [0,1]^2.
std::pair<StepGraphon, StepGraphon> common_refine(const StepGraphon& u, const StepGraphon& v);

// ---- randomness and freeness -------------------------------------------

// Indicator of 0 < w < 1 on the same blocks.
StepGraphon randomness_support(const StepGraphon& w);

// Exact p(H;W) by summation over block assignments.
double p_induced(const Graph& pattern, const StepGraphon& w);

// True iff no positive-probability clique of the given order exists in the
// support pattern (within-block pairs use the diagonal value). r = 1 is
// always false: no graphon is K_1-free.
bool is_kr_free(const StepGraphon& w, int r);

// ---- random graphs -----------------------------------------------------

// G(n,W): block labels from the mass distribution, then independent edges
// with the block-pair probabilities. Counter-based draws make the result a
// pure function of (w, n, seed).
Graph sample(const StepGraphon& w, int n, std::uint64_t seed);

// Exact entropy of G(n,W) in bits, by full enumeration of L_n. n <= 7.
double exact_rg_entropy(const StepGraphon& w, int n);

}  // namespace graphonlab
