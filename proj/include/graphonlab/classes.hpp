#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "graphonlab/graph.hpp"

namespace graphonlab {

inline constexpr int kMaxCensusOrder = 8;
inline constexpr int kMaxCrsOrder = 12;
inline constexpr int kMaxColouringT = 5;
inline constexpr int kMaxColouringCheck = 7;
inline constexpr int kMaxMcmcOrder = 40;

// True iff the vertex set splits into r parts with parts 1..s cliques and
// parts s+1..r independent sets; cross edges unconstrained. Exhaustive
// assignment search with pruning.
bool crs_member(const Graph& g, int r, int s);

// Named hereditary-class membership oracle.
class HereditaryClass {
public:
    enum class Kind { kBipartite, kKtFree, kSplit, kCrs, kAll, kForbidden };

    static HereditaryClass bipartite();
    static HereditaryClass kt_free(int t);
    static HereditaryClass split();
    static HereditaryClass crs(int r, int s);
    static HereditaryClass all();
    static HereditaryClass forbidden(std::vector<Graph> list, std::string name = "");

    const std::string& name() const { return name_; }
    const std::string& description() const { return description_; }
    Kind kind() const { return kind_; }

    bool contains(const Graph& g) const;

private:
    HereditaryClass(Kind kind, int a, int b, std::vector<Graph> list, std::string name,
                    std::string description);

    Kind kind_;
    int param_a_ = 0;  // t for kKtFree, r for kCrs
    int param_b_ = 0;  // s for kCrs
    std::shared_ptr<const std::vector<Graph>> forbidden_;
    std::string name_;
    std::string description_;
};

// One row of an exhaustive census of Q at order n.
struct CensusRow {
    int n = 0;
    std::uint64_t labelled = 0;    // |Q^L_n|
    std::uint64_t unlabelled = 0;  // |Q_n|
    double exponent = 0.0;         // log2(labelled) / C(n,2), 0 when n < 2
};

// Exact counts by full L_n scan with canonical-form deduplication. n <= 8.
CensusRow census(const HereditaryClass& c, int n);

// Rows for n = 2..n_max.
std::vector<CensusRow> growth_series(const HereditaryClass& c, int n_max);

// Finite-n containment certificate for the colouring number: the largest
// t <= t_max such that every graph of order n_check in C(t,u) belongs to
// the class, for some u <= t. at_cap is set when t_max itself passes, in
// which case the true value may be larger.
struct ColouringNumber {
    int r_hat = 0;
    int s_witness = 0;
    bool at_cap = false;
};
ColouringNumber colouring_number(const HereditaryClass& c, int t_max = kMaxColouringT,
                                 int n_check = 6);

// 1 - 1/r_hat. An AT_CAP certificate is inconclusive except for the class
// of all graphs, whose prediction is 1.
double max_entropy_prediction(const HereditaryClass& c, const ColouringNumber& r);

// Uniform over Q^L_n by index sampling into the cached member list. n <= 8.
Graph uniform_exact(const HereditaryClass& c, int n, std::uint64_t seed);

// Metropolis single-edge-toggle chain restricted to members. The proposal
// is symmetric, so the stationary distribution is uniform on the reachable
// component; mixing is not certified.
Graph uniform_mcmc(const HereditaryClass& c, int n, std::uint64_t steps, std::uint64_t seed);

// Edge masks of all members of Q^L_n in ascending order; cached per
// (class, n).
const std::vector<std::uint32_t>& member_masks(const HereditaryClass& c, int n);

// Canonical representatives of the isomorphism classes of L_n, cached.
const std::vector<Graph>& canonical_representatives(int n);

}  // namespace graphonlab
