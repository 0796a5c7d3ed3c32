#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphonlab/errors.hpp"

namespace graphonlab {

inline constexpr int kMaxVertices = 64;        // one machine word per adjacency row
inline constexpr int kMaxEnumVertices = 8;     // full L_n enumeration cap
inline constexpr int kMaxCanonVertices = 11;   // canonical edge key fits in 64 bits
inline constexpr int kMaxDensityPattern = 10;  // exact 64-bit embedding counts

// Index of the unordered pair {i, j}, i < j, in column-major upper-triangle
// order: (0,1), (0,2), (1,2), (0,3), ... This is also the graph6 bit order
// and the edge-mask order used by enumerate_labelled.
constexpr int pair_index(int i, int j) {
    return j * (j - 1) / 2 + i;
}

// Labelled simple graph on 1..64 vertices. Adjacency is a symmetric bit
// relation with empty diagonal; rows are 64-bit words. Immutable use after
// construction is safe across threads.
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int order() const { return n_; }
    bool adjacent(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1ULL; }
    std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    void set_edge(int i, int j, bool present);
    void add_edge(int i, int j) { set_edge(i, j, true); }

    int degree(int i) const { return __builtin_popcountll(rows_[static_cast<std::size_t>(i)]); }
    int edge_count() const;
    std::uint64_t edge_mask() const;  // requires order() <= kMaxCanonVertices

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.rows_[static_cast<std::size_t>(i)] != b.rows_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

private:
    void check_vertex(int v) const;

    int n_;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

// ---- builders ----------------------------------------------------------

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph relabel(const Graph& g, std::span<const int> perm);  // new[p] ~ new[q] iff old[perm[p]] ~ old[perm[q]]

// ---- enumeration -------------------------------------------------------

// L_n in strictly increasing edge-mask order. Random access by index makes
// the range splittable for data-parallel consumption.
class LabelledGraphs {
public:
    explicit LabelledGraphs(int n);
    std::uint64_t size() const { return count_; }
    Graph at(std::uint64_t index) const;
    int order() const { return n_; }

    class iterator {
    public:
        iterator(const LabelledGraphs* range, std::uint64_t i) : range_(range), i_(i) {}
        Graph operator*() const { return range_->at(i_); }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }

    private:
        const LabelledGraphs* range_;
        std::uint64_t i_;
    };
    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, count_); }

private:
    int n_;
    std::uint64_t count_;
};

inline LabelledGraphs enumerate_labelled(int n) { return LabelledGraphs(n); }

// ---- canonical forms ---------------------------------------------------

// Canonical labelling by colour refinement plus prefix-pruned backtracking
// over class-respecting permutations; exact, capped at 11 vertices.
Graph canonicalize(const Graph& g);
std::uint64_t canonical_key(const Graph& g);  // edge mask of the canonical form
bool are_isomorphic(const Graph& a, const Graph& b);

// ---- densities ---------------------------------------------------------

// Exact embedding count as an integer fraction; value() is the density.
struct DensityCount {
    std::uint64_t hits = 0;
    std::uint64_t maps = 0;
    double value() const { return maps == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(maps); }
};

// p(H;G): fraction of injective vertex maps that induce exactly H.
DensityCount induced_count(const Graph& pattern, const Graph& host);
double induced_density(const Graph& pattern, const Graph& host);

// t(H;G): fraction of all vertex maps that preserve adjacency.
DensityCount hom_count(const Graph& pattern, const Graph& host);
double hom_density(const Graph& pattern, const Graph& host);

// ---- structure tests ---------------------------------------------------

bool clique_exists(const Graph& g, int size);
bool is_bipartite(const Graph& g);

// True iff no induced subgraph of g is isomorphic to a forbidden graph.
// Forbidden graphs larger than g are vacuously absent.
bool is_free_of(const Graph& g, std::span<const Graph> forbidden);

// ---- graph6 ------------------------------------------------------------

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, std::span<const Graph> graphs);

}  // namespace graphonlab
