#include "graphonlab/classes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "graphonlab/parallel.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

// ---- crs membership ------------------------------------------------------

namespace {

// Assign vertices one at a time; clique parts require adjacency to all
// current members, independent parts forbid it. Parts of the same type are
// interchangeable, so a vertex only tries the first empty part of each type.
bool crs_rec(const Graph& g, int r, int s, int v, std::vector<std::uint64_t>& part_members) {
    if (v == g.order()) return true;
    std::uint64_t row = g.row(v);
    bool tried_empty_clique = false, tried_empty_indep = false;
    for (int p = 0; p < r; ++p) {
        std::uint64_t members = part_members[static_cast<std::size_t>(p)];
        if (members == 0) {
            if (p < s) {
                if (tried_empty_clique) continue;
                tried_empty_clique = true;
            } else {
                if (tried_empty_indep) continue;
                tried_empty_indep = true;
            }
        } else {
            bool ok = p < s ? (row & members) == members : (row & members) == 0;
            if (!ok) continue;
        }
        part_members[static_cast<std::size_t>(p)] = members | (1ULL << v);
        if (crs_rec(g, r, s, v + 1, part_members)) return true;
        part_members[static_cast<std::size_t>(p)] = members;
    }
    return false;
}

}  // namespace

bool crs_member(const Graph& g, int r, int s) {
    if (r < 1) throw DomainError("crs needs r >= 1");
    if (s < 0 || s > r) throw DomainError("crs needs 0 <= s <= r");
    if (g.order() > kMaxCrsOrder)
        throw CapacityError("crs membership supports order <= " + std::to_string(kMaxCrsOrder));
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(r), 0);
    return crs_rec(g, r, s, 0, parts);
}

// ---- hereditary classes ---------------------------------------------------

HereditaryClass::HereditaryClass(Kind kind, int a, int b, std::vector<Graph> list, std::string name,
                                 std::string description)
    : kind_(kind),
      param_a_(a),
      param_b_(b),
      forbidden_(std::make_shared<const std::vector<Graph>>(std::move(list))),
      name_(std::move(name)),
      description_(std::move(description)) {}

HereditaryClass HereditaryClass::bipartite() {
    return HereditaryClass(Kind::kBipartite, 0, 0, {}, "bipartite", "graphs with a proper 2-colouring");
}

HereditaryClass HereditaryClass::kt_free(int t) {
    if (t < 2) throw DomainError("kt_free needs t >= 2");
    return HereditaryClass(Kind::kKtFree, t, 0, {}, "kt_free:" + std::to_string(t),
                           "graphs with no clique of order " + std::to_string(t));
}

HereditaryClass HereditaryClass::split() {
    return HereditaryClass(Kind::kSplit, 0, 0, {}, "split",
                           "graphs partitionable into a clique and an independent set");
}

HereditaryClass HereditaryClass::crs(int r, int s) {
    if (r < 1 || s < 0 || s > r) throw DomainError("crs class needs r >= 1 and 0 <= s <= r");
    return HereditaryClass(Kind::kCrs, r, s, {}, "crs:" + std::to_string(r) + "," + std::to_string(s),
                           "graphs partitionable into " + std::to_string(s) + " cliques and " +
                               std::to_string(r - s) + " independent sets");
}

HereditaryClass HereditaryClass::all() {
    return HereditaryClass(Kind::kAll, 0, 0, {}, "all", "all graphs");
}

HereditaryClass HereditaryClass::forbidden(std::vector<Graph> list, std::string name) {
    if (name.empty()) name = "forbidden[" + std::to_string(list.size()) + "]";
    return HereditaryClass(Kind::kForbidden, 0, 0, std::move(list), name,
                           "graphs avoiding the listed induced subgraphs");
}

bool HereditaryClass::contains(const Graph& g) const {
    switch (kind_) {
        case Kind::kBipartite:
            return is_bipartite(g);
        case Kind::kKtFree:
            return !clique_exists(g, param_a_);
        case Kind::kSplit:
            return crs_member(g, 2, 1);
        case Kind::kCrs:
            return crs_member(g, param_a_, param_b_);
        case Kind::kAll:
            return true;
        case Kind::kForbidden:
            return is_free_of(g, *forbidden_);
    }
    return false;
}

// ---- census ----------------------------------------------------------------

namespace {

double census_exponent(int n, std::uint64_t labelled) {
    if (n < 2 || labelled == 0) return 0.0;
    return std::log2(static_cast<double>(labelled)) / (n * (n - 1) / 2.0);
}

}  // namespace

CensusRow census(const HereditaryClass& c, int n) {
    if (n < 1 || n > kMaxCensusOrder)
        throw CapacityError("census supports 1 <= n <= " + std::to_string(kMaxCensusOrder));
    LabelledGraphs range(n);
    std::size_t total = static_cast<std::size_t>(range.size());
    std::size_t workers = worker_count();
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::vector<std::uint64_t>> keys(workers);
    parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::uint64_t local = 0;
        std::vector<std::uint64_t>& local_keys = keys[chunk];
        for (std::size_t idx = begin; idx < end; ++idx) {
            Graph g = Graph::from_edge_mask(n, idx);
            if (!c.contains(g)) continue;
            ++local;
            local_keys.push_back(canonical_key(g));
        }
        counts[chunk] = local;
    });
    CensusRow row;
    row.n = n;
    for (std::uint64_t v : counts) row.labelled += v;
    std::vector<std::uint64_t> merged;
    for (auto& k : keys) {
        merged.insert(merged.end(), k.begin(), k.end());
        k.clear();
        k.shrink_to_fit();
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    row.unlabelled = merged.size();
    row.exponent = census_exponent(n, row.labelled);
    return row;
}

std::vector<CensusRow> growth_series(const HereditaryClass& c, int n_max) {
    if (n_max < 2 || n_max > kMaxCensusOrder)
        throw CapacityError("growth series supports 2 <= n_max <= " + std::to_string(kMaxCensusOrder));
    std::vector<CensusRow> rows;
    for (int n = 2; n <= n_max; ++n) rows.push_back(census(c, n));
    return rows;
}

// ---- colouring number -------------------------------------------------------

namespace {

std::mutex g_reps_mutex;
std::map<int, std::vector<Graph>> g_reps_cache;

}  // namespace

const std::vector<Graph>& canonical_representatives(int n) {
    std::lock_guard<std::mutex> lock(g_reps_mutex);
    auto it = g_reps_cache.find(n);
    if (it != g_reps_cache.end()) return it->second;
    LabelledGraphs range(n);
    std::size_t total = static_cast<std::size_t>(range.size());
    std::size_t workers = worker_count();
    std::vector<std::vector<std::uint64_t>> keys(workers);
    parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx)
            keys[chunk].push_back(canonical_key(Graph::from_edge_mask(n, idx)));
    });
    std::vector<std::uint64_t> merged;
    for (auto& k : keys) merged.insert(merged.end(), k.begin(), k.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<Graph> reps;
    reps.reserve(merged.size());
    for (std::uint64_t key : merged) reps.push_back(Graph::from_edge_mask(n, key));
    return g_reps_cache.emplace(n, std::move(reps)).first->second;
}

ColouringNumber colouring_number(const HereditaryClass& c, int t_max, int n_check) {
    if (t_max < 1 || t_max > kMaxColouringT)
        throw CapacityError("colouring certificate supports t_max <= " + std::to_string(kMaxColouringT));
    if (n_check < 2 || n_check > kMaxColouringCheck)
        throw CapacityError("colouring certificate supports n_check <= " +
                            std::to_string(kMaxColouringCheck));
    const std::vector<Graph>& reps = canonical_representatives(n_check);
    ColouringNumber result;
    for (int t = 1; t <= t_max; ++t) {
        bool t_ok = false;
        for (int u = 0; u <= t && !t_ok; ++u) {
            bool all_in = true;
            for (const Graph& rep : reps) {
                if (crs_member(rep, t, u) && !c.contains(rep)) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                t_ok = true;
                result.r_hat = t;
                result.s_witness = u;
            }
        }
        if (!t_ok) break;
    }
    result.at_cap = result.r_hat == t_max;
    return result;
}

double max_entropy_prediction(const HereditaryClass& c, const ColouringNumber& r) {
    if (r.at_cap) {
        if (c.kind() == HereditaryClass::Kind::kAll) return 1.0;
        throw InconclusiveError("colouring certificate hit its cap; prediction inconclusive");
    }
    if (r.r_hat < 1) throw InconclusiveError("no colouring certificate found");
    return 1.0 - 1.0 / static_cast<double>(r.r_hat);
}

// ---- uniform sampling ---------------------------------------------------------

namespace {

std::mutex g_members_mutex;
std::map<std::pair<std::string, int>, std::vector<std::uint32_t>> g_members_cache;

}  // namespace

const std::vector<std::uint32_t>& member_masks(const HereditaryClass& c, int n) {
    if (n < 1 || n > kMaxCensusOrder)
        throw CapacityError("member enumeration supports n <= " + std::to_string(kMaxCensusOrder));
    std::lock_guard<std::mutex> lock(g_members_mutex);
    auto key = std::make_pair(c.name(), n);
    auto it = g_members_cache.find(key);
    if (it != g_members_cache.end()) return it->second;
    LabelledGraphs range(n);
    std::size_t total = static_cast<std::size_t>(range.size());
    std::size_t workers = worker_count();
    std::vector<std::vector<std::uint32_t>> partial(workers);
    parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx)
            if (c.contains(Graph::from_edge_mask(n, idx)))
                partial[chunk].push_back(static_cast<std::uint32_t>(idx));
    });
    std::vector<std::uint32_t> members;
    for (auto& p : partial) members.insert(members.end(), p.begin(), p.end());
    return g_members_cache.emplace(std::move(key), std::move(members)).first->second;
}

Graph uniform_exact(const HereditaryClass& c, int n, std::uint64_t seed) {
    const std::vector<std::uint32_t>& members = member_masks(c, n);
    if (members.empty()) throw EmptyClassError("class " + c.name() + " has no members at order " +
                                               std::to_string(n));
    CounterRng rng(seed);
    std::uint64_t idx = rng.next_below(members.size());
    return Graph::from_edge_mask(n, members[static_cast<std::size_t>(idx)]);
}

Graph uniform_mcmc(const HereditaryClass& c, int n, std::uint64_t steps, std::uint64_t seed) {
    if (n < 1 || n > kMaxMcmcOrder)
        throw CapacityError("edge-toggle chain supports n <= " + std::to_string(kMaxMcmcOrder));
    Graph g = empty_graph(n);
    if (!c.contains(g))
        throw EmptyClassError("class " + c.name() + " does not contain the empty graph; no chain start");
    if (n < 2) return g;
    CounterRng rng(seed);
    std::uint64_t npairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::uint64_t s = 0; s < steps; ++s) {
        std::uint64_t pick = rng.next_below(npairs);
        // invert pair_index
        int j = 1;
        while (static_cast<std::uint64_t>(j + 1) * j / 2 <= pick) ++j;
        int i = static_cast<int>(pick - static_cast<std::uint64_t>(j) * (j - 1) / 2);
        bool had = g.adjacent(i, j);
        g.set_edge(i, j, !had);
        if (!c.contains(g)) g.set_edge(i, j, had);
    }
    return g;
}

}  // namespace graphonlab
