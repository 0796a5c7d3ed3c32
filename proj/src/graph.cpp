#include "graphonlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <string>

namespace graphonlab {

namespace {

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

std::uint64_t falling_factorial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
    return r;
}

std::uint64_t power_u64(int base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
    return r;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw CapacityError("graph order must be in [1, 64], got " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::set_edge(int i, int j, bool present) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw DomainError("self-loops are not representable");
    std::uint64_t bi = 1ULL << i, bj = 1ULL << j;
    if (present) {
        rows_[static_cast<std::size_t>(i)] |= bj;
        rows_[static_cast<std::size_t>(j)] |= bi;
    } else {
        rows_[static_cast<std::size_t>(i)] &= ~bj;
        rows_[static_cast<std::size_t>(j)] &= ~bi;
    }
}

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > kMaxCanonVertices)
        throw CapacityError("edge mask needs order <= " + std::to_string(kMaxCanonVertices));
    std::uint64_t mask = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (adjacent(i, j)) mask |= 1ULL << pair_index(i, j);
    return mask;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    if (n > kMaxCanonVertices)
        throw CapacityError("edge mask needs order <= " + std::to_string(kMaxCanonVertices));
    Graph g(n);
    int npairs = n * (n - 1) / 2;
    if (npairs < 64 && (mask >> npairs) != 0)
        throw DomainError("edge mask has bits beyond the last vertex pair");
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1ULL) g.set_edge(i, j, true);
    return g;
}

// ---- builders ----------------------------------------------------------

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.set_edge(i, j, true);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.set_edge(n - 1, 0, true);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) g.set_edge(i, j, true);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (!g.adjacent(i, j)) c.set_edge(i, j, true);
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int j = 1; j < a.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (a.adjacent(i, j)) g.set_edge(i, j, true);
    int off = a.order();
    for (int j = 1; j < b.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (b.adjacent(i, j)) g.set_edge(off + i, off + j, true);
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    int k = static_cast<int>(vertices.size());
    Graph s(k);
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            if (g.adjacent(vertices[static_cast<std::size_t>(p)], vertices[static_cast<std::size_t>(q)]))
                s.set_edge(p, q, true);
    return s;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw DomainError("permutation length must equal graph order");
    Graph r(g.order());
    for (int p = 0; p < g.order(); ++p)
        for (int q = p + 1; q < g.order(); ++q)
            if (g.adjacent(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)]))
                r.set_edge(p, q, true);
    return r;
}

// ---- enumeration -------------------------------------------------------

LabelledGraphs::LabelledGraphs(int n) : n_(n) {
    if (n < 1 || n > kMaxEnumVertices)
        throw CapacityError("labelled enumeration supports 1 <= n <= " + std::to_string(kMaxEnumVertices));
    count_ = 1ULL << (n * (n - 1) / 2);
}

Graph LabelledGraphs::at(std::uint64_t index) const {
    if (index >= count_) throw DomainError("enumeration index out of range");
    return Graph::from_edge_mask(n_, index);
}

// ---- canonical forms ---------------------------------------------------

namespace {

// Iterated colour refinement. Colours are dense ids assigned in sorted
// signature order, so they are invariant under isomorphism.
void refine_colours(const Graph& g, int* colour) {
    int n = g.order();
    std::uint64_t sig[kMaxCanonVertices];
    std::uint64_t sorted[kMaxCanonVertices];
    for (int v = 0; v < n; ++v) colour[v] = 0;
    int ncolours = 1;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t counts = 0;  // 4 bits per neighbour colour; n <= 11 keeps counts < 16
            std::uint64_t nb = g.row(v);
            while (nb) {
                int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                counts += 1ULL << (4 * colour[u]);
            }
            sig[v] = (static_cast<std::uint64_t>(colour[v]) << 48) | counts;
        }
        for (int v = 0; v < n; ++v) sorted[v] = sig[v];
        std::sort(sorted, sorted + n);
        int distinct = static_cast<int>(std::unique(sorted, sorted + n) - sorted);
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted, sorted + distinct, sig[v]) - sorted);
        if (distinct == ncolours) break;
        ncolours = distinct;
    }
}

// Searches class-respecting labellings for the lexicographically least
// edge bit string (column-major pair order, earlier pairs most
// significant). Prefix comparisons prune entire subtrees.
struct CanonSearch {
    const Graph* g;
    int n;
    int pos_class[kMaxCanonVertices];             // class id hosting each position
    std::uint64_t class_members[kMaxCanonVertices];
    int perm[kMaxCanonVertices];
    int best_perm[kMaxCanonVertices];
    std::uint64_t best_key;

    static std::uint64_t key_bit(int pair_idx) { return 1ULL << (63 - pair_idx); }

    void run() {
        best_key = ~0ULL;
        dfs(0, 0ULL, 0ULL);
    }

    void dfs(int p, std::uint64_t used, std::uint64_t partial) {
        if (p == n) {
            if (partial < best_key) {
                best_key = partial;
                std::copy(perm, perm + n, best_perm);
            }
            return;
        }
        int base = p * (p - 1) / 2;
        std::uint64_t prefix_mask = (base + p) == 0 ? 0 : ~0ULL << (64 - (base + p));
        std::uint64_t cands = class_members[pos_class[p]] & ~used;
        while (cands) {
            int v = __builtin_ctzll(cands);
            cands &= cands - 1;
            std::uint64_t col_bits = 0;
            std::uint64_t vrow = g->row(v);
            for (int q = 0; q < p; ++q)
                if ((vrow >> perm[q]) & 1ULL) col_bits |= key_bit(base + q);
            std::uint64_t next_partial = partial | col_bits;
            if ((next_partial & prefix_mask) > (best_key & prefix_mask)) continue;
            perm[p] = v;
            dfs(p + 1, used | (1ULL << v), next_partial);
        }
    }
};

}  // namespace

Graph canonicalize(const Graph& g) {
    int n = g.order();
    if (n > kMaxCanonVertices)
        throw CapacityError("canonical form supports order <= " + std::to_string(kMaxCanonVertices));
    int colour[kMaxCanonVertices];
    refine_colours(g, colour);

    CanonSearch search;
    search.g = &g;
    search.n = n;
    for (int c = 0; c < n; ++c) search.class_members[c] = 0;
    for (int v = 0; v < n; ++v) search.class_members[colour[v]] |= 1ULL << v;
    int pos = 0;
    for (int c = 0; c < n; ++c) {
        std::uint64_t m = search.class_members[c];
        for (int i = 0; i < __builtin_popcountll(m); ++i) search.pos_class[pos++] = c;
    }
    search.run();
    return relabel(g, std::span<const int>(search.best_perm, static_cast<std::size_t>(n)));
}

std::uint64_t canonical_key(const Graph& g) {
    return canonicalize(g).edge_mask();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

// ---- densities ---------------------------------------------------------

namespace {

struct EmbedCounter {
    const Graph* pattern;
    const Graph* host;
    int k, n;
    int chosen[kMaxDensityPattern];
    std::uint64_t hits = 0;

    // Exact induced embeddings: adjacency must match in both directions.
    void induced(int p, std::uint64_t used) {
        if (p == k) {
            ++hits;
            return;
        }
        std::uint64_t cand = ~used & full_mask(n);
        for (int q = 0; q < p; ++q) {
            std::uint64_t r = host->row(chosen[q]);
            cand &= pattern->adjacent(q, p) ? r : ~r;
        }
        while (cand) {
            chosen[p] = __builtin_ctzll(cand);
            cand &= cand - 1;
            induced(p + 1, used | (1ULL << chosen[p]));
        }
    }

    // Homomorphisms: only pattern edges constrain, repeats allowed.
    void hom(int p) {
        if (p == k) {
            ++hits;
            return;
        }
        std::uint64_t cand = full_mask(n);
        for (int q = 0; q < p; ++q)
            if (pattern->adjacent(q, p)) cand &= host->row(chosen[q]);
        while (cand) {
            chosen[p] = __builtin_ctzll(cand);
            cand &= cand - 1;
            hom(p + 1);
        }
    }
};

}  // namespace

DensityCount induced_count(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order())
        throw SizeError("pattern has more vertices than host");
    if (pattern.order() > kMaxDensityPattern)
        throw CapacityError("exact induced counts support patterns of order <= " +
                            std::to_string(kMaxDensityPattern));
    EmbedCounter c{&pattern, &host, pattern.order(), host.order(), {}, 0};
    c.induced(0, 0);
    return DensityCount{c.hits, falling_factorial(host.order(), pattern.order())};
}

double induced_density(const Graph& pattern, const Graph& host) {
    return induced_count(pattern, host).value();
}

DensityCount hom_count(const Graph& pattern, const Graph& host) {
    if (pattern.order() > kMaxDensityPattern)
        throw CapacityError("exact homomorphism counts support patterns of order <= " +
                            std::to_string(kMaxDensityPattern));
    EmbedCounter c{&pattern, &host, pattern.order(), host.order(), {}, 0};
    c.hom(0);
    return DensityCount{c.hits, power_u64(host.order(), pattern.order())};
}

double hom_density(const Graph& pattern, const Graph& host) {
    return hom_count(pattern, host).value();
}

// ---- structure tests ---------------------------------------------------

namespace {

bool clique_rec(const Graph& g, std::uint64_t cands, int need) {
    if (need == 0) return true;
    if (__builtin_popcountll(cands) < need) return false;
    while (cands) {
        int v = __builtin_ctzll(cands);
        cands &= cands - 1;
        if (clique_rec(g, cands & g.row(v), need - 1)) return true;
    }
    return false;
}

}  // namespace

bool clique_exists(const Graph& g, int size) {
    if (size <= 0) return true;
    return clique_rec(g, full_mask(g.order()), size);
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    int colour[kMaxVertices];
    std::fill(colour, colour + n, -1);
    int stack[kMaxVertices];
    for (int s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        int top = 0;
        stack[top++] = s;
        while (top > 0) {
            int v = stack[--top];
            std::uint64_t nb = g.row(v);
            while (nb) {
                int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    stack[top++] = u;
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

bool any_induced_with_key(const Graph& g, int size, const std::vector<std::uint64_t>& keys) {
    int n = g.order();
    int verts[kMaxCanonVertices];
    for (int i = 0; i < size; ++i) verts[i] = i;
    for (;;) {
        Graph sub = induced_subgraph(g, std::span<const int>(verts, static_cast<std::size_t>(size)));
        std::uint64_t key = canonical_key(sub);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) return true;
        // next combination in lexicographic order
        int i = size - 1;
        while (i >= 0 && verts[i] == n - size + i) --i;
        if (i < 0) return false;
        ++verts[i];
        for (int j = i + 1; j < size; ++j) verts[j] = verts[j - 1] + 1;
    }
}

}  // namespace

bool is_free_of(const Graph& g, std::span<const Graph> forbidden) {
    // group forbidden canonical keys by order, skip oversized patterns
    std::vector<std::pair<int, std::uint64_t>> keyed;
    for (const Graph& f : forbidden) {
        if (f.order() > g.order()) continue;
        keyed.emplace_back(f.order(), canonical_key(f));
    }
    std::sort(keyed.begin(), keyed.end());
    std::size_t i = 0;
    while (i < keyed.size()) {
        int size = keyed[i].first;
        std::vector<std::uint64_t> keys;
        while (i < keyed.size() && keyed[i].first == size) keys.push_back(keyed[i++].second);
        if (any_induced_with_key(g, size, keys)) return false;
    }
    return true;
}

// ---- graph6 ------------------------------------------------------------

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int npairs = n * (n - 1) / 2;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (npairs % 6 != 0) {
        acc <<= 6 - npairs % 6;
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t at) -> unsigned {
        if (at >= text.size()) throw ParseError("truncated graph6 string", at);
        unsigned c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", at);
        return c - 63;
    };
    long long n;
    unsigned first = need(0);
    if (first == 63) {
        n = (static_cast<long long>(need(1)) << 12) | (need(2) << 6) | need(3);
        pos = 4;
    } else {
        n = first;
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph6 order " + std::to_string(n) + " outside [1, 64]", 0);
    int order = static_cast<int>(n);
    int npairs = order * (order - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((npairs + 5) / 6);
    if (text.size() != pos + nbytes)
        throw ParseError("graph6 body has wrong length", text.size() > pos + nbytes ? pos + nbytes : text.size());
    Graph g(order);
    int bit = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned v = need(pos + b);
        for (int s = 5; s >= 0; --s, ++bit) {
            bool on = (v >> s) & 1;
            if (bit >= npairs) {
                if (on) throw ParseError("nonzero graph6 padding", pos + b);
                continue;
            }
            if (on) {
                // invert pair_index: find j with j(j-1)/2 <= bit < j(j+1)/2
                int j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                int i = bit - j * (j - 1) / 2;
                g.set_edge(i, j, true);
            }
        }
    }
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, std::span<const Graph> graphs) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (const Graph& g : graphs) out << graph6_encode(g) << "\n";
}

}  // namespace graphonlab
