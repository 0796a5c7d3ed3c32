#include "graphonlab/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphonlab/rng.hpp"

namespace graphonlab {

StepGraphon::StepGraphon(std::vector<Rational> masses, std::vector<std::vector<double>> values)
    : masses_(std::move(masses)), values_(std::move(values)) {
    std::size_t k = masses_.size();
    if (k == 0) throw DomainError("graphon needs at least one block");
    if (values_.size() != k) throw DomainError("value matrix size does not match block count");
    Rational total(0);
    for (const Rational& m : masses_) {
        if (m <= Rational(0)) throw DomainError("block masses must be positive");
        total += m;
    }
    if (total != Rational(1)) {
        // tolerate tiny rational slack by absorbing it into the last block
        double err = (total - Rational(1)).to_double();
        if (std::abs(err) > 1e-12) throw DomainError("block masses must sum to 1");
        masses_.back() -= total - Rational(1);
        if (masses_.back() <= Rational(0)) throw DomainError("block masses must sum to 1");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (values_[i].size() != k) throw DomainError("value matrix must be square");
        for (std::size_t j = 0; j < k; ++j) {
            double v = values_[i][j];
            if (!(v >= 0.0 && v <= 1.0)) throw DomainError("graphon values must lie in [0, 1]");
            if (values_[i][j] != values_[j][i]) throw DomainError("value matrix must be symmetric");
        }
    }
}

Partition Partition::identity(int k) {
    Partition p;
    p.groups.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p.groups[static_cast<std::size_t>(i)] = i;
    p.group_count = k;
    return p;
}

void Partition::validate(int block_count) const {
    if (static_cast<int>(groups.size()) != block_count)
        throw DomainError("partition length does not match block count");
    if (group_count < 1) throw DomainError("partition needs at least one group");
    std::vector<bool> seen(static_cast<std::size_t>(group_count), false);
    for (int g : groups) {
        if (g < 0 || g >= group_count) throw DomainError("partition group id out of range");
        seen[static_cast<std::size_t>(g)] = true;
    }
    for (bool s : seen)
        if (!s) throw DomainError("partition has an empty group");
}

// ---- constructors ------------------------------------------------------

StepGraphon make_constant(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("constant graphon needs p in [0, 1]");
    return StepGraphon({Rational(1)}, {{p}});
}

StepGraphon make_from_graph(const Graph& g) {
    int n = g.order();
    std::vector<Rational> masses(static_cast<std::size_t>(n), Rational(1, n));
    std::vector<std::vector<double>> values(static_cast<std::size_t>(n),
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1.0;
    return StepGraphon(std::move(masses), std::move(values));
}

StepGraphon make_turan(int r) {
    if (r < 1) throw DomainError("turan graphon needs r >= 1");
    std::vector<Rational> masses(static_cast<std::size_t>(r), Rational(1, r));
    std::vector<std::vector<double>> values(static_cast<std::size_t>(r),
                                            std::vector<double>(static_cast<std::size_t>(r), 1.0));
    for (int i = 0; i < r; ++i) values[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
    return StepGraphon(std::move(masses), std::move(values));
}

StepGraphon make_wrs(int r, int s) {
    if (r < 1) throw DomainError("wrs graphon needs r >= 1");
    if (s < 0 || s > r) throw DomainError("wrs graphon needs 0 <= s <= r");
    std::vector<Rational> masses(static_cast<std::size_t>(r), Rational(1, r));
    std::vector<std::vector<double>> values(static_cast<std::size_t>(r),
                                            std::vector<double>(static_cast<std::size_t>(r), 0.5));
    for (int i = 0; i < r; ++i)
        values[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i < s ? 1.0 : 0.0;
    return StepGraphon(std::move(masses), std::move(values));
}

StepGraphon make_string_a(const Rational& a) {
    if (a < Rational(0) || a > Rational(1, 8))
        throw DomainError("string-graph family needs 0 <= a <= 1/8");
    if (a.is_zero()) return make_wrs(4, 4);
    std::vector<Rational> masses{a, Rational(1, 4) - a, Rational(1, 4), Rational(1, 4), Rational(1, 4)};
    std::vector<std::vector<double>> values(5, std::vector<double>(5, 0.5));
    for (int i = 0; i < 5; ++i) values[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    values[0][1] = values[1][0] = 0.0;
    return StepGraphon(std::move(masses), std::move(values));
}

// ---- entropy and densities ---------------------------------------------

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary entropy needs x in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double binary_entropy_clipped(double x) {
    if (!(x >= 0.0)) throw DomainError("clipped binary entropy needs x >= 0");
    return binary_entropy(std::min(x, 0.5));
}

namespace {

double weighted_cell_sum(const StepGraphon& w, double (*f)(double)) {
    int k = w.block_count();
    double total = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            total += (w.mass(i) * w.mass(j)).to_double() * f(w.value(i, j));
    return total;
}

double identity_fn(double v) { return v; }

}  // namespace

double entropy(const StepGraphon& w) {
    return weighted_cell_sum(w, &binary_entropy);
}

double edge_density(const StepGraphon& w) {
    return weighted_cell_sum(w, &identity_fn);
}

// ---- stepping ----------------------------------------------------------

StepGraphon step(const StepGraphon& w, const Partition& p) {
    p.validate(w.block_count());
    int k = w.block_count();
    int m = p.group_count;
    if (m == k) {
        bool identity = true;
        for (int i = 0; i < k; ++i)
            if (p.groups[static_cast<std::size_t>(i)] != i) identity = false;
        if (identity) return w;
    }
    std::vector<Rational> gmass(static_cast<std::size_t>(m), Rational(0));
    for (int i = 0; i < k; ++i) gmass[static_cast<std::size_t>(p.groups[static_cast<std::size_t>(i)])] += w.mass(i);
    std::vector<std::vector<double>> num(static_cast<std::size_t>(m),
                                         std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int i = 0; i < k; ++i) {
        int a = p.groups[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            int b = p.groups[static_cast<std::size_t>(j)];
            num[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                (w.mass(i) * w.mass(j)).to_double() * w.value(i, j);
        }
    }
    std::vector<std::vector<double>> values(static_cast<std::size_t>(m),
                                            std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            double cell = (gmass[static_cast<std::size_t>(a)] * gmass[static_cast<std::size_t>(b)]).to_double();
            double v = num[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] / cell;
            values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::clamp(v, 0.0, 1.0);
        }
    // enforce exact symmetry against rounding asymmetries
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            values[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
                values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    return StepGraphon(std::move(gmass), std::move(values));
}

StepGraphon refine_at(const StepGraphon& w, const std::vector<Rational>& cuts) {
    int k = w.block_count();
    std::vector<Rational> boundaries;
    Rational acc(0);
    std::vector<Rational> block_ends;
    for (int i = 0; i < k; ++i) {
        acc += w.mass(i);
        block_ends.push_back(acc);
    }
    for (const Rational& c : cuts) {
        if (c <= Rational(0) || c >= Rational(1)) continue;
        boundaries.push_back(c);
    }
    for (const Rational& e : block_ends) boundaries.push_back(e);
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());

    std::vector<Rational> masses;
    std::vector<int> source;
    Rational prev(0);
    std::size_t block = 0;
    for (const Rational& b : boundaries) {
        while (block_ends[block] < b || block_ends[block] == prev) ++block;
        masses.push_back(b - prev);
        source.push_back(static_cast<int>(block));
        prev = b;
    }
    int kk = static_cast<int>(masses.size());
    std::vector<std::vector<double>> values(static_cast<std::size_t>(kk),
                                            std::vector<double>(static_cast<std::size_t>(kk), 0.0));
    for (int i = 0; i < kk; ++i)
        for (int j = 0; j < kk; ++j)
            values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                w.value(source[static_cast<std::size_t>(i)], source[static_cast<std::size_t>(j)]);
    return StepGraphon(std::move(masses), std::move(values));
}

StepGraphon equipartition_average(const StepGraphon& w, int k) {
    if (k < 1) throw DomainError("equipartition needs k >= 1");
    std::vector<Rational> cuts;
    for (int i = 1; i < k; ++i) cuts.emplace_back(i, k);
    StepGraphon refined = refine_at(w, cuts);
    Partition p;
    p.group_count = k;
    Rational acc(0);
    for (int i = 0; i < refined.block_count(); ++i) {
        // block lies strictly inside one interval after refinement; locate by midpoint
        Rational mid = acc + refined.mass(i) / Rational(2);
        acc += refined.mass(i);
        Rational idx = mid * Rational(k);
        long long whole = idx.num() / idx.den();
        p.groups.push_back(static_cast<int>(whole));
    }
    return step(refined, p);
}

std::pair<StepGraphon, StepGraphon> common_refine(const StepGraphon& u, const StepGraphon& v) {
    std::vector<Rational> ucuts, vcuts;
    Rational acc(0);
    for (int i = 0; i + 1 < u.block_count(); ++i) {
        acc += u.mass(i);
        ucuts.push_back(acc);
    }
    acc = Rational(0);
    for (int i = 0; i + 1 < v.block_count(); ++i) {
        acc += v.mass(i);
        vcuts.push_back(acc);
    }
    return {refine_at(u, vcuts), refine_at(v, ucuts)};
}

// ---- randomness and freeness -------------------------------------------

StepGraphon randomness_support(const StepGraphon& w) {
    int k = w.block_count();
    std::vector<std::vector<double>> values(static_cast<std::size_t>(k),
                                            std::vector<double>(static_cast<std::size_t>(k), 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double v = w.value(i, j);
            values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (v > kSupportEps && v < 1.0 - kSupportEps) ? 1.0 : 0.0;
        }
    return StepGraphon(w.masses(), std::move(values));
}

namespace {

double p_induced_rec(const Graph& pattern, const StepGraphon& w, const std::vector<double>& mass,
                     int p, int* assign, double weight) {
    if (p == pattern.order()) return weight;
    int k = w.block_count();
    double total = 0.0;
    for (int b = 0; b < k; ++b) {
        double f = mass[static_cast<std::size_t>(b)];
        for (int q = 0; q < p && f != 0.0; ++q) {
            double v = w.value(assign[q], b);
            f *= pattern.adjacent(q, p) ? v : 1.0 - v;
        }
        if (f == 0.0) continue;
        assign[p] = b;
        total += p_induced_rec(pattern, w, mass, p + 1, assign, weight * f);
    }
    return total;
}

}  // namespace

double p_induced(const Graph& pattern, const StepGraphon& w) {
    int h = pattern.order();
    if (h > kMaxInducedPattern)
        throw CapacityError("p(H;W) supports patterns of order <= " + std::to_string(kMaxInducedPattern));
    int k = w.block_count();
    std::vector<double> mass(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) mass[static_cast<std::size_t>(b)] = w.mass_d(b);
    int assign[kMaxInducedPattern];
    return p_induced_rec(pattern, w, mass, 0, assign, 1.0);
}

namespace {

// Backtracking clique search on the support pattern with loop semantics:
// a block may host several clique vertices only if its diagonal is
// supported.
bool support_clique(const StepGraphon& w, int need, int min_block, std::vector<int>& chosen) {
    if (need == 0) return true;
    int k = w.block_count();
    for (int b = min_block; b < k; ++b) {
        bool ok = true;
        for (int c : chosen) {
            double v = w.value(c, b);
            if (!(v > kSupportEps)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        bool loop = w.value(b, b) > kSupportEps;
        chosen.push_back(b);
        // without a supported diagonal the block cannot repeat
        if (support_clique(w, need - 1, loop ? b : b + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool is_kr_free(const StepGraphon& w, int r) {
    if (r < 1) throw DomainError("clique order must be >= 1");
    if (r == 1) return false;  // no graphon is K_1-free
    std::vector<int> chosen;
    return !support_clique(w, r, 0, chosen);
}

// ---- random graphs -----------------------------------------------------

namespace {

constexpr std::uint64_t kStreamLabels = 0x6c61626c73ULL;
constexpr std::uint64_t kStreamEdges = 0x65646765ULL;

}  // namespace

Graph sample(const StepGraphon& w, int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices)
        throw CapacityError("sample order must be in [1, 64]");
    CounterRng rng(seed);
    int k = w.block_count();
    std::vector<double> cum(static_cast<std::size_t>(k));
    double acc = 0.0;
    for (int b = 0; b < k; ++b) {
        acc += w.mass_d(b);
        cum[static_cast<std::size_t>(b)] = acc;
    }
    cum.back() = 1.0;
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform_at(kStreamLabels, static_cast<std::uint64_t>(i));
        label[static_cast<std::size_t>(i)] =
            static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
    }
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            double pij = w.value(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
            double u = rng.uniform_at(kStreamEdges, static_cast<std::uint64_t>(pair_index(i, j)));
            if (u < pij) g.set_edge(i, j, true);
        }
    return g;
}

double exact_rg_entropy(const StepGraphon& w, int n) {
    if (n < 1 || n > kMaxExactEntropyOrder)
        throw CapacityError("exact random-graph entropy supports n <= " +
                            std::to_string(kMaxExactEntropyOrder));
    int k = w.block_count();
    double assignments = std::pow(static_cast<double>(k), n);
    if (assignments > 2e6)
        throw CapacityError("exact random-graph entropy needs k^n <= 2e6");
    int npairs = n * (n - 1) / 2;
    std::size_t nmasks = 1ULL << npairs;
    std::vector<double> prob(nmasks, 0.0);
    std::vector<double> table(nmasks);

    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (;;) {
        double q = 1.0;
        for (int i = 0; i < n; ++i) q *= w.mass_d(assign[static_cast<std::size_t>(i)]);
        // product distribution over edge masks for this block assignment
        table[0] = q;
        std::size_t width = 1;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                double pij = w.value(assign[static_cast<std::size_t>(i)], assign[static_cast<std::size_t>(j)]);
                for (std::size_t s = 0; s < width; ++s) {
                    double base = table[s];
                    table[s + width] = base * pij;
                    table[s] = base * (1.0 - pij);
                }
                width <<= 1;
            }
        for (std::size_t m = 0; m < nmasks; ++m) prob[m] += table[m];
        // odometer over block assignments
        int pos = n - 1;
        while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == k - 1) {
            assign[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++assign[static_cast<std::size_t>(pos)];
    }

    double h = 0.0;
    for (double p : prob)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

}  // namespace graphonlab
