#include "graphonlab/cutnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphonlab/parallel.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

void Kernel::validate() const {
    std::size_t k = masses.size();
    if (k == 0) throw DomainError("kernel needs at least one block");
    if (values.size() != k) throw DomainError("kernel value matrix size mismatch");
    Rational total(0);
    for (const Rational& m : masses) {
        if (m <= Rational(0)) throw DomainError("kernel masses must be positive");
        total += m;
    }
    if (total != Rational(1)) throw DomainError("kernel masses must sum to 1");
    for (std::size_t i = 0; i < k; ++i) {
        if (values[i].size() != k) throw DomainError("kernel value matrix must be square");
        for (std::size_t j = 0; j < k; ++j) {
            double v = values[i][j];
            if (!(v >= -1.0 && v <= 1.0)) throw DomainError("kernel values must lie in [-1, 1]");
            if (values[i][j] != values[j][i]) throw DomainError("kernel value matrix must be symmetric");
        }
    }
}

Kernel Kernel::difference(const StepGraphon& u, const StepGraphon& v) {
    auto [ur, vr] = common_refine(u, v);
    int k = ur.block_count();
    Kernel kern;
    kern.masses = ur.masses();
    kern.values.assign(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k), 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ur.value(i, j) - vr.value(i, j);
    return kern;
}

double Kernel::box_integral(std::uint32_t rows, std::uint32_t cols) const {
    int k = block_count();
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        if (!((rows >> i) & 1U)) continue;
        double mi = masses[static_cast<std::size_t>(i)].to_double();
        for (int j = 0; j < k; ++j)
            if ((cols >> j) & 1U)
                total += mi * masses[static_cast<std::size_t>(j)].to_double() *
                         values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return total;
}

namespace {

std::vector<int> mask_to_set(std::uint64_t mask, int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1ULL) out.push_back(i);
    return out;
}

double eval_sets(const Kernel& kern, const std::vector<int>& rows, const std::vector<int>& cols) {
    double total = 0.0;
    for (int i : rows) {
        double mi = kern.masses[static_cast<std::size_t>(i)].to_double();
        for (int j : cols)
            total += mi * kern.masses[static_cast<std::size_t>(j)].to_double() *
                     kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return total;
}

}  // namespace

CutResult cut_norm_exact(const Kernel& kern) {
    kern.validate();
    int k = kern.block_count();
    if (k > kMaxExactCutBlocks)
        throw CapacityError("exact cut norm supports <= " + std::to_string(kMaxExactCutBlocks) +
                            " blocks; use the heuristic");

    // weighted matrix: M_ij = mu_i mu_j v_ij
    std::vector<double> weighted(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            weighted[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
                (kern.masses[static_cast<std::size_t>(i)] * kern.masses[static_cast<std::size_t>(j)]).to_double() *
                kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    // Gray-code scan over row subsets; for each, the best column set is a
    // sign set of the column sums, tracked incrementally.
    std::vector<double> colsum(static_cast<std::size_t>(k), 0.0);
    double pos = 0.0, neg = 0.0;
    double best = 0.0;
    std::uint32_t best_rows = 0;
    std::uint32_t rows = 0;
    std::uint64_t total = 1ULL << k;
    for (std::uint64_t t = 1; t < total; ++t) {
        int flip = __builtin_ctzll(t);
        bool added = !((rows >> flip) & 1U);
        rows ^= 1U << flip;
        const double* mrow = &weighted[static_cast<std::size_t>(flip) * static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j) {
            double before = colsum[static_cast<std::size_t>(j)];
            double after = added ? before + mrow[j] : before - mrow[j];
            colsum[static_cast<std::size_t>(j)] = after;
            pos += std::max(after, 0.0) - std::max(before, 0.0);
            neg += std::min(after, 0.0) - std::min(before, 0.0);
        }
        double value = std::max(pos, -neg);
        if (value > best) {
            best = value;
            best_rows = rows;
        }
    }

    CutResult result;
    result.exact = true;
    result.row_set = mask_to_set(best_rows, k);
    // recompute column sums for the winning rows to certify the value
    std::vector<double> c(static_cast<std::size_t>(k), 0.0);
    for (int i : result.row_set)
        for (int j = 0; j < k; ++j)
            c[static_cast<std::size_t>(j)] +=
                weighted[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
    double cpos = 0.0, cneg = 0.0;
    for (int j = 0; j < k; ++j) {
        cpos += std::max(c[static_cast<std::size_t>(j)], 0.0);
        cneg += std::min(c[static_cast<std::size_t>(j)], 0.0);
    }
    std::uint32_t cols = 0;
    if (cpos >= -cneg) {
        for (int j = 0; j < k; ++j)
            if (c[static_cast<std::size_t>(j)] > 0.0) cols |= 1U << j;
    } else {
        for (int j = 0; j < k; ++j)
            if (c[static_cast<std::size_t>(j)] < 0.0) cols |= 1U << j;
    }
    result.col_set = mask_to_set(cols, k);
    result.value = std::abs(eval_sets(kern, result.row_set, result.col_set));
    return result;
}

CutResult cut_norm_heuristic(const Kernel& kern, int restarts, std::uint64_t seed) {
    kern.validate();
    int k = kern.block_count();
    if (restarts < 1) restarts = 1;
    CounterRng rng(seed);

    std::vector<double> weighted(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            weighted[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
                (kern.masses[static_cast<std::size_t>(i)] * kern.masses[static_cast<std::size_t>(j)]).to_double() *
                kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    std::vector<char> best_rows_v, best_cols_v;
    std::vector<double> sums(static_cast<std::size_t>(k));
    double best = 0.0;

    auto col_sums_for = [&](const std::vector<char>& rows_sel) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (int i = 0; i < k; ++i)
            if (rows_sel[static_cast<std::size_t>(i)])
                for (int j = 0; j < k; ++j)
                    sums[static_cast<std::size_t>(j)] +=
                        weighted[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
    };
    auto row_sums_for = [&](const std::vector<char>& cols_sel) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (cols_sel[static_cast<std::size_t>(j)])
                    sums[static_cast<std::size_t>(i)] +=
                        weighted[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
    };

    for (int r = 0; r < restarts; ++r) {
        for (int sign = 0; sign < 2; ++sign) {
            double want = sign == 0 ? 1.0 : -1.0;
            std::vector<char> rows_sel(static_cast<std::size_t>(k)), cols_sel(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) rows_sel[static_cast<std::size_t>(i)] = rng.next() & 1 ? 1 : 0;
            double current = -1.0;
            for (int iter = 0; iter < 4 * k + 8; ++iter) {
                col_sums_for(rows_sel);
                double val = 0.0;
                for (int j = 0; j < k; ++j) {
                    double s = want * sums[static_cast<std::size_t>(j)];
                    cols_sel[static_cast<std::size_t>(j)] = s > 0.0 ? 1 : 0;
                    if (s > 0.0) val += s;
                }
                row_sums_for(cols_sel);
                val = 0.0;
                for (int i = 0; i < k; ++i) {
                    double s = want * sums[static_cast<std::size_t>(i)];
                    rows_sel[static_cast<std::size_t>(i)] = s > 0.0 ? 1 : 0;
                    if (s > 0.0) val += s;
                }
                if (val <= current + 1e-15) {
                    current = std::max(current, val);
                    break;
                }
                current = val;
            }
            if (current > best) {
                best = current;
                best_rows_v = rows_sel;
                best_cols_v = cols_sel;
            }
        }
    }

    CutResult result;
    result.exact = false;
    for (int i = 0; i < k; ++i)
        if (!best_rows_v.empty() && best_rows_v[static_cast<std::size_t>(i)]) result.row_set.push_back(i);
    for (int j = 0; j < k; ++j)
        if (!best_cols_v.empty() && best_cols_v[static_cast<std::size_t>(j)]) result.col_set.push_back(j);
    result.value = std::abs(eval_sets(kern, result.row_set, result.col_set));
    return result;
}

double d_box(const StepGraphon& u, const StepGraphon& v) {
    Kernel kern = Kernel::difference(u, v);
    if (kern.block_count() > kMaxExactCutBlocks)
        throw CapacityError("common refinement exceeds the exact cut-norm cap of " +
                            std::to_string(kMaxExactCutBlocks) + " blocks");
    return cut_norm_exact(kern).value;
}

double d_box_heuristic(const StepGraphon& u, const StepGraphon& v, int restarts, std::uint64_t seed) {
    Kernel kern = Kernel::difference(u, v);
    return cut_norm_heuristic(kern, restarts, seed).value;
}

// ---- cut distance upper bounds ------------------------------------------

namespace {

Kernel permuted_difference(const StepGraphon& u, const StepGraphon& v, const std::vector<int>& perm) {
    int m = u.block_count();
    Kernel kern;
    kern.masses = u.masses();
    kern.values.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u.value(i, j) - v.value(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return kern;
}

}  // namespace

DeltaBound delta_box_upper(const StepGraphon& u, const StepGraphon& v, int m, std::uint64_t seed) {
    if (m < 1) throw DomainError("cut-distance resolution must be >= 1");
    StepGraphon um = equipartition_average(u, m);
    StepGraphon vm = equipartition_average(v, m);

    DeltaBound bound;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);

    if (m <= kMaxExhaustivePermBlocks) {
        bound.exhaustive = true;
        bound.value = 2.0;
        do {
            double d = cut_norm_exact(permuted_difference(um, vm, perm)).value;
            if (d < bound.value) {
                bound.value = d;
                bound.permutation = perm;
                if (d == 0.0) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return bound;
    }

    // annealing over cell transpositions; certified upper bound only
    CounterRng rng(seed);
    auto evaluate = [&](const std::vector<int>& p) {
        Kernel kern = permuted_difference(um, vm, p);
        if (m <= kMaxExactCutBlocks) return cut_norm_exact(kern).value;
        return cut_norm_heuristic(kern, 6, rng.next()).value;
    };
    double current = evaluate(perm);
    bound.value = current;
    bound.permutation = perm;
    int iterations = 300 * m;
    for (int it = 0; it < iterations; ++it) {
        double temp = 0.1 * (1.0 - static_cast<double>(it) / iterations);
        std::size_t a = rng.next_below(static_cast<std::uint64_t>(m));
        std::size_t b = rng.next_below(static_cast<std::uint64_t>(m));
        if (a == b) continue;
        std::swap(perm[a], perm[b]);
        double trial = evaluate(perm);
        double accept_p = trial <= current ? 1.0 : std::exp(-(trial - current) / std::max(temp, 1e-9));
        if (rng.uniform() < accept_p) {
            current = trial;
            if (trial < bound.value) {
                bound.value = trial;
                bound.permutation = perm;
            }
        } else {
            std::swap(perm[a], perm[b]);
        }
    }
    return bound;
}

// ---- graph-to-graphon alignment -----------------------------------------

namespace {

double aligned_distance(const Graph& g, const StepGraphon& w, const std::vector<int>& assignment,
                        bool allow_heuristic, std::uint64_t seed) {
    int n = g.order();
    // reorder vertices so that same-labelled vertices are contiguous, in label order
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return assignment[static_cast<std::size_t>(a)] < assignment[static_cast<std::size_t>(b)];
    });
    Graph reordered = relabel(g, order);
    StepGraphon wg = make_from_graph(reordered);
    Kernel kern = Kernel::difference(wg, w);
    if (kern.block_count() <= kMaxExactCutBlocks) return cut_norm_exact(kern).value;
    if (!allow_heuristic)
        throw CapacityError("alignment kernel exceeds the exact cut-norm cap");
    return cut_norm_heuristic(kern, 8, seed).value;
}

// Count vectors with n_b in {floor(mu_b n), ceil(mu_b n)} summing to n.
std::vector<std::vector<int>> rounded_count_vectors(const StepGraphon& w, int n) {
    int k = w.block_count();
    std::vector<int> lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
        Rational target = w.mass(b) * Rational(n);
        long long fl = target.num() / target.den();
        lo[static_cast<std::size_t>(b)] = static_cast<int>(fl);
        hi[static_cast<std::size_t>(b)] = target.den() == 1 ? static_cast<int>(fl) : static_cast<int>(fl) + 1;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int b, int sum) -> void {
        if (b == k) {
            if (sum == n) out.push_back(cur);
            return;
        }
        for (int c = lo[static_cast<std::size_t>(b)]; c <= hi[static_cast<std::size_t>(b)]; ++c) {
            if (sum + c > n) break;
            cur[static_cast<std::size_t>(b)] = c;
            self(self, b + 1, sum + c);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

GraphAlignment delta_graph_graphon(const Graph& g, const StepGraphon& w, std::uint64_t seed) {
    int n = g.order();
    int k = w.block_count();

    GraphAlignment best;
    // identity alignment: one term of the infimum, so always a candidate
    {
        Kernel kern = Kernel::difference(make_from_graph(g), w);
        if (kern.block_count() <= kMaxExactCutBlocks)
            best.value = cut_norm_exact(kern).value;
        else
            best.value = cut_norm_heuristic(kern, 8, seed).value;
    }

    bool exhaustive = n <= kMaxExhaustiveAssignOrder && k <= kMaxExhaustiveAssignBlocks;
    best.exhaustive = exhaustive;
    if (k == 1) return best;

    if (exhaustive) {
        for (const std::vector<int>& counts : rounded_count_vectors(w, n)) {
            std::vector<int> remaining = counts;
            std::vector<int> assign(static_cast<std::size_t>(n));
            auto rec = [&](auto&& self, int v) -> bool {  // returns true when hitting 0 distance
                if (v == n) {
                    double d = aligned_distance(g, w, assign, false, seed);
                    if (d < best.value) {
                        best.value = d;
                        best.assignment = assign;
                        if (d == 0.0) return true;
                    }
                    return false;
                }
                for (int b = 0; b < k; ++b) {
                    if (remaining[static_cast<std::size_t>(b)] == 0) continue;
                    --remaining[static_cast<std::size_t>(b)];
                    assign[static_cast<std::size_t>(v)] = b;
                    bool done = self(self, v + 1);
                    ++remaining[static_cast<std::size_t>(b)];
                    if (done) return true;
                }
                return false;
            };
            if (rec(rec, 0)) break;
        }
        return best;
    }

    // local search fallback for larger inputs
    CounterRng rng(seed);
    auto count_vectors = rounded_count_vectors(w, n);
    if (count_vectors.empty()) return best;
    const std::vector<int>& counts = count_vectors.front();
    std::vector<int> assign(static_cast<std::size_t>(n));
    int v = 0;
    for (int b = 0; b < k; ++b)
        for (int c = 0; c < counts[static_cast<std::size_t>(b)]; ++c) assign[static_cast<std::size_t>(v++)] = b;
    double current = aligned_distance(g, w, assign, true, rng.next());
    if (current < best.value) {
        best.value = current;
        best.assignment = assign;
    }
    int iterations = 40 * n;
    for (int it = 0; it < iterations; ++it) {
        std::size_t a = rng.next_below(static_cast<std::uint64_t>(n));
        std::size_t b = rng.next_below(static_cast<std::uint64_t>(n));
        if (assign[a] == assign[b]) continue;
        std::swap(assign[a], assign[b]);
        double trial = aligned_distance(g, w, assign, true, rng.next());
        if (trial <= current) {
            current = trial;
            if (trial < best.value) {
                best.value = trial;
                best.assignment = assign;
            }
        } else {
            std::swap(assign[a], assign[b]);
        }
    }
    return best;
}

// ---- weak regularity -----------------------------------------------------

double weak_regularity_bound(int k) {
    if (k < 2) throw DomainError("regularity bound needs k >= 2");
    return 4.0 / std::sqrt(std::log2(static_cast<double>(k)));
}

namespace {

Kernel residual_kernel(const StepGraphon& refined, const Partition& part, const StepGraphon& stepped) {
    int k = refined.block_count();
    Kernel kern;
    kern.masses = refined.masses();
    kern.values.assign(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k), 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                refined.value(i, j) - stepped.value(part.groups[static_cast<std::size_t>(i)],
                                                    part.groups[static_cast<std::size_t>(j)]);
    return kern;
}

CutResult residual_cut(const Kernel& kern, std::uint64_t seed) {
    if (kern.block_count() <= kMaxExactCutBlocks) return cut_norm_exact(kern);
    return cut_norm_heuristic(kern, 8, seed);
}

// Splits blocks (in group-sorted order) at multiples of 1/k and reassigns
// the pieces so every group has mass exactly 1/k. Splitting a constant
// block is lossless.
void rebalance_to_equipartition(const StepGraphon& refined, std::vector<int>& groups, int k,
                                StepGraphon* out_refined, Partition* out_partition) {
    int blocks = refined.block_count();
    std::vector<int> order(static_cast<std::size_t>(blocks));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return groups[static_cast<std::size_t>(a)] < groups[static_cast<std::size_t>(b)];
    });

    std::vector<std::vector<Rational>> splits(static_cast<std::size_t>(blocks));
    std::vector<std::vector<int>> piece_groups(static_cast<std::size_t>(blocks));
    Rational acc(0);
    int gidx = 0;
    for (int b : order) {
        Rational remaining = refined.mass(b);
        Rational offset(0);
        for (;;) {
            Rational boundary(gidx + 1, k);
            Rational room = boundary - acc;
            if (remaining <= room) {
                piece_groups[static_cast<std::size_t>(b)].push_back(gidx);
                acc += remaining;
                if (acc == boundary && gidx + 1 < k) ++gidx;
                break;
            }
            offset += room;
            splits[static_cast<std::size_t>(b)].push_back(offset);
            piece_groups[static_cast<std::size_t>(b)].push_back(gidx);
            acc += room;
            remaining -= room;
            ++gidx;
        }
    }

    std::vector<Rational> masses;
    std::vector<int> source;
    std::vector<int> new_groups;
    for (int b = 0; b < blocks; ++b) {
        Rational prev(0);
        const auto& cuts = splits[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            masses.push_back(cuts[i] - prev);
            source.push_back(b);
            new_groups.push_back(piece_groups[static_cast<std::size_t>(b)][i]);
            prev = cuts[i];
        }
        masses.push_back(refined.mass(b) - prev);
        source.push_back(b);
        new_groups.push_back(piece_groups[static_cast<std::size_t>(b)].back());
    }

    int nb = static_cast<int>(masses.size());
    std::vector<std::vector<double>> values(static_cast<std::size_t>(nb),
                                            std::vector<double>(static_cast<std::size_t>(nb), 0.0));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                refined.value(source[static_cast<std::size_t>(i)], source[static_cast<std::size_t>(j)]);
    *out_refined = StepGraphon(std::move(masses), std::move(values));
    out_partition->groups = std::move(new_groups);
    out_partition->group_count = k;
}

}  // namespace

RegularityResult weak_regularity(const StepGraphon& subject, int k, std::uint64_t seed) {
    if (k < 2) throw DomainError("weak regularity needs k >= 2");
    CounterRng rng(seed);

    std::vector<int> groups(static_cast<std::size_t>(subject.block_count()), 0);
    int gcount = 1;
    while (gcount < k) {
        Partition part{groups, gcount};
        StepGraphon stepped = step(subject, part);
        Kernel kern = residual_kernel(subject, part, stepped);
        CutResult cut = residual_cut(kern, rng.next());
        if (cut.value <= 1e-12) break;
        std::vector<char> in_s(static_cast<std::size_t>(subject.block_count()), 0);
        std::vector<char> in_t(static_cast<std::size_t>(subject.block_count()), 0);
        for (int i : cut.row_set) in_s[static_cast<std::size_t>(i)] = 1;
        for (int j : cut.col_set) in_t[static_cast<std::size_t>(j)] = 1;
        // refine every group by the witness cells
        std::vector<int> key(groups.size());
        for (std::size_t i = 0; i < groups.size(); ++i)
            key[i] = groups[i] * 4 + in_s[i] * 2 + in_t[i];
        std::vector<int> sorted_keys = key;
        std::sort(sorted_keys.begin(), sorted_keys.end());
        sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
        int new_count = static_cast<int>(sorted_keys.size());
        if (new_count == gcount) break;  // heuristic witness failed to refine
        for (std::size_t i = 0; i < groups.size(); ++i)
            groups[i] = static_cast<int>(std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key[i]) -
                                         sorted_keys.begin());
        gcount = new_count;
    }

    RegularityResult result{subject, Partition{}, subject, 0.0, false};
    rebalance_to_equipartition(subject, groups, k, &result.refined, &result.partition);
    result.stepped = step(result.refined, result.partition);
    Kernel kern = residual_kernel(result.refined, result.partition, result.stepped);
    result.residual_exact = kern.block_count() <= kMaxExactCutBlocks;
    CutResult cut = residual_cut(kern, rng.next());
    result.residual = cut.value;
    return result;
}

RegularityResult weak_regularity(const Graph& subject, int k, std::uint64_t seed) {
    return weak_regularity(make_from_graph(subject), k, seed);
}

// ---- ball counts ---------------------------------------------------------

std::pair<std::vector<double>, std::vector<double>> ball_distance_table(int n, const StepGraphon& w) {
    if (n < 1 || n > 6) throw CapacityError("ball counts support n <= 6");
    LabelledGraphs range(n);
    std::size_t total = static_cast<std::size_t>(range.size());
    std::vector<double> hat(total), full(total);
    parallel_chunks(total, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            Graph g = range.at(idx);
            GraphAlignment align = delta_graph_graphon(g, w);
            Kernel kern = Kernel::difference(make_from_graph(g), w);
            hat[idx] = cut_norm_exact(kern).value;
            full[idx] = align.value;
        }
    });
    return {std::move(hat), std::move(full)};
}

BallCounts count_balls(int n, double delta, const StepGraphon& w) {
    if (delta < 0) throw DomainError("ball radius must be nonnegative");
    auto [hat, full] = ball_distance_table(n, w);
    BallCounts counts;
    counts.n = n;
    counts.delta = delta;
    for (std::size_t i = 0; i < hat.size(); ++i) {
        if (hat[i] <= delta + 1e-12) ++counts.n_hat;
        if (full[i] <= delta + 1e-12) ++counts.n_full;
    }
    return counts;
}

}  // namespace graphonlab
