#include <doctest.h>

#include <cmath>

#include "graphonlab/cutnorm.hpp"
#include "graphonlab/rng.hpp"
#include "oracles.hpp"

using namespace graphonlab;

namespace {

Kernel constant_kernel(int k, double v) {
    Kernel kern;
    kern.masses.assign(static_cast<std::size_t>(k), Rational(1, k));
    kern.values.assign(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k), v));
    return kern;
}

double eval_witness(const Kernel& kern, const CutResult& r) {
    double total = 0.0;
    for (int i : r.row_set)
        for (int j : r.col_set)
            total += (kern.masses[static_cast<std::size_t>(i)] * kern.masses[static_cast<std::size_t>(j)])
                         .to_double() *
                     kern.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return std::abs(total);
}

}  // namespace

TEST_CASE("exact cut norm on hand kernels") {
    CHECK(cut_norm_exact(constant_kernel(2, 1.0)).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cut_norm_exact(constant_kernel(3, 0.0)).value == 0.0);

    Kernel checker = constant_kernel(2, 1.0);
    checker.values[0][1] = checker.values[1][0] = -1.0;
    double expected = oracles::brute_cut_norm(checker);
    CHECK(expected == doctest::Approx(0.25).epsilon(1e-13));  // single diagonal cell wins
    CutResult r = cut_norm_exact(checker);
    CHECK(r.exact);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-13));
    CHECK(eval_witness(checker, r) == doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("exact cut norm equals the naive subset scan") {
    CounterRng rng(1009);
    for (int t = 0; t < 100; ++t) {
        int k = 2 + static_cast<int>(rng.next_below(9));
        Kernel kern = oracles::random_kernel(k, rng);
        CutResult r = cut_norm_exact(kern);
        CHECK(r.value == doctest::Approx(oracles::brute_cut_norm(kern)).epsilon(1e-12));
        CHECK(eval_witness(kern, r) == doctest::Approx(r.value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(cut_norm_exact(constant_kernel(25, 0.5)), CapacityError);
}

TEST_CASE("heuristic cut norm is a lower bound and finds easy optima") {
    CounterRng rng(2011);
    for (int t = 0; t < 100; ++t) {
        int k = 2 + static_cast<int>(rng.next_below(9));
        Kernel kern = oracles::random_kernel(k, rng);
        double exact = cut_norm_exact(kern).value;
        CutResult h = cut_norm_heuristic(kern, 6, rng.next());
        CHECK(!h.exact);
        CHECK(h.value <= exact + 1e-12);
    }
    CHECK(cut_norm_heuristic(constant_kernel(3, 0.0), 4, 9).value == 0.0);

    Kernel checker = constant_kernel(2, 1.0);
    checker.values[0][1] = checker.values[1][0] = -1.0;
    CHECK(cut_norm_heuristic(checker, 4, 17).value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("cut-metric examples") {
    StepGraphon w = make_wrs(3, 1);
    CHECK(d_box(w, w) == 0.0);
    CHECK(d_box(make_constant(0.5), make_constant(0.0)) == doctest::Approx(0.5).epsilon(1e-13));

    // the +-1/2 checkerboard difference: certified by the naive oracle
    Kernel diff = Kernel::difference(make_turan(2), make_constant(0.5));
    CHECK(d_box(make_turan(2), make_constant(0.5)) ==
          doctest::Approx(oracles::brute_cut_norm(diff)).epsilon(1e-13));
    CHECK(d_box(make_turan(2), make_constant(0.5)) == doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("cut metric axioms at fixed alignment") {
    CounterRng rng(3017);
    for (int t = 0; t < 25; ++t) {
        StepGraphon u = oracles::random_graphon(2 + static_cast<int>(rng.next_below(7)), rng);
        StepGraphon v = oracles::random_graphon(2 + static_cast<int>(rng.next_below(7)), rng);
        StepGraphon z = oracles::random_graphon(2 + static_cast<int>(rng.next_below(7)), rng);
        double duv = d_box(u, v), dvu = d_box(v, u);
        CHECK(duv == doctest::Approx(dvu).epsilon(1e-12));
        CHECK(d_box(u, z) <= duv + d_box(v, z) + 1e-12);
        CHECK(d_box(u, u) == 0.0);
    }
}

TEST_CASE("cut distance upper bounds") {
    // relabelling invariance at matching resolution, uniform masses
    CounterRng rng(4021);
    for (int t = 0; t < 10; ++t) {
        int k = 2 + static_cast<int>(rng.next_below(4));
        StepGraphon w = oracles::random_graphon(k, rng, /*uniform_masses=*/true);
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = k - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)))]);
        std::vector<std::vector<double>> values(static_cast<std::size_t>(k),
                                                std::vector<double>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    w.value(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        StepGraphon permuted(w.masses(), std::move(values));
        DeltaBound bound = delta_box_upper(w, permuted, k);
        CHECK(bound.exhaustive);
        CHECK(bound.value == 0.0);
    }

    DeltaBound tb = delta_box_upper(make_turan(2), make_wrs(2, 0), 2);
    CHECK(tb.exhaustive);
    CHECK(tb.value == doctest::Approx(0.25).epsilon(1e-13));

    // one term of the infimum: the aligned distance itself
    for (int t = 0; t < 10; ++t) {
        StepGraphon u = oracles::random_graphon(3, rng, true);
        StepGraphon v = oracles::random_graphon(3, rng, true);
        CHECK(delta_box_upper(u, v, 3).value <= d_box(u, v) + 1e-12);
    }
}

TEST_CASE("graph-to-graphon distance") {
    CHECK(delta_graph_graphon(complete_bipartite(3, 3), make_turan(2)).value ==
          doctest::Approx(0.0).epsilon(1e-13));
    // the empty diagonal of W_{K_n} survives every rearrangement, so the
    // distance to the all-ones graphon is exactly 1/n (vanishing only as
    // n grows)
    for (int n : {2, 5, 8})
        CHECK(delta_graph_graphon(complete(n), make_constant(1.0)).value ==
              doctest::Approx(1.0 / n).epsilon(1e-12));

    CounterRng rng(5);
    for (int t = 0; t < 10; ++t) {
        Graph g = oracles::random_graph(6, 0.5, rng);
        StepGraphon w = oracles::random_graphon(3, rng);
        GraphAlignment align = delta_graph_graphon(g, w);
        CHECK(align.exhaustive);
        CHECK(align.value <= d_box(make_from_graph(g), w) + 1e-12);
    }
}

TEST_CASE("weak regularity") {
    RegularityResult r2 = weak_regularity(make_turan(2), 2, 1);
    CHECK(r2.residual == doctest::Approx(0.0).epsilon(1e-12));
    RegularityResult r3 = weak_regularity(make_turan(3), 3, 1);
    CHECK(r3.residual == doctest::Approx(0.0).epsilon(1e-12));

    CounterRng rng(6073);
    for (int t = 0; t < 8; ++t) {
        StepGraphon w = oracles::random_graphon(6 + static_cast<int>(rng.next_below(6)), rng);
        for (int k : {2, 4, 8}) {
            RegularityResult reg = weak_regularity(w, k, 77 + t);
            CHECK(reg.residual <= weak_regularity_bound(k) + 1e-9);
            CHECK(reg.residual_exact);
            CHECK(entropy(reg.stepped) >= entropy(w) - 1e-12);
            // partition groups have equal mass 1/k
            std::vector<Rational> gmass(static_cast<std::size_t>(k), Rational(0));
            for (int i = 0; i < reg.refined.block_count(); ++i)
                gmass[static_cast<std::size_t>(reg.partition.groups[static_cast<std::size_t>(i)])] +=
                    reg.refined.mass(i);
            for (const Rational& m : gmass) CHECK(m == Rational(1, k));
            // the refined subject is the subject as a function
            CHECK(edge_density(reg.refined) == doctest::Approx(edge_density(w)).epsilon(1e-12));
            CHECK(entropy(reg.refined) == doctest::Approx(entropy(w)).epsilon(1e-12));
        }
    }

    // 64-block graph subject: residual measured heuristically, still sane
    Graph g = sample(make_constant(0.5), 64, 424242);
    RegularityResult reg = weak_regularity(g, 4, 9);
    CHECK(!reg.residual_exact);
    CHECK(reg.residual <= weak_regularity_bound(4) + 1e-9);
    CHECK(reg.residual >= 0.0);
}

TEST_CASE("ball counts") {
    StepGraphon w = make_wrs(2, 0);
    // radius 1 covers everything
    BallCounts full = count_balls(4, 1.0, w);
    CHECK(full.n_hat == 64);
    CHECK(full.n_full == 64);

    // radius 0 against a graph's own graphon counts exactly that labelled graph
    CounterRng rng(8);
    Graph g0 = oracles::random_graph(4, 0.5, rng);
    BallCounts zero = count_balls(4, 0.0, make_from_graph(g0));
    CHECK(zero.n_hat == 1);

    // monotone in delta and n_hat <= n_full throughout
    std::uint64_t prev_hat = 0, prev_full = 0;
    for (double delta : {0.05, 0.1, 0.2, 0.35, 0.5}) {
        BallCounts c = count_balls(4, delta, w);
        CHECK(c.n_hat <= c.n_full);
        CHECK(c.n_hat >= prev_hat);
        CHECK(c.n_full >= prev_full);
        CHECK(c.n_full_is_lower_bound);
        prev_hat = c.n_hat;
        prev_full = c.n_full;
    }
    CHECK_THROWS_AS(count_balls(7, 0.1, w), CapacityError);
}
