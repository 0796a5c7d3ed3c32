// Regenerates tests/goldens.hpp: pinned-seed reference values produced by a
// certified run, never hand-written. Usage: goldens_gen > tests/goldens.hpp

#include <cstdio>
#include <string>

#include "graphonlab/classes.hpp"
#include "graphonlab/cutnorm.hpp"
#include "graphonlab/experiments.hpp"
#include "graphonlab/graphon.hpp"
#include "../tests/corpus.hpp"

using namespace graphonlab;

namespace {

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

int main() {
    std::printf("#pragma once\n\n");
    std::printf("// Pinned-seed reference values. Regenerate with:\n");
    std::printf("//   build/tools/goldens_gen > tests/goldens.hpp\n\n");
    std::printf("#include <cstdint>\n\nnamespace goldens {\n\n");

    // exact H(G(n, wrs(2,0))) in bits, n = 2..7
    StepGraphon w20 = make_wrs(2, 0);
    std::printf("inline constexpr double kRgEntropyWrs20[] = {\n");
    for (int n = 2; n <= 7; ++n)
        std::printf("    %s,  // n = %d\n", full(exact_rg_entropy(w20, n)).c_str(), n);
    std::printf("};\n\n");

    // convergence medians: triangle-free vs wrs(2,0), 200 samples, pinned seed
    const std::uint64_t conv_seed = 424242;
    ExperimentReport conv =
        run_convergence(HereditaryClass::kt_free(3), w20, {4, 6, 8}, 200, conv_seed);
    std::printf("inline constexpr std::uint64_t kConvergenceSeed = %llu;\n",
                static_cast<unsigned long long>(conv_seed));
    std::printf("inline constexpr double kConvergenceMedians[] = {  // n = 4, 6, 8\n");
    for (const auto& row : conv.rows)
        std::printf("    %s,\n", full(row["median"].get<double>()).c_str());
    std::printf("};\n\n");

    // convergence to the quasi-random limit: all graphs vs constant(1/2)
    ExperimentReport conv_all =
        run_convergence(HereditaryClass::all(), make_constant(0.5), {4, 6, 8}, 200, conv_seed);
    std::printf("inline constexpr double kConvergenceAllMedians[] = {  // n = 4, 6, 8\n");
    for (const auto& row : conv_all.rows)
        std::printf("    %s,\n", full(row["median"].get<double>()).c_str());
    std::printf("};\n\n");

    // regularity residuals over the pinned corpus, k = 2, 4, 8
    const std::uint64_t reg_seed = 777;
    ExperimentReport reg = run_regularity(corpus::regularity_subjects(), {2, 4, 8}, reg_seed);
    std::printf("inline constexpr std::uint64_t kRegularitySeed = %llu;\n",
                static_cast<unsigned long long>(reg_seed));
    std::printf("inline constexpr double kRegularityResiduals[] = {  // row-major (subject, k)\n");
    for (const auto& row : reg.rows)
        std::printf("    %s,  // %s k=%d\n", full(row["residual"].get<double>()).c_str(),
                    row["subject"].get<std::string>().c_str(), row["k"].get<int>());
    std::printf("};\n\n");

    // seeded single-subject regression: G(64,1/2) at k = 4
    RegularityResult single =
        weak_regularity(make_from_graph(sample(make_constant(0.5), 64, corpus::kCorpusSeed)), 4, 99);
    std::printf("inline constexpr double kRegularityG64K4 = %s;\n\n", full(single.residual).c_str());

    // exhaustive ball counts at n = 5 around wrs(2,0)
    BallCounts balls = count_balls(5, 0.3, w20);
    std::printf("inline constexpr std::uint64_t kBallsN5Hat = %llu;\n",
                static_cast<unsigned long long>(balls.n_hat));
    std::printf("inline constexpr std::uint64_t kBallsN5Full = %llu;\n\n",
                static_cast<unsigned long long>(balls.n_full));

    std::printf("}  // namespace goldens\n");
    return 0;
}
