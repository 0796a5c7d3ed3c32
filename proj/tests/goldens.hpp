#pragma once

// Pinned-seed reference values. Regenerate with:
//   build/tools/goldens_gen > tests/goldens.hpp

#include <cstdint>

namespace goldens {

inline constexpr double kRgEntropyWrs20[] = {
    0.81127812445913283,  // n = 2
    2.396782221599798,  // n = 3
    4.7148495108567445,  // n = 4
    7.7139664216146517,  // n = 5
    11.335661063207375,  // n = 6
    15.521735242131662,  // n = 7
};

inline constexpr std::uint64_t kConvergenceSeed = 424242;
inline constexpr double kConvergenceMedians[] = {  // n = 4, 6, 8
    0.125,
    0.1111111111111111,
    0.078125,
};

inline constexpr double kConvergenceAllMedians[] = {  // n = 4, 6, 8
    0.15625,
    0.16666666666666671,
    0.1328125,
};

inline constexpr std::uint64_t kRegularitySeed = 777;
inline constexpr double kRegularityResiduals[] = {  // row-major (subject, k)
    0.035808086395263672,  // G(64,1/2) k=2
    0.03467559814453125,  // G(64,1/2) k=4
    0.03070068359375,  // G(64,1/2) k=8
    0.028564453124999726,  // G(48,wrs:2,0) k=2
    0.025372540509259047,  // G(48,wrs:2,0) k=4
    0.024197048611111098,  // G(48,wrs:2,0) k=8
    0.079413519965278775,  // G(48,wrs:3,2) k=2
    0.048665364583333807,  // G(48,wrs:3,2) k=4
    0.044415509259259404,  // G(48,wrs:3,2) k=8
    0.07421112060546875,  // G(32,turan:3) k=2
    0.049530029296875,  // G(32,turan:3) k=4
    0.0150146484375,  // G(32,turan:3) k=8
    0.045074462890625,  // G(32,string_a:1/16) k=2
    0.04522705078125,  // G(32,string_a:1/16) k=4
    0.0377197265625,  // G(32,string_a:1/16) k=8
    0.045428240740740686,  // G(24,1/4) k=2
    0.042438271604938356,  // G(24,1/4) k=4
    0.030864197530864203,  // G(24,1/4) k=8
    0.044812499999999866,  // G(40,1/2) k=2
    0.037700000000000032,  // G(40,1/2) k=4
    0.034549999999999942,  // G(40,1/2) k=8
    0,  // turan:2 k=2
    0,  // turan:2 k=4
    0,  // turan:2 k=8
    0.0625,  // turan:4 k=2
    0,  // turan:4 k=4
    0,  // turan:4 k=8
    0,  // wrs:2,1 k=2
    0,  // wrs:2,1 k=4
    0,  // wrs:2,1 k=8
    0.03125,  // wrs:4,2 k=2
    0,  // wrs:4,2 k=4
    0,  // wrs:4,2 k=8
    0.0390625,  // string_a:1/8 k=2
    0.0078125,  // string_a:1/8 k=4
    0,  // string_a:1/8 k=8
    0,  // constant:1/2 k=2
    0,  // constant:1/2 k=4
    0,  // constant:1/2 k=8
    0.052126497091126496,  // rand6a k=2
    0.043369224634039652,  // rand6a k=4
    0.024293361376931773,  // rand6a k=8
    0.050939442426211762,  // rand6b k=2
    0.031660701800450622,  // rand6b k=4
    0.022367618081535229,  // rand6b k=8
    0.044850958869156604,  // rand8a k=2
    0.034901790690372241,  // rand8a k=4
    0,  // rand8a k=8
    0.040375134609634412,  // rand8b k=2
    0.039499041006460969,  // rand8b k=4
    0,  // rand8b k=8
    0.041857717956791524,  // rand10 k=2
    0.045672888685781649,  // rand10 k=4
    0.027679415801849346,  // rand10 k=8
    0.036453354172721691,  // rand12 k=2
    0.03810457973744124,  // rand12 k=4
    0.032464340390133052,  // rand12 k=8
    0.027777777777777783,  // C12 k=2
    0.030864197530864196,  // C12 k=4
    0.027777777777777776,  // C12 k=8
};

inline constexpr double kRegularityG64K4 = 0.034493446350097656;

inline constexpr std::uint64_t kBallsN5Hat = 843;
inline constexpr std::uint64_t kBallsN5Full = 843;

}  // namespace goldens
