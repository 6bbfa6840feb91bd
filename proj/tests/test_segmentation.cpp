#include <doctest.h>

#include <cmath>
#include <random>

#include "gdeck/segmentation.hpp"
#include "oracles.hpp"

using namespace gdeck;
using gdeck::testing::median_oracle;

namespace {

DepthFrame single_pixel_frame(uint16_t depth, uint8_t player) {
    DepthFrame f;
    f.width = 1;
    f.height = 1;
    f.depth = {depth};
    f.player_index = {player};
    return f;
}

uint8_t alpha_of(uint16_t depth, const SegmentationParams& params) {
    return compute_alpha(single_pixel_frame(depth, params.target_player), params).alpha[0];
}

// reference evaluation, plain floating point
double raw_alpha(double depth, const SegmentationParams& p) {
    return 255.0 - 255.0 * (depth - p.depth_of_hand + p.d_limit) / (p.d_limit + p.u_limit);
}

BinaryMask mask_from_rows(const std::vector<std::string>& rows) {
    BinaryMask m;
    m.height = uint32_t(rows.size());
    m.width = uint32_t(rows[0].size());
    for (const std::string& row : rows) {
        for (char c : row) m.bits.push_back(c == '#' ? 1 : 0);
    }
    return m;
}

}  // namespace

TEST_CASE("alpha is 255 at the near window edge and 0 at the far edge") {
    SegmentationParams p{1200.0, 80.0, 120.0, 1};
    CHECK(alpha_of(1120, p) == 255);  // depth_of_hand - d_limit
    CHECK(alpha_of(1320, p) == 0);    // depth_of_hand + u_limit
}

TEST_CASE("worked mid-window value: 255 - 255*80/200 = 153") {
    SegmentationParams p{1200.0, 80.0, 120.0, 1};
    CHECK(raw_alpha(1200.0, p) == doctest::Approx(153.0));
    CHECK(alpha_of(1200, p) == 153);
}

TEST_CASE("values outside the window clamp to the 0..255 range") {
    SegmentationParams p{1200.0, 80.0, 120.0, 1};
    CHECK(raw_alpha(1000.0, p) > 255.0);
    CHECK(alpha_of(1000, p) == 255);
    CHECK(raw_alpha(2000.0, p) < 0.0);
    CHECK(alpha_of(2000, p) == 0);
}

TEST_CASE("truncation is toward zero after real evaluation") {
    // depth 1201: raw = 255 - 255*81/200 = 151.725 -> 151
    SegmentationParams p{1200.0, 80.0, 120.0, 1};
    CHECK(raw_alpha(1201.0, p) == doctest::Approx(151.725));
    CHECK(alpha_of(1201, p) == 151);
}

TEST_CASE("other players and missing readings are masked to 0") {
    SegmentationParams p{1200.0, 80.0, 120.0, 1};
    CHECK(compute_alpha(single_pixel_frame(1200, 2), p).alpha[0] == 0);
    CHECK(compute_alpha(single_pixel_frame(1200, 0), p).alpha[0] == 0);
    CHECK(compute_alpha(single_pixel_frame(0, 1), p).alpha[0] == 0);
}

TEST_CASE("alpha is monotone non-increasing in depth and always in range") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> hand(400.0, 3000.0);
    std::uniform_real_distribution<double> limit(1.0, 500.0);
    for (int trial = 0; trial < 200; ++trial) {
        SegmentationParams p{hand(rng), limit(rng), limit(rng), 1};
        int prev = 255;
        for (uint16_t depth = 1; depth < 4000; depth += 7) {
            const int a = alpha_of(depth, p);
            CHECK(a <= prev);
            CHECK(a >= 0);
            CHECK(a <= 255);
            prev = a;
        }
    }
}

TEST_CASE("window soundness: positive alpha implies depth inside the far limit") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> depth(1, 4000);
    std::uniform_int_distribution<int> player(0, 3);
    SegmentationParams p{1200.0, 80.0, 120.0, 1};

    DepthFrame f;
    f.width = 64;
    f.height = 1;
    for (int i = 0; i < 64; ++i) {
        f.depth.push_back(uint16_t(depth(rng)));
        f.player_index.push_back(uint8_t(player(rng)));
    }
    const AlphaMask mask = compute_alpha(f, p);
    for (int i = 0; i < 64; ++i) {
        if (mask.alpha[i] > 0) {
            CHECK(f.player_index[i] == p.target_player);
            CHECK(double(f.depth[i]) < p.depth_of_hand + p.u_limit);
        }
    }
}

TEST_CASE("binarize thresholds with >= semantics") {
    AlphaMask mask;
    mask.width = 3;
    mask.height = 1;
    mask.alpha = {0, 100, 255};

    CHECK(binarize_alpha(mask, 0).bits == std::vector<uint8_t>{1, 1, 1});
    CHECK(binarize_alpha(mask, 255).bits == std::vector<uint8_t>{0, 0, 1});
    CHECK(binarize_alpha(mask, 100).bits == std::vector<uint8_t>{0, 1, 1});
    CHECK(binarize_alpha(mask, 101).bits == std::vector<uint8_t>{0, 0, 1});
}

TEST_CASE("smoothing removes an isolated pixel") {
    BinaryMask m = mask_from_rows({
        ".....",
        ".....",
        "..#..",
        ".....",
        ".....",
    });
    const BinaryMask smoothed = smooth_mask(m);
    for (uint8_t b : smoothed.bits) CHECK(b == 0);
    CHECK(smoothed == median_oracle(m));
}

TEST_CASE("smoothing keeps a square's interior and edges, strips its corners") {
    BinaryMask m;
    m.width = 14;
    m.height = 14;
    m.bits.assign(14 * 14, 0);
    for (uint32_t y = 2; y < 12; ++y) {
        for (uint32_t x = 2; x < 12; ++x) m.set(x, y, true);
    }
    const BinaryMask smoothed = smooth_mask(m);
    CHECK(smoothed == median_oracle(m));
    CHECK_FALSE(smoothed.at(2, 2));
    CHECK_FALSE(smoothed.at(11, 2));
    CHECK_FALSE(smoothed.at(2, 11));
    CHECK_FALSE(smoothed.at(11, 11));
    CHECK(smoothed.at(3, 2));   // edge survives
    CHECK(smoothed.at(5, 5));   // interior survives
    // nothing else changed
    for (uint32_t y = 0; y < 14; ++y) {
        for (uint32_t x = 0; x < 14; ++x) {
            const bool corner = (x == 2 || x == 11) && (y == 2 || y == 11);
            if (!corner) CHECK(smoothed.at(x, y) == m.at(x, y));
        }
    }
}

TEST_CASE("smoothing is the identity on an all-background mask") {
    BinaryMask m;
    m.width = 9;
    m.height = 7;
    m.bits.assign(63, 0);
    CHECK(smooth_mask(m) == m);
}

TEST_CASE("smoothing matches the majority oracle and fixes uniform neighborhoods") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const BinaryMask m = gdeck::testing::random_mask(rng, 32);
        const BinaryMask smoothed = smooth_mask(m);
        CHECK(smoothed == median_oracle(m));

        // a pixel whose full 3x3 neighborhood is uniform never changes
        for (int y = 1; y + 1 < int(m.height); ++y) {
            for (int x = 1; x + 1 < int(m.width); ++x) {
                bool uniform = true;
                for (int dy = -1; dy <= 1 && uniform; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (m.at(uint32_t(x + dx), uint32_t(y + dy)) != m.at(uint32_t(x), uint32_t(y))) {
                            uniform = false;
                            break;
                        }
                    }
                }
                if (uniform) CHECK(smoothed.at(uint32_t(x), uint32_t(y)) == m.at(uint32_t(x), uint32_t(y)));
            }
        }
    }
}
