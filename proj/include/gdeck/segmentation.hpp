#pragma once

#include <cstdint>
#include <vector>

#include "gdeck/frame.hpp"

namespace gdeck {

/// Depth window around the tracked hand. depth_of_hand is usually fed from
/// the HAND_RIGHT joint's z-coordinate each frame; d_limit extends the window
/// toward the camera, u_limit away from it.
struct SegmentationParams {
    double depth_of_hand = 1200.0;  // mm
    double d_limit = 80.0;          // mm
    double u_limit = 120.0;         // mm
    uint8_t target_player = 1;
};

/// 8-bit transparency map: 255 at the near window edge, 0 at and beyond the
/// far edge, 0 everywhere outside the masked player.
struct AlphaMask {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> alpha;

    uint8_t at(uint32_t x, uint32_t y) const { return alpha[std::size_t(y) * width + x]; }
};

struct BinaryMask {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> bits;  // 0 = background, 1 = foreground

    bool at(uint32_t x, uint32_t y) const { return bits[std::size_t(y) * width + x] != 0; }
    void set(uint32_t x, uint32_t y, bool v) { bits[std::size_t(y) * width + x] = v ? 1 : 0; }

    bool operator==(const BinaryMask&) const = default;
};

/// Hand transparency per pixel:
///   alpha = 255 - 255 * (depth - depth_of_hand + d_limit) / (d_limit + u_limit)
/// evaluated in real arithmetic for pixels of the target player with a depth
/// reading, truncated toward zero, clamped to [0, 255]. Everything else is 0.
AlphaMask compute_alpha(const DepthFrame& frame, const SegmentationParams& params);

/// Foreground iff alpha >= threshold.
BinaryMask binarize_alpha(const AlphaMask& mask, uint8_t threshold = 1);

/// One pass of 3x3 median filtering: a pixel becomes foreground iff at least
/// 5 of its 9-neighborhood are foreground; neighbors outside the image count
/// as background.
BinaryMask smooth_mask(const BinaryMask& mask);

}  // namespace gdeck
