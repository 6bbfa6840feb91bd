#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gdeck/segmentation.hpp"

namespace gdeck {

struct PixelCoord {
    int32_t x = 0;
    int32_t y = 0;

    auto operator<=>(const PixelCoord&) const = default;
};

/// Boundary pixels of a binary silhouette; points are sorted row-major and
/// unique, so equal contours compare equal.
struct Contour {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<PixelCoord> points;

    bool operator==(const Contour&) const = default;
};

/// Scans each row left-to-right and right-to-left and each column top-down
/// and bottom-up; whenever two 4-adjacent pixels differ, the foreground pixel
/// of the pair is marked as boundary. Foreground pixels on the image border
/// are boundary. The union over the four scans is returned.
Contour extract_contour(const BinaryMask& mask);

}  // namespace gdeck
