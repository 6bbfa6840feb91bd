#include "gdeck/contour.hpp"

namespace gdeck {

namespace {

// Marks the foreground pixel of a differing 4-adjacent pair.
void mark_pair(const BinaryMask& mask, std::vector<uint8_t>& boundary, uint32_t x0, uint32_t y0, uint32_t x1,
               uint32_t y1) {
    const bool a = mask.at(x0, y0);
    const bool b = mask.at(x1, y1);
    if (a == b) return;
    if (a) {
        boundary[std::size_t(y0) * mask.width + x0] = 1;
    } else {
        boundary[std::size_t(y1) * mask.width + x1] = 1;
    }
}

}  // namespace

Contour extract_contour(const BinaryMask& mask) {
    Contour contour;
    contour.width = mask.width;
    contour.height = mask.height;
    if (mask.width == 0 || mask.height == 0) return contour;

    std::vector<uint8_t> boundary(mask.bits.size(), 0);
    const uint32_t w = mask.width;
    const uint32_t h = mask.height;

    // horizontal scans
    for (uint32_t y = 0; y < h; ++y) {
        for (uint32_t x = 1; x < w; ++x) mark_pair(mask, boundary, x - 1, y, x, y);
        for (uint32_t x = w; x-- > 1;) mark_pair(mask, boundary, x, y, x - 1, y);
    }
    // vertical scans
    for (uint32_t x = 0; x < w; ++x) {
        for (uint32_t y = 1; y < h; ++y) mark_pair(mask, boundary, x, y - 1, x, y);
        for (uint32_t y = h; y-- > 1;) mark_pair(mask, boundary, x, y, x, y - 1);
    }
    // foreground pixels on the image border
    for (uint32_t x = 0; x < w; ++x) {
        if (mask.at(x, 0)) boundary[x] = 1;
        if (mask.at(x, h - 1)) boundary[std::size_t(h - 1) * w + x] = 1;
    }
    for (uint32_t y = 0; y < h; ++y) {
        if (mask.at(0, y)) boundary[std::size_t(y) * w] = 1;
        if (mask.at(w - 1, y)) boundary[std::size_t(y) * w + w - 1] = 1;
    }

    for (uint32_t y = 0; y < h; ++y) {
        for (uint32_t x = 0; x < w; ++x) {
            if (boundary[std::size_t(y) * w + x]) {
                contour.points.push_back({int32_t(x), int32_t(y)});
            }
        }
    }
    return contour;
}

}  // namespace gdeck
