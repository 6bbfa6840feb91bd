#include "gdeck/segmentation.hpp"

#include <algorithm>
#include <cmath>

namespace gdeck {

AlphaMask compute_alpha(const DepthFrame& frame, const SegmentationParams& params) {
    AlphaMask mask;
    mask.width = frame.width;
    mask.height = frame.height;
    mask.alpha.assign(std::size_t(frame.width) * frame.height, 0);

    const double window = params.d_limit + params.u_limit;
    for (std::size_t i = 0; i < mask.alpha.size(); ++i) {
        if (frame.player_index[i] != params.target_player || frame.depth[i] == 0) continue;
        const double raw =
            255.0 - 255.0 * (double(frame.depth[i]) - params.depth_of_hand + params.d_limit) / window;
        mask.alpha[i] = uint8_t(std::clamp(std::trunc(raw), 0.0, 255.0));
    }
    return mask;
}

BinaryMask binarize_alpha(const AlphaMask& mask, uint8_t threshold) {
    BinaryMask out;
    out.width = mask.width;
    out.height = mask.height;
    out.bits.resize(mask.alpha.size());
    for (std::size_t i = 0; i < mask.alpha.size(); ++i) {
        out.bits[i] = mask.alpha[i] >= threshold ? 1 : 0;
    }
    return out;
}

BinaryMask smooth_mask(const BinaryMask& mask) {
    BinaryMask out;
    out.width = mask.width;
    out.height = mask.height;
    out.bits.assign(mask.bits.size(), 0);

    const int w = int(mask.width);
    const int h = int(mask.height);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int fg = 0;
            for (int ny = y - 1; ny <= y + 1; ++ny) {
                for (int nx = x - 1; nx <= x + 1; ++nx) {
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    fg += mask.bits[std::size_t(ny) * mask.width + std::size_t(nx)];
                }
            }
            out.bits[std::size_t(y) * mask.width + std::size_t(x)] = fg >= 5 ? 1 : 0;
        }
    }
    return out;
}

}  // namespace gdeck
