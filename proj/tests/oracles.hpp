#pragma once

// Independent brute-force oracles the implementation is checked against.
// These deliberately avoid the library's algorithms: definitions are applied
// literally, no scan tricks, no DP, no fill rules.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gdeck/contour.hpp"
#include "gdeck/dynamic_gesture.hpp"
#include "gdeck/segmentation.hpp"
#include "gdeck/static_gesture.hpp"

namespace gdeck::testing {

/// "Foreground pixel with a background 4-neighbor or on the image border."
inline std::set<std::pair<int, int>> contour_oracle(const BinaryMask& mask) {
    std::set<std::pair<int, int>> boundary;
    const int w = int(mask.width);
    const int h = int(mask.height);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.at(uint32_t(x), uint32_t(y))) continue;
            if (x == 0 || y == 0 || x == w - 1 || y == h - 1) {
                boundary.insert({x, y});
                continue;
            }
            const int nx[4] = {x - 1, x + 1, x, x};
            const int ny[4] = {y, y, y - 1, y + 1};
            for (int k = 0; k < 4; ++k) {
                if (!mask.at(uint32_t(nx[k]), uint32_t(ny[k]))) {
                    boundary.insert({x, y});
                    break;
                }
            }
        }
    }
    return boundary;
}

inline std::set<std::pair<int, int>> to_point_set(const Contour& contour) {
    std::set<std::pair<int, int>> points;
    for (const PixelCoord& p : contour.points) points.insert({p.x, p.y});
    return points;
}

/// Majority of the 9-neighborhood, out-of-image cells count as background.
inline BinaryMask median_oracle(const BinaryMask& mask) {
    BinaryMask out = mask;
    for (int y = 0; y < int(mask.height); ++y) {
        for (int x = 0; x < int(mask.width); ++x) {
            int count = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    const bool fg = nx >= 0 && ny >= 0 && nx < int(mask.width) && ny < int(mask.height) &&
                                    mask.at(uint32_t(nx), uint32_t(ny));
                    if (fg) ++count;
                }
            }
            out.set(uint32_t(x), uint32_t(y), count >= 5);
        }
    }
    return out;
}

/// Plain recursive edit distance (exponential; keep inputs short).
inline std::size_t levenshtein_oracle(const std::vector<Dir>& a, const std::vector<Dir>& b,
                                      std::size_t i = 0, std::size_t j = 0) {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    const std::size_t del = levenshtein_oracle(a, b, i + 1, j) + 1;
    const std::size_t ins = levenshtein_oracle(a, b, i, j + 1) + 1;
    const std::size_t sub = levenshtein_oracle(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    return std::min({del, ins, sub});
}

/// Scalar re-statement of the trajectory quantizer: explicit angle ranges
/// instead of sector rounding.
inline std::vector<Dir> quantize_oracle(const Trajectory& traj, double min_step) {
    std::vector<Dir> out;
    if (traj.samples.empty()) return out;
    double ax = traj.samples[0].pos.x;
    double ay = traj.samples[0].pos.y;
    double az = traj.samples[0].pos.z;
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const double dx = traj.samples[i].pos.x - ax;
        const double dy = traj.samples[i].pos.y - ay;
        const double dz = traj.samples[i].pos.z - az;
        if (std::sqrt(dx * dx + dy * dy + dz * dz) < min_step) continue;
        Dir d;
        if (std::abs(dz) > std::max(std::abs(dx), std::abs(dy))) {
            d = dz < 0.0 ? Dir::Push : Dir::Pull;
        } else {
            double deg = std::atan2(-dy, dx) * 180.0 / M_PI;  // N = -y
            if (deg < -22.5) deg += 360.0;
            if (deg <= 22.5) d = Dir::E;
            else if (deg <= 67.5) d = Dir::NE;
            else if (deg <= 112.5) d = Dir::N;
            else if (deg <= 157.5) d = Dir::NW;
            else if (deg <= 202.5) d = Dir::W;
            else if (deg <= 247.5) d = Dir::SW;
            else if (deg <= 292.5) d = Dir::S;
            else d = Dir::SE;
        }
        if (out.empty() || out.back() != d) out.push_back(d);
        ax = traj.samples[i].pos.x;
        ay = traj.samples[i].pos.y;
        az = traj.samples[i].pos.z;
    }
    return out;
}

/// Two-state press machine driven by pose edges: the independent model for
/// click discipline.
struct ClickOracle {
    HandPose prev = HandPose::Unknown;
    bool down = false;

    /// Returns (click_down, click_up) expected for this frame.
    std::pair<bool, bool> step(HandPose pose) {
        bool click_down = false;
        bool click_up = false;
        if (prev == HandPose::Open && pose == HandPose::Fist && !down) {
            down = true;
            click_down = true;
        } else if (prev == HandPose::Fist && pose == HandPose::Open && down) {
            down = false;
            click_up = true;
        }
        prev = pose;
        return {click_down, click_up};
    }
};

/// Point-in-triangle by signed areas, boundary inclusive.
inline bool point_in_triangle_oracle(double px, double py, double x0, double y0, double x1, double y1,
                                     double x2, double y2) {
    const double a0 = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0);
    const double a1 = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1);
    const double a2 = (x0 - x2) * (py - y2) - (y0 - y2) * (px - x2);
    const bool non_neg = a0 >= 0.0 && a1 >= 0.0 && a2 >= 0.0;
    const bool non_pos = a0 <= 0.0 && a1 <= 0.0 && a2 <= 0.0;
    const double area = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0);
    if (area == 0.0) return false;  // degenerate triangles cover nothing
    return non_neg || non_pos;
}

/// Random binary mask for property sweeps.
inline BinaryMask random_mask(std::mt19937& rng, uint32_t max_side = 64) {
    std::uniform_int_distribution<uint32_t> side(1, max_side);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    BinaryMask mask;
    mask.width = side(rng);
    mask.height = side(rng);
    mask.bits.resize(std::size_t(mask.width) * mask.height);
    std::bernoulli_distribution fg(density(rng));
    for (auto& b : mask.bits) b = fg(rng) ? 1 : 0;
    return mask;
}

}  // namespace gdeck::testing
