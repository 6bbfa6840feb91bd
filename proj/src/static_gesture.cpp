#include "gdeck/static_gesture.hpp"

#include <cmath>

namespace gdeck {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* to_string(HandPose pose) {
    switch (pose) {
        case HandPose::Unknown: return "UNKNOWN";
        case HandPose::Fist: return "FIST";
        case HandPose::Open: return "OPEN";
    }
    return "?";
}

PoseFeatures compute_features(const BinaryMask& mask, const Contour& contour) {
    PoseFeatures f;
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (uint32_t y = 0; y < mask.height; ++y) {
        for (uint32_t x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y)) continue;
            ++f.area;
            sum_x += x;
            sum_y += y;
        }
    }
    if (f.area == 0) return f;

    f.centroid_x = sum_x / double(f.area);
    f.centroid_y = sum_y / double(f.area);
    for (const PixelCoord& p : contour.points) {
        const double dx = p.x - f.centroid_x;
        const double dy = p.y - f.centroid_y;
        f.enclosing_radius = std::max(f.enclosing_radius, std::sqrt(dx * dx + dy * dy));
    }
    // a single pixel has radius 0; treat it as perfectly compact
    f.compactness = f.enclosing_radius > 0.0
                        ? double(f.area) / (kPi * f.enclosing_radius * f.enclosing_radius)
                        : 1.0;
    return f;
}

HandPose classify_pose(const PoseFeatures& features, HandPose previous, const PoseThresholds& config) {
    if (features.area < config.min_area) return HandPose::Unknown;
    if (features.compactness >= config.fist_enter) return HandPose::Fist;
    if (features.compactness <= config.open_enter) return HandPose::Open;
    return previous;
}

}  // namespace gdeck
