#pragma once

#include <cstdint>

#include "gdeck/contour.hpp"
#include "gdeck/segmentation.hpp"

namespace gdeck {

enum class HandPose : uint8_t { Unknown, Fist, Open };

const char* to_string(HandPose pose);

/// Shape summary of a silhouette. Compactness is area over the area of the
/// circle centered at the centroid that encloses every contour point: close
/// to 1 for a fist, well below for spread fingers.
struct PoseFeatures {
    uint64_t area = 0;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    double enclosing_radius = 0.0;
    double compactness = 0.0;
};

struct PoseThresholds {
    double fist_enter = 0.70;
    double open_enter = 0.50;
    uint64_t min_area = 200;
};

/// The contour must come from the same mask.
PoseFeatures compute_features(const BinaryMask& mask, const Contour& contour);

/// Area below min_area is Unknown. Otherwise hysteresis: compactness at or
/// above fist_enter reports Fist, at or below open_enter reports Open, and
/// the dead band between them repeats `previous`.
HandPose classify_pose(const PoseFeatures& features, HandPose previous, const PoseThresholds& config = {});

}  // namespace gdeck
