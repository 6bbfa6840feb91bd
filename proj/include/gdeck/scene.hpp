#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdeck/frame.hpp"
#include "gdeck/vec.hpp"

namespace gdeck {

struct CameraIntrinsics {
    double fx = 525.0;
    double fy = 525.0;
    double cx = 320.0;
    double cy = 240.0;
};

struct Keyframe {
    uint64_t t_ms = 0;
    Vec3 pos;
};

/// Silhouette primitive used for the hand: a sphere reads as a clenched fist,
/// a flat five-point star plate as an open hand with spread fingers.
enum class HandShape : uint8_t { Fist, Open };

struct HandKeyframe {
    uint64_t t_ms = 0;
    Vec3 pos;
    HandShape shape = HandShape::Fist;  // shape of the segment starting here
};

struct HandPrimitive {
    double radius = 60.0;  // mm
    std::vector<HandKeyframe> keyframes;
    bool shared_with_hand_joint = true;
};

/// Fronto-parallel plane at depth z covering the pixel rectangle
/// [x0, x1) x [y0, y1).
struct BodyPlane {
    double z = 2500.0;
    int32_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

/// Declarative description of a synthetic capture session.
struct SceneScript {
    CameraIntrinsics camera;
    uint32_t width = 640;
    uint32_t height = 480;
    uint32_t fps = 30;
    uint64_t duration_ms = 1000;
    double noise_sigma_mm = 0.0;  // additive Gaussian depth noise, 0 disables
    std::optional<BodyPlane> body;
    std::optional<HandPrimitive> hand;
    std::array<std::vector<Keyframe>, kJointCount> joints;  // empty track = rest pose
};

/// Throws InvariantViolation when a scene invariant is broken (keyframe times
/// not strictly increasing or not spanning [0, duration], radius <= 0,
/// keyframe z <= radius, fps out of range).
void validate_scene(const SceneScript& scene);

/// Parses the JSON scene document. Malformed JSON or missing keys raise
/// SceneError whose message carries the parser's line/column position.
SceneScript parse_scene_json(const std::string& text);

/// Reads and parses a scene file; IoFailure if the file cannot be opened.
SceneScript load_scene_file(const std::string& path);

}  // namespace gdeck
