#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gdeck/vec.hpp"

namespace gdeck {

/// Tracked skeleton joints, in the fixed file/frame order.
enum class Joint : uint8_t {
    Head = 0,
    ShoulderCenter = 1,
    ElbowRight = 2,
    WristRight = 3,
    HandRight = 4,
};

inline constexpr std::size_t kJointCount = 5;

const char* to_string(Joint j);

/// Joint position in millimeters, camera space (+x right, +y down, +z away
/// from the camera). Stored single precision to match the stream file format.
struct Vec3f {
    float x = 0.0f;
    float y = 0.0f;
    float z = 0.0f;

    Vec3 to_vec3() const { return {x, y, z}; }

    bool operator==(const Vec3f&) const = default;
};

/// One depth image: per-pixel distance in millimeters (0 = no reading) plus
/// the per-pixel person label (0 = background, 1..6 = person id).
struct DepthFrame {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint16_t> depth;         // row-major, width*height
    std::vector<uint8_t> player_index;   // row-major, width*height
    uint64_t timestamp_ms = 0;

    uint16_t depth_at(uint32_t x, uint32_t y) const { return depth[std::size_t(y) * width + x]; }
    uint8_t index_at(uint32_t x, uint32_t y) const { return player_index[std::size_t(y) * width + x]; }

    bool operator==(const DepthFrame&) const = default;
};

struct SkeletonFrame {
    std::array<Vec3f, kJointCount> joints{};
    uint64_t timestamp_ms = 0;

    const Vec3f& joint(Joint j) const { return joints[static_cast<std::size_t>(j)]; }
    Vec3f& joint(Joint j) { return joints[static_cast<std::size_t>(j)]; }

    bool operator==(const SkeletonFrame&) const = default;
};

struct StreamFrame {
    DepthFrame depth;
    SkeletonFrame skeleton;

    bool operator==(const StreamFrame&) const = default;
};

/// A recorded sensor session: header dimensions plus depth/skeleton pairs.
struct RecordedStream {
    uint32_t width = 0;
    uint32_t height = 0;
    uint32_t fps = 30;
    std::vector<StreamFrame> frames;

    bool operator==(const RecordedStream&) const = default;
};

/// Checks every DepthFrame invariant and reports each violation found.
/// An empty result means the frame is valid.
std::vector<std::string> validate_frame(const DepthFrame& frame);

}  // namespace gdeck
