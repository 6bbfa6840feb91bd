#include "gdeck/frame.hpp"

namespace gdeck {

const char* to_string(Joint j) {
    switch (j) {
        case Joint::Head: return "HEAD";
        case Joint::ShoulderCenter: return "SHOULDER_CENTER";
        case Joint::ElbowRight: return "ELBOW_RIGHT";
        case Joint::WristRight: return "WRIST_RIGHT";
        case Joint::HandRight: return "HAND_RIGHT";
    }
    return "?";
}

std::vector<std::string> validate_frame(const DepthFrame& frame) {
    std::vector<std::string> violations;
    if (frame.width < 1 || frame.height < 1) {
        violations.push_back("frame dimensions must be at least 1x1, got " +
                             std::to_string(frame.width) + "x" + std::to_string(frame.height));
        return violations;
    }
    const std::size_t expected = std::size_t(frame.width) * frame.height;
    if (frame.depth.size() != expected) {
        violations.push_back("depth array has " + std::to_string(frame.depth.size()) +
                             " entries, expected " + std::to_string(expected));
    }
    if (frame.player_index.size() != expected) {
        violations.push_back("player_index array has " + std::to_string(frame.player_index.size()) +
                             " entries, expected " + std::to_string(expected));
    }
    if (frame.depth.size() == expected && frame.player_index.size() == expected) {
        for (uint32_t y = 0; y < frame.height; ++y) {
            for (uint32_t x = 0; x < frame.width; ++x) {
                if (frame.index_at(x, y) > 0 && frame.depth_at(x, y) == 0) {
                    violations.push_back("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                                         ") has player_index " + std::to_string(frame.index_at(x, y)) +
                                         " but depth 0");
                }
            }
        }
    }
    return violations;
}

}  // namespace gdeck
