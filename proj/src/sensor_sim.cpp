#include "gdeck/sensor_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gdeck/error.hpp"

namespace gdeck {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Five-point star silhouette for the open hand, outer radius 2r, inner 0.8r,
// one point up (-y). Flat plate at the front of the hand sphere.
constexpr int kStarPoints = 5;
constexpr double kStarOuterScale = 2.0;
constexpr double kStarInnerScale = 0.8;

Vec3 sample_keys(const std::vector<Keyframe>& keys, uint64_t t_ms) {
    if (keys.size() == 1 || t_ms <= keys.front().t_ms) return keys.front().pos;
    if (t_ms >= keys.back().t_ms) return keys.back().pos;
    std::size_t hi = 1;
    while (keys[hi].t_ms < t_ms) ++hi;
    const Keyframe& a = keys[hi - 1];
    const Keyframe& b = keys[hi];
    const double u = double(t_ms - a.t_ms) / double(b.t_ms - a.t_ms);
    return lerp(a.pos, b.pos, u);
}

bool point_in_star(double qx, double qy, double hand_radius) {
    const double outer = kStarOuterScale * hand_radius;
    const double inner = kStarInnerScale * hand_radius;
    double vx[2 * kStarPoints];
    double vy[2 * kStarPoints];
    for (int k = 0; k < 2 * kStarPoints; ++k) {
        const double r = (k % 2 == 0) ? outer : inner;
        const double angle = -kPi / 2.0 + k * kPi / kStarPoints;
        vx[k] = r * std::cos(angle);
        vy[k] = r * std::sin(angle);
    }
    // even-odd crossing test
    bool inside = false;
    for (int i = 0, j = 2 * kStarPoints - 1; i < 2 * kStarPoints; j = i++) {
        if ((vy[i] > qy) != (vy[j] > qy) &&
            qx < (vx[j] - vx[i]) * (qy - vy[i]) / (vy[j] - vy[i]) + vx[i]) {
            inside = !inside;
        }
    }
    return inside;
}

void check_time(const SceneScript& scene, uint64_t t_ms) {
    if (t_ms > scene.duration_ms) {
        throw Error(ErrorCode::TimeOutOfRange,
                    "t=" + std::to_string(t_ms) + " outside scene duration " +
                        std::to_string(scene.duration_ms));
    }
}

SkeletonFrame rest_pose() {
    SkeletonFrame s;
    s.joint(Joint::Head) = {0.0f, -300.0f, 2000.0f};
    s.joint(Joint::ShoulderCenter) = {0.0f, 0.0f, 2000.0f};
    s.joint(Joint::ElbowRight) = {150.0f, 100.0f, 1800.0f};
    s.joint(Joint::WristRight) = {250.0f, 100.0f, 1500.0f};
    s.joint(Joint::HandRight) = {300.0f, 100.0f, 1400.0f};
    return s;
}

}  // namespace

Vec3 hand_center_at(const HandPrimitive& hand, uint64_t t_ms) {
    if (hand.keyframes.size() == 1 || t_ms <= hand.keyframes.front().t_ms) {
        return hand.keyframes.front().pos;
    }
    if (t_ms >= hand.keyframes.back().t_ms) return hand.keyframes.back().pos;
    std::size_t hi = 1;
    while (hand.keyframes[hi].t_ms < t_ms) ++hi;
    const HandKeyframe& a = hand.keyframes[hi - 1];
    const HandKeyframe& b = hand.keyframes[hi];
    const double u = double(t_ms - a.t_ms) / double(b.t_ms - a.t_ms);
    return lerp(a.pos, b.pos, u);
}

HandShape hand_shape_at(const HandPrimitive& hand, uint64_t t_ms) {
    HandShape shape = hand.keyframes.front().shape;
    for (const HandKeyframe& k : hand.keyframes) {
        if (k.t_ms <= t_ms) shape = k.shape;
    }
    return shape;
}

DepthFrame render_depth_frame(const SceneScript& scene, uint64_t t_ms) {
    check_time(scene, t_ms);

    DepthFrame frame;
    frame.width = scene.width;
    frame.height = scene.height;
    frame.timestamp_ms = t_ms;
    frame.depth.assign(std::size_t(scene.width) * scene.height, 0);
    frame.player_index.assign(std::size_t(scene.width) * scene.height, 0);

    const bool has_hand = scene.hand.has_value();
    Vec3 center;
    HandShape shape = HandShape::Fist;
    double radius = 0.0;
    if (has_hand) {
        center = hand_center_at(*scene.hand, t_ms);
        shape = hand_shape_at(*scene.hand, t_ms);
        radius = scene.hand->radius;
    }

    for (uint32_t py = 0; py < scene.height; ++py) {
        for (uint32_t px = 0; px < scene.width; ++px) {
            const double dx = (double(px) - scene.camera.cx) / scene.camera.fx;
            const double dy = (double(py) - scene.camera.cy) / scene.camera.fy;
            double best = 0.0;  // 0 = no hit; otherwise z of nearest hit

            if (has_hand) {
                if (shape == HandShape::Fist) {
                    // ray t*(dx,dy,1) against the sphere; hit z equals t
                    const double a = dx * dx + dy * dy + 1.0;
                    const double b = -2.0 * (dx * center.x + dy * center.y + center.z);
                    const double c = center.dot(center) - radius * radius;
                    const double disc = b * b - 4.0 * a * c;
                    if (disc >= 0.0) {
                        const double t = (-b - std::sqrt(disc)) / (2.0 * a);
                        if (t > 0.0) best = t;
                    }
                } else {
                    const double zp = center.z - radius;
                    if (point_in_star(dx * zp - center.x, dy * zp - center.y, radius)) best = zp;
                }
            }

            if (scene.body) {
                const BodyPlane& body = *scene.body;
                if (int32_t(px) >= body.x0 && int32_t(px) < body.x1 && int32_t(py) >= body.y0 &&
                    int32_t(py) < body.y1) {
                    if (best == 0.0 || body.z < best) best = body.z;
                }
            }

            if (best > 0.0) {
                const std::size_t idx = std::size_t(py) * scene.width + px;
                frame.depth[idx] = uint16_t(std::clamp<long long>(std::llround(best), 1, 65535));
                frame.player_index[idx] = 1;
            }
        }
    }
    return frame;
}

SkeletonFrame skeleton_from_scene(const SceneScript& scene, uint64_t t_ms) {
    check_time(scene, t_ms);

    SkeletonFrame skeleton = rest_pose();
    skeleton.timestamp_ms = t_ms;
    for (std::size_t i = 0; i < kJointCount; ++i) {
        const auto& track = scene.joints[i];
        if (track.empty()) continue;
        const Vec3 p = sample_keys(track, t_ms);
        skeleton.joints[i] = {float(p.x), float(p.y), float(p.z)};
    }
    if (scene.hand && scene.hand->shared_with_hand_joint) {
        const Vec3 c = hand_center_at(*scene.hand, t_ms);
        skeleton.joint(Joint::HandRight) = {float(c.x), float(c.y), float(c.z)};
    }
    return skeleton;
}

RecordedStream synthesize_stream(const SceneScript& scene, uint64_t seed) {
    validate_scene(scene);

    RecordedStream stream;
    stream.width = scene.width;
    stream.height = scene.height;
    stream.fps = scene.fps;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, scene.noise_sigma_mm);

    const uint64_t count = scene.duration_ms * scene.fps / 1000 + 1;
    stream.frames.reserve(count);
    for (uint64_t k = 0; k < count; ++k) {
        const uint64_t t = k * 1000 / scene.fps;
        StreamFrame f;
        f.depth = render_depth_frame(scene, t);
        f.skeleton = skeleton_from_scene(scene, t);
        if (scene.noise_sigma_mm > 0.0) {
            for (uint16_t& d : f.depth.depth) {
                if (d == 0) continue;
                d = uint16_t(std::clamp<long long>(std::llround(double(d) + noise(rng)), 1, 65535));
            }
        }
        stream.frames.push_back(std::move(f));
    }
    return stream;
}

}  // namespace gdeck
