#include "gdeck/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gdeck/error.hpp"

namespace gdeck {

namespace {

using nlohmann::json;

void check_keyframe_span(const std::string& what, uint64_t first_t, uint64_t last_t, uint64_t duration_ms) {
    if (first_t != 0) {
        throw Error(ErrorCode::InvariantViolation, what + ": first keyframe must be at t=0");
    }
    if (last_t != duration_ms) {
        throw Error(ErrorCode::InvariantViolation,
                    what + ": last keyframe at t=" + std::to_string(last_t) + " must equal duration_ms=" +
                        std::to_string(duration_ms));
    }
}

template <typename Key>
void check_strictly_increasing(const std::string& what, const std::vector<Key>& keys) {
    for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[i].t_ms <= keys[i - 1].t_ms) {
            throw Error(ErrorCode::InvariantViolation, what + ": keyframe times must strictly increase");
        }
    }
}

Vec3 parse_xyz(const json& arr) {
    return {arr.at(1).get<double>(), arr.at(2).get<double>(), arr.at(3).get<double>()};
}

std::optional<Joint> joint_by_name(const std::string& name) {
    for (std::size_t i = 0; i < kJointCount; ++i) {
        if (name == to_string(static_cast<Joint>(i))) return static_cast<Joint>(i);
    }
    return std::nullopt;
}

}  // namespace

void validate_scene(const SceneScript& scene) {
    if (scene.width < 1 || scene.height < 1) {
        throw Error(ErrorCode::InvariantViolation, "scene resolution must be at least 1x1");
    }
    if (scene.fps < 1 || scene.fps > 1000) {
        throw Error(ErrorCode::InvariantViolation, "scene fps must be in 1..1000");
    }
    if (scene.camera.fx <= 0.0 || scene.camera.fy <= 0.0) {
        throw Error(ErrorCode::InvariantViolation, "camera focal lengths must be positive");
    }
    if (scene.noise_sigma_mm < 0.0) {
        throw Error(ErrorCode::InvariantViolation, "noise sigma must be non-negative");
    }
    if (scene.hand) {
        const HandPrimitive& hand = *scene.hand;
        if (hand.radius <= 0.0) {
            throw Error(ErrorCode::InvariantViolation, "hand radius must be positive");
        }
        if (hand.keyframes.empty()) {
            throw Error(ErrorCode::InvariantViolation, "hand needs at least one keyframe");
        }
        check_strictly_increasing("hand", hand.keyframes);
        check_keyframe_span("hand", hand.keyframes.front().t_ms, hand.keyframes.back().t_ms, scene.duration_ms);
        for (const HandKeyframe& k : hand.keyframes) {
            if (k.pos.z <= hand.radius) {
                throw Error(ErrorCode::InvariantViolation,
                            "hand keyframe at t=" + std::to_string(k.t_ms) + " has z <= radius");
            }
        }
    }
    for (std::size_t i = 0; i < kJointCount; ++i) {
        const auto& track = scene.joints[i];
        if (track.empty()) continue;
        const std::string what = std::string("joint ") + to_string(static_cast<Joint>(i));
        check_strictly_increasing(what, track);
        check_keyframe_span(what, track.front().t_ms, track.back().t_ms, scene.duration_ms);
        for (const Keyframe& k : track) {
            if (k.pos.z < 0.0) {
                throw Error(ErrorCode::InvariantViolation, what + ": keyframe z must be >= 0");
            }
        }
    }
    if (scene.body) {
        if (scene.body->z <= 0.0) {
            throw Error(ErrorCode::InvariantViolation, "body plane depth must be positive");
        }
        if (scene.body->x1 <= scene.body->x0 || scene.body->y1 <= scene.body->y0) {
            throw Error(ErrorCode::InvariantViolation, "body rect must be non-empty");
        }
    }
}

SceneScript parse_scene_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SceneError, e.what());
    }

    SceneScript scene;
    try {
        if (doc.contains("camera")) {
            const json& cam = doc.at("camera");
            scene.camera.fx = cam.at("fx").get<double>();
            scene.camera.fy = cam.at("fy").get<double>();
            scene.camera.cx = cam.at("cx").get<double>();
            scene.camera.cy = cam.at("cy").get<double>();
        }
        if (doc.contains("resolution")) {
            scene.width = doc.at("resolution").at("width").get<uint32_t>();
            scene.height = doc.at("resolution").at("height").get<uint32_t>();
        }
        scene.fps = doc.value("fps", scene.fps);
        scene.duration_ms = doc.value("duration_ms", scene.duration_ms);
        scene.noise_sigma_mm = doc.value("noise_sigma_mm", 0.0);

        if (doc.contains("body") && !doc.at("body").is_null()) {
            const json& body = doc.at("body");
            BodyPlane plane;
            plane.z = body.at("z").get<double>();
            const json& rect = body.at("rect");
            plane.x0 = rect.at(0).get<int32_t>();
            plane.y0 = rect.at(1).get<int32_t>();
            plane.x1 = rect.at(2).get<int32_t>();
            plane.y1 = rect.at(3).get<int32_t>();
            scene.body = plane;
        }

        if (doc.contains("hand") && !doc.at("hand").is_null()) {
            const json& hand = doc.at("hand");
            HandPrimitive prim;
            prim.radius = hand.at("radius").get<double>();
            prim.shared_with_hand_joint = hand.value("shared_with_hand_joint", true);
            HandShape shape = HandShape::Fist;
            for (const json& k : hand.at("keyframes")) {
                HandKeyframe key;
                key.t_ms = k.at(0).get<uint64_t>();
                key.pos = parse_xyz(k);
                if (k.size() > 4) {
                    const std::string s = k.at(4).get<std::string>();
                    if (s == "fist") shape = HandShape::Fist;
                    else if (s == "open") shape = HandShape::Open;
                    else throw Error(ErrorCode::SceneError, "unknown hand shape '" + s + "'");
                }
                key.shape = shape;  // omitted shape inherits the previous segment's
                prim.keyframes.push_back(key);
            }
            scene.hand = std::move(prim);
        }

        if (doc.contains("joints")) {
            for (const auto& [name, arr] : doc.at("joints").items()) {
                auto joint = joint_by_name(name);
                if (!joint) throw Error(ErrorCode::SceneError, "unknown joint name '" + name + "'");
                auto& track = scene.joints[static_cast<std::size_t>(*joint)];
                for (const json& k : arr) {
                    track.push_back({k.at(0).get<uint64_t>(), parse_xyz(k)});
                }
            }
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SceneError, e.what());
    }

    validate_scene(scene);
    return scene;
}

SceneScript load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open scene file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_json(buf.str());
}

}  // namespace gdeck
