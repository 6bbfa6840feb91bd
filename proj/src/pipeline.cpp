#include "gdeck/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gdeck/contour.hpp"
#include "gdeck/dynamic_gesture.hpp"
#include "gdeck/error.hpp"
#include "gdeck/scene.hpp"
#include "gdeck/sensor_sim.hpp"

namespace gdeck {

namespace {

using nlohmann::json;

/// Applies routed render commands: rotation steps re-render the model, zoom
/// scales the perspective parameter.
class RenderTarget {
public:
    RenderTarget(const RendererConfig& config, std::string out_dir)
        : config_(config), orientation_(config.initial), f_(config.f), out_dir_(std::move(out_dir)) {}

    void handle(const CommandEvent& event) {
        if (event.kind == CommandKind::RotateModel) {
            orientation_.anglex += event.dax;
            orientation_.angley += event.day;
        } else if (event.kind == CommandKind::Zoom) {
            f_ = std::max(1.0, event.zoom == ZoomDirection::In ? f_ * 1.25 : f_ / 1.25);
        } else {
            return;
        }
        char name[32];
        std::snprintf(name, sizeof name, "render_%04llu.ppm", (unsigned long long)++rendered_);
        const FrameBuffer fb = render_sphere_frame(config_.num, config_.radius, Camera{f_}, orientation_,
                                                   config_.width, config_.height);
        write_image(fb, out_dir_ + "/" + name);
    }

    uint64_t rendered() const { return rendered_; }

private:
    RendererConfig config_;
    Orientation orientation_;
    double f_;
    std::string out_dir_;
    uint64_t rendered_ = 0;
};

}  // namespace

RouteTable RunConfig::default_routes() {
    return {
        {"NEXT_SLIDE", {"slides"}},
        {"PREV_SLIDE", {"slides"}},
        {"ROTATE_MODEL", {"renderer"}},
        {"ZOOM", {"renderer"}},
    };
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open config " + path);
    json doc;
    try {
        doc = json::parse(in);
        RunConfig cfg;
        cfg.scene_path = doc.at("scene").get<std::string>();
        cfg.out_dir = doc.at("out_dir").get<std::string>();
        cfg.library_path = doc.value("gesture_library", "");
        cfg.seed = doc.value("seed", uint64_t{0});

        if (doc.contains("segmentation")) {
            const json& s = doc.at("segmentation");
            cfg.segmentation.d_limit = s.value("d_limit", cfg.segmentation.d_limit);
            cfg.segmentation.u_limit = s.value("u_limit", cfg.segmentation.u_limit);
            cfg.segmentation.threshold = uint8_t(s.value("threshold", int(cfg.segmentation.threshold)));
            cfg.segmentation.target_player =
                uint8_t(s.value("target_player", int(cfg.segmentation.target_player)));
        }
        if (doc.contains("pose")) {
            const json& p = doc.at("pose");
            cfg.pose.fist_enter = p.value("fist_enter", cfg.pose.fist_enter);
            cfg.pose.open_enter = p.value("open_enter", cfg.pose.open_enter);
            cfg.pose.min_area = p.value("min_area", cfg.pose.min_area);
        }
        if (doc.contains("mapper")) {
            const json& m = doc.at("mapper");
            if (m.contains("screen")) {
                cfg.mapper.screen.width = m.at("screen").at(0).get<int32_t>();
                cfg.mapper.screen.height = m.at("screen").at(1).get<int32_t>();
            }
            cfg.mapper.mirror_x = m.value("mirror_x", cfg.mapper.mirror_x);
            cfg.mapper.min_step_mm = m.value("min_step", cfg.mapper.min_step_mm);
            cfg.mapper.quiet_ms = m.value("quiet_ms", cfg.mapper.quiet_ms);
            if (m.contains("box")) {
                const json& b = m.at("box");
                cfg.mapper.box_width = b.value("width", cfg.mapper.box_width);
                cfg.mapper.box_height = b.value("height", cfg.mapper.box_height);
                if (b.contains("offset")) {
                    cfg.mapper.box_offset = {b.at("offset").at(0).get<double>(),
                                             b.at("offset").at(1).get<double>(),
                                             b.at("offset").at(2).get<double>()};
                }
            }
        }
        if (doc.contains("routes")) {
            cfg.routes.clear();
            for (const auto& [key, arr] : doc.at("routes").items()) {
                std::vector<std::string> targets;
                for (const json& t : arr) {
                    const std::string target = t.get<std::string>();
                    if (std::find(targets.begin(), targets.end(), target) != targets.end()) {
                        throw Error(ErrorCode::ConfigError, "route '" + key + "' lists target '" + target +
                                                                "' twice");
                    }
                    targets.push_back(target);
                }
                cfg.routes[key] = std::move(targets);
            }
        }
        if (doc.contains("renderer")) {
            const json& r = doc.at("renderer");
            cfg.renderer.num = r.value("num", cfg.renderer.num);
            cfg.renderer.radius = r.value("radius", cfg.renderer.radius);
            cfg.renderer.f = r.value("f", cfg.renderer.f);
            if (r.contains("size")) {
                cfg.renderer.width = r.at("size").at(0).get<int>();
                cfg.renderer.height = r.at("size").at(1).get<int>();
            }
        }
        if (!std::filesystem::exists(cfg.scene_path)) {
            throw Error(ErrorCode::IoFailure, "scene file not found: " + cfg.scene_path);
        }
        if (!cfg.library_path.empty() && !std::filesystem::exists(cfg.library_path)) {
            throw Error(ErrorCode::IoFailure, "gesture library not found: " + cfg.library_path);
        }
        return cfg;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, path + ": " + e.what());
    }
}

Trajectory hand_trajectory(const RecordedStream& stream) {
    Trajectory traj;
    traj.samples.reserve(stream.frames.size());
    for (const StreamFrame& f : stream.frames) {
        traj.samples.push_back({f.skeleton.timestamp_ms, f.skeleton.joint(Joint::HandRight).to_vec3()});
    }
    return traj;
}

std::string stream_info_string(const RecordedStream& stream) {
    std::ostringstream out;
    out << "frames: " << stream.frames.size() << ", " << stream.width << "x" << stream.height << ", "
        << stream.fps << " fps";
    return out.str();
}

RunResult process_stream(const RecordedStream& stream, const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + config.out_dir + ": " + ec.message());

    const GestureLibrary library =
        config.library_path.empty() ? default_library() : load_library_file(config.library_path);

    CommandMapper mapper(library, config.mapper);
    EventRouter router(config.routes);
    RenderTarget renderer(config.renderer, config.out_dir);

    RunResult result;
    result.event_log_path = config.out_dir + "/events.log";
    std::ofstream log(result.event_log_path, std::ios::trunc);
    if (!log) throw Error(ErrorCode::IoFailure, "cannot open " + result.event_log_path + " for writing");

    HandPose pose = HandPose::Unknown;
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        try {
            const StreamFrame& frame = stream.frames[i];
            SegmentationParams params;
            params.depth_of_hand = frame.skeleton.joint(Joint::HandRight).z;
            params.d_limit = config.segmentation.d_limit;
            params.u_limit = config.segmentation.u_limit;
            params.target_player = config.segmentation.target_player;

            const AlphaMask alpha = compute_alpha(frame.depth, params);
            const BinaryMask mask = smooth_mask(binarize_alpha(alpha, config.segmentation.threshold));
            const Contour contour = extract_contour(mask);
            const PoseFeatures features = compute_features(mask, contour);
            pose = classify_pose(features, pose, config.pose);

            const auto events =
                mapper.step(pose, frame.skeleton.joint(Joint::HandRight).to_vec3(),
                            frame.skeleton.joint(Joint::ShoulderCenter).to_vec3(), frame.depth.timestamp_ms);
            for (const CommandEvent& event : events) {
                const auto targets = router.route(event);
                log << event_log_line(event, targets) << '\n';
                ++result.events;
                for (const std::string& target : targets) {
                    if (target == "slides") {
                        if (event.kind == CommandKind::NextSlide) ++result.slide_index;
                        if (event.kind == CommandKind::PrevSlide) {
                            result.slide_index = std::max<int64_t>(0, result.slide_index - 1);
                        }
                    } else if (target == "renderer") {
                        renderer.handle(event);
                    }
                    // unknown target names are log-only sinks
                }
            }
            ++result.frames;
        } catch (const Error& e) {
            throw Error(e.code(), "frame " + std::to_string(i) + ": " + e.what());
        }
    }
    result.dropped = router.dropped();
    result.frames_rendered = renderer.rendered();
    log.flush();
    if (!log) throw Error(ErrorCode::IoFailure, "write to " + result.event_log_path + " failed");
    return result;
}

RunResult run_pipeline(const RunConfig& config) {
    const SceneScript scene = load_scene_file(config.scene_path);
    const RecordedStream stream = synthesize_stream(scene, config.seed);
    return process_stream(stream, config);
}

}  // namespace gdeck
