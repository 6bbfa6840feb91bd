#pragma once

#include <cstdint>
#include <string>

#include "gdeck/command_mapper.hpp"
#include "gdeck/frame.hpp"
#include "gdeck/renderer.hpp"
#include "gdeck/segmentation.hpp"
#include "gdeck/static_gesture.hpp"

namespace gdeck {

struct SegmentationConfig {
    double d_limit = 80.0;
    double u_limit = 120.0;
    uint8_t threshold = 1;
    uint8_t target_player = 1;
};

struct RendererConfig {
    int num = 20;
    double radius = 160.0;
    double f = 300.0;
    int width = 800;
    int height = 800;
    Orientation initial{0.0, 0.05};
};

/// Everything a full run needs; mirrors the run-config JSON document.
struct RunConfig {
    std::string scene_path;
    std::string library_path;  // empty = built-in default library
    std::string out_dir;
    uint64_t seed = 0;
    SegmentationConfig segmentation;
    PoseThresholds pose;
    MapperConfig mapper;
    RouteTable routes = default_routes();
    RendererConfig renderer;

    static RouteTable default_routes();
};

RunConfig load_run_config(const std::string& path);

struct RunResult {
    uint64_t frames = 0;
    uint64_t events = 0;
    uint64_t dropped = 0;
    int64_t slide_index = 0;
    uint64_t frames_rendered = 0;
    std::string event_log_path;
};

/// HAND_RIGHT positions over the whole stream.
Trajectory hand_trajectory(const RecordedStream& stream);

/// "frames: N, WxH, F fps"
std::string stream_info_string(const RecordedStream& stream);

/// Runs the full per-frame pipeline over a stream: segmentation -> contour ->
/// pose -> trajectory window -> recognition -> mapping -> routing. Writes
/// <out_dir>/events.log plus a PPM per render-target event.
RunResult process_stream(const RecordedStream& stream, const RunConfig& config);

/// Loads the scene, synthesizes the stream with config.seed, then runs
/// process_stream.
RunResult run_pipeline(const RunConfig& config);

}  // namespace gdeck
