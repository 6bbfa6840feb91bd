// gdeck - depth-stream gesture control toolkit.
//
// Subcommands: simulate, info, segment, train, recognize, render, run.
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdeck/contour.hpp"
#include "gdeck/dynamic_gesture.hpp"
#include "gdeck/error.hpp"
#include "gdeck/pgm.hpp"
#include "gdeck/pipeline.hpp"
#include "gdeck/renderer.hpp"
#include "gdeck/scene.hpp"
#include "gdeck/segmentation.hpp"
#include "gdeck/sensor_sim.hpp"
#include "gdeck/stream_io.hpp"

namespace {

using namespace gdeck;

int exit_code_for(const Error& e) {
    return e.code() == ErrorCode::IoFailure ? 3 : 2;
}

std::string frame_name(const char* prefix, std::size_t index) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s_%06zu.pgm", prefix, index);
    return buf;
}

struct SimulateArgs {
    std::string scene_path;
    std::string out_path;
    uint64_t seed = 0;
    std::optional<double> noise_sigma;
};

int cmd_simulate(const SimulateArgs& args) {
    SceneScript scene = load_scene_file(args.scene_path);
    if (args.noise_sigma) scene.noise_sigma_mm = *args.noise_sigma;
    validate_scene(scene);
    const RecordedStream stream = synthesize_stream(scene, args.seed);
    write_stream(stream, args.out_path);
    std::cout << "frames: " << stream.frames.size() << "\n";
    return 0;
}

struct SegmentArgs {
    std::string stream_path;
    std::string out_dir;
    SegmentationConfig seg;
};

int cmd_segment(const SegmentArgs& args) {
    const RecordedStream stream = read_stream(args.stream_path);
    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + args.out_dir);

    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        const StreamFrame& frame = stream.frames[i];
        SegmentationParams params;
        params.depth_of_hand = frame.skeleton.joint(Joint::HandRight).z;
        params.d_limit = args.seg.d_limit;
        params.u_limit = args.seg.u_limit;
        params.target_player = args.seg.target_player;

        const AlphaMask alpha = compute_alpha(frame.depth, params);
        const BinaryMask mask = smooth_mask(binarize_alpha(alpha, args.seg.threshold));
        const Contour contour = extract_contour(mask);

        write_pgm(args.out_dir + "/" + frame_name("alpha", i), alpha.width, alpha.height, alpha.alpha);

        std::vector<uint8_t> binary(mask.bits.size());
        for (std::size_t p = 0; p < mask.bits.size(); ++p) binary[p] = mask.bits[p] ? 255 : 0;
        write_pgm(args.out_dir + "/" + frame_name("mask", i), mask.width, mask.height, binary);

        // overlay: boundary 255, interior 128, background 0
        std::vector<uint8_t> overlay(mask.bits.size());
        for (std::size_t p = 0; p < mask.bits.size(); ++p) overlay[p] = mask.bits[p] ? 128 : 0;
        for (const PixelCoord& pt : contour.points) {
            overlay[std::size_t(pt.y) * mask.width + std::size_t(pt.x)] = 255;
        }
        write_pgm(args.out_dir + "/" + frame_name("contour", i), mask.width, mask.height, overlay);
    }
    std::cout << "frames: " << stream.frames.size() << ", masks written to " << args.out_dir << "\n";
    return 0;
}

struct TrainArgs {
    std::string library_path;
    std::string name;
    std::vector<std::string> stream_paths;
    double min_step = 40.0;
    double threshold = 0.4;
};

int cmd_train(const TrainArgs& args) {
    std::vector<Trajectory> samples;
    for (const std::string& path : args.stream_paths) {
        samples.push_back(hand_trajectory(read_stream(path)));
    }
    const GestureTemplate tmpl = train_template(args.name, samples, args.min_step);

    GestureLibrary lib;
    if (std::filesystem::exists(args.library_path)) {
        lib = load_library_file(args.library_path);
    } else {
        lib.match_threshold = args.threshold;
    }
    lib.upsert(tmpl);
    save_library_file(lib, args.library_path);
    std::cout << "trained '" << tmpl.name << "' = [" << tmpl.pattern.str() << "] from "
              << samples.size() << " sample(s)\n";
    return 0;
}

struct RecognizeArgs {
    std::string stream_path;
    std::string library_path;
    double min_step = 40.0;
};

int cmd_recognize(const RecognizeArgs& args) {
    const RecordedStream stream = read_stream(args.stream_path);
    const GestureLibrary lib =
        args.library_path.empty() ? default_library() : load_library_file(args.library_path);
    const DirectionString s = quantize_trajectory(hand_trajectory(stream), args.min_step);
    const GestureMatch match = recognize(s, lib);
    std::cout << "trajectory: [" << s.str() << "]\n";
    if (match.matched()) {
        std::printf("match: %s (distance %.3f)\n", match.name.c_str(), match.distance);
    } else {
        std::printf("match: NO_MATCH (best distance %.3f)\n", match.distance);
    }
    return 0;
}

struct RenderArgs {
    std::string out_dir;
    int num = 20;
    double radius = 160.0;
    double f = 300.0;
    double anglex = 0.0;
    double angley = 0.05;
    std::string size = "800x800";
    int frames = 1;
};

int cmd_render(const RenderArgs& args) {
    int width = 0, height = 0;
    if (std::sscanf(args.size.c_str(), "%dx%d", &width, &height) != 2 || width < 1 || height < 1) {
        throw Error(ErrorCode::ConfigError, "--size must look like 800x800");
    }
    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + args.out_dir);

    Orientation orientation{args.anglex, args.angley};
    for (int k = 0; k < args.frames; ++k) {
        const FrameBuffer fb =
            render_sphere_frame(args.num, args.radius, Camera{args.f}, orientation, width, height);
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04d.ppm", k);
        write_image(fb, args.out_dir + "/" + name);
        orientation.anglex += 0.05;  // spin step per frame
    }
    std::cout << "frames: " << args.frames << ", written to " << args.out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gesture-controlled teaching deck: simulator, recognizer, renderer"};
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "synthesize a stream file from a scene script");
    simulate->add_option("scene", sim.scene_path, "scene script (JSON)")->required();
    simulate->add_option("-o,--out", sim.out_path, "output stream file (.kds)")->required();
    simulate->add_option("--seed", sim.seed, "noise RNG seed");
    double noise_sigma = 0.0;
    CLI::Option* noise_opt =
        simulate->add_option("--noise-sigma", noise_sigma, "override scene depth noise sigma (mm)");

    std::string info_path;
    CLI::App* info = app.add_subcommand("info", "print stream file header");
    info->add_option("stream", info_path, "stream file (.kds)")->required();

    SegmentArgs seg;
    CLI::App* segment = app.add_subcommand("segment", "dump per-frame segmentation masks as PGM");
    segment->add_option("stream", seg.stream_path, "stream file (.kds)")->required();
    segment->add_option("-o,--out", seg.out_dir, "output directory")->required();
    segment->add_option("--d-limit", seg.seg.d_limit, "window extent toward the camera (mm)");
    segment->add_option("--u-limit", seg.seg.u_limit, "window extent away from the camera (mm)");
    int seg_threshold = 1;
    segment->add_option("--threshold", seg_threshold, "binarization threshold (0..255)");
    int seg_player = 1;
    segment->add_option("--player", seg_player, "target player index (1..6)");

    TrainArgs train;
    CLI::App* train_cmd = app.add_subcommand("train", "train a gesture template from sample streams");
    train_cmd->add_option("name", train.name, "gesture name")->required();
    train_cmd->add_option("streams", train.stream_paths, "sample stream files")->required();
    train_cmd->add_option("-l,--library", train.library_path, "gesture library file (JSON)")->required();
    train_cmd->add_option("--min-step", train.min_step, "quantization step (mm)");
    train_cmd->add_option("--threshold", train.threshold, "match threshold for a new library");

    RecognizeArgs rec;
    CLI::App* recognize_cmd = app.add_subcommand("recognize", "recognize the hand trajectory of a stream");
    recognize_cmd->add_option("stream", rec.stream_path, "stream file (.kds)")->required();
    recognize_cmd->add_option("-l,--library", rec.library_path, "gesture library file (default: built-in)");
    recognize_cmd->add_option("--min-step", rec.min_step, "quantization step (mm)");

    RenderArgs render;
    CLI::App* render_cmd = app.add_subcommand("render", "render sphere frames as PPM");
    render_cmd->add_option("-o,--out", render.out_dir, "output directory")->required();
    render_cmd->add_option("--num", render.num, "grid subdivisions");
    render_cmd->add_option("--radius", render.radius, "sphere radius (model units)");
    render_cmd->add_option("--f", render.f, "perspective parameter");
    render_cmd->add_option("--anglex", render.anglex, "initial rotation about the y-axis (rad)");
    render_cmd->add_option("--angley", render.angley, "initial rotation about the x-axis (rad)");
    render_cmd->add_option("--size", render.size, "framebuffer size WxH");
    render_cmd->add_option("--frames", render.frames, "frame count");

    std::string run_config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "run the full pipeline over a scene");
    run_cmd->add_option("config", run_config_path, "run configuration (JSON)")->required();
    std::optional<double> fist_enter, open_enter;
    std::optional<uint64_t> min_area, run_seed;
    bool mirror_x = false;
    run_cmd->add_option("--fist-enter", fist_enter, "compactness at or above reports FIST");
    run_cmd->add_option("--open-enter", open_enter, "compactness at or below reports OPEN");
    run_cmd->add_option("--min-area", min_area, "minimum silhouette area (px)");
    run_cmd->add_option("--seed", run_seed, "noise RNG seed");
    run_cmd->add_flag("--mirror-x", mirror_x, "mirror the cursor x-axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or help text
        return code == 0 ? 0 : 1;     // usage errors exit 1
    }

    try {
        if (*simulate) {
            if (*noise_opt) sim.noise_sigma = noise_sigma;
            return cmd_simulate(sim);
        }
        if (*info) {
            std::cout << stream_info_string(read_stream(info_path)) << "\n";
            return 0;
        }
        if (*segment) {
            if (seg_threshold < 0 || seg_threshold > 255) {
                throw Error(ErrorCode::ConfigError, "--threshold must be in 0..255");
            }
            if (seg_player < 1 || seg_player > 6) {
                throw Error(ErrorCode::ConfigError, "--player must be in 1..6");
            }
            seg.seg.threshold = uint8_t(seg_threshold);
            seg.seg.target_player = uint8_t(seg_player);
            return cmd_segment(seg);
        }
        if (*train_cmd) return cmd_train(train);
        if (*recognize_cmd) return cmd_recognize(rec);
        if (*render_cmd) return cmd_render(render);
        if (*run_cmd) {
            RunConfig config = load_run_config(run_config_path);
            if (fist_enter) config.pose.fist_enter = *fist_enter;
            if (open_enter) config.pose.open_enter = *open_enter;
            if (min_area) config.pose.min_area = *min_area;
            if (run_seed) config.seed = *run_seed;
            if (mirror_x) config.mapper.mirror_x = true;
            const RunResult result = run_pipeline(config);
            std::cout << "frames: " << result.frames << ", events: " << result.events
                      << ", dropped: " << result.dropped << ", slide: " << result.slide_index
                      << ", rendered: " << result.frames_rendered << "\n"
                      << "event log: " << result.event_log_path << "\n";
            return 0;
        }
    } catch (const gdeck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
