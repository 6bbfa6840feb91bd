#include "gdeck/command_mapper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gdeck/error.hpp"

namespace gdeck {

namespace {

constexpr double kRotateStepRad = 0.05;

int32_t to_screen(double u, int32_t extent) {
    const auto v = int32_t(std::floor(u * double(extent)));
    return std::clamp(v, int32_t{0}, extent - 1);
}

}  // namespace

const char* to_string(CommandKind kind) {
    switch (kind) {
        case CommandKind::CursorMove: return "CURSOR_MOVE";
        case CommandKind::ClickDown: return "CLICK_DOWN";
        case CommandKind::ClickUp: return "CLICK_UP";
        case CommandKind::NextSlide: return "NEXT_SLIDE";
        case CommandKind::PrevSlide: return "PREV_SLIDE";
        case CommandKind::RotateModel: return "ROTATE_MODEL";
        case CommandKind::Zoom: return "ZOOM";
    }
    return "?";
}

std::string CommandEvent::args() const {
    switch (kind) {
        case CommandKind::CursorMove:
            return std::to_string(x) + "," + std::to_string(y);
        case CommandKind::RotateModel: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.4f,%.4f", dax, day);
            return buf;
        }
        case CommandKind::Zoom:
            return zoom == ZoomDirection::In ? "in" : "out";
        default:
            return "-";
    }
}

std::pair<int32_t, int32_t> map_cursor(const Vec3& hand, const ControlBox& box, ScreenSize screen,
                                       bool mirror_x) {
    double u = (hand.x - (box.center.x - box.width / 2.0)) / box.width;
    double v = (hand.y - (box.center.y - box.height / 2.0)) / box.height;
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    if (mirror_x) u = 1.0 - u;
    return {to_screen(u, screen.width), to_screen(v, screen.height)};
}

CommandMapper::CommandMapper(GestureLibrary library, MapperConfig config)
    : library_(std::move(library)), config_(config) {}

void CommandMapper::append_gesture_events(const GestureMatch& match, uint64_t t_ms,
                                          std::vector<CommandEvent>& out) const {
    if (!match.matched()) return;
    CommandEvent e;
    e.timestamp_ms = t_ms;
    e.source = match.name;
    if (match.name == "swipe_left") {
        e.kind = CommandKind::NextSlide;
        out.push_back(e);
    } else if (match.name == "swipe_right") {
        e.kind = CommandKind::PrevSlide;
        out.push_back(e);
    } else if (match.name == "swipe_up") {
        e.kind = CommandKind::Zoom;
        e.zoom = ZoomDirection::In;
        out.push_back(e);
    } else if (match.name == "swipe_down") {
        e.kind = CommandKind::Zoom;
        e.zoom = ZoomDirection::Out;
        out.push_back(e);
    } else if (match.name == "push") {
        // tap: a paired click, independent of the pose press state
        e.kind = CommandKind::ClickDown;
        out.push_back(e);
        e.kind = CommandKind::ClickUp;
        out.push_back(e);
    } else if (match.name == "circle_cw") {
        e.kind = CommandKind::RotateModel;
        e.dax = kRotateStepRad;
        e.day = kRotateStepRad;
        out.push_back(e);
    }
    // templates without a command binding route by gesture name only and
    // produce no event here
}

GestureMatch CommandMapper::close_window() {
    GestureMatch match;
    if (state_.window_active && !library_.templates.empty()) {
        const DirectionString s = quantize_trajectory(state_.window, config_.min_step_mm);
        if (!s.empty()) match = recognize(s, library_);
    }
    state_.window_active = false;
    state_.window.samples.clear();
    return match;
}

std::vector<CommandEvent> CommandMapper::step(HandPose pose, const Vec3& hand, const Vec3& shoulder,
                                              uint64_t t_ms, const std::optional<GestureMatch>& injected) {
    if (state_.started && t_ms <= state_.last_t_ms) {
        throw Error(ErrorCode::OutOfOrderTimestamp,
                    "frame at t=" + std::to_string(t_ms) + " after t=" + std::to_string(state_.last_t_ms));
    }
    state_.started = true;
    state_.last_t_ms = t_ms;

    std::vector<CommandEvent> events;
    const HandPose prev = state_.prev_pose;
    state_.prev_pose = pose;

    if (pose == HandPose::Unknown) {
        // no commands from UNKNOWN frames; the capture window is discarded
        state_.window_active = false;
        state_.window.samples.clear();
        return events;
    }

    if (pose != prev) {
        // leaving OPEN closes the capture window and recognizes it
        if (prev == HandPose::Open) {
            append_gesture_events(close_window(), t_ms, events);
        }
        if (prev == HandPose::Open && pose == HandPose::Fist && !state_.pressed) {
            state_.pressed = true;
            events.push_back({CommandKind::ClickDown, t_ms, 0, 0, 0, 0, ZoomDirection::In, "pose_edge"});
        } else if (prev == HandPose::Fist && pose == HandPose::Open && state_.pressed) {
            state_.pressed = false;
            events.push_back({CommandKind::ClickUp, t_ms, 0, 0, 0, 0, ZoomDirection::In, "pose_edge"});
        }
    }

    if (pose == HandPose::Open) {
        if (!state_.window_active) {
            state_.window_active = true;
            state_.window.samples.clear();
            state_.quiet_anchor = hand;
            state_.last_motion_ms = t_ms;
        }
        state_.window.samples.push_back({t_ms, hand});
        if ((hand - state_.quiet_anchor).norm() >= config_.min_step_mm) {
            state_.quiet_anchor = hand;
            state_.last_motion_ms = t_ms;
        } else if (t_ms - state_.last_motion_ms >= config_.quiet_ms) {
            append_gesture_events(close_window(), t_ms, events);
            // a fresh window begins at the current sample
            state_.window_active = true;
            state_.window.samples.assign(1, {t_ms, hand});
            state_.quiet_anchor = hand;
            state_.last_motion_ms = t_ms;
        }
    }

    if (injected) append_gesture_events(*injected, t_ms, events);

    ControlBox box{shoulder + config_.box_offset, config_.box_width, config_.box_height};
    const auto [sx, sy] = map_cursor(hand, box, config_.screen, config_.mirror_x);
    events.push_back({CommandKind::CursorMove, t_ms, sx, sy, 0, 0, ZoomDirection::In, "pose"});

    return events;
}

std::vector<std::string> EventRouter::route(const CommandEvent& event) {
    std::vector<std::string> targets;
    auto append_targets = [&targets](const RouteTable::mapped_type& bound) {
        for (const std::string& t : bound) {
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
    };
    if (auto it = routes_.find(to_string(event.kind)); it != routes_.end()) append_targets(it->second);
    if (auto it = routes_.find(event.source); it != routes_.end()) append_targets(it->second);
    if (targets.empty()) ++dropped_;
    return targets;
}

std::string event_log_line(const CommandEvent& event, const std::vector<std::string>& targets) {
    std::ostringstream out;
    out << event.timestamp_ms << '\t' << to_string(event.kind) << '\t' << event.args() << '\t'
        << event.source << '\t';
    if (targets.empty()) {
        out << "dropped";
    } else {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (i > 0) out << ',';
            out << targets[i];
        }
    }
    return out.str();
}

}  // namespace gdeck
