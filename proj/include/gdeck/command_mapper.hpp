#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdeck/dynamic_gesture.hpp"
#include "gdeck/static_gesture.hpp"
#include "gdeck/vec.hpp"

namespace gdeck {

enum class CommandKind : uint8_t {
    CursorMove,
    ClickDown,
    ClickUp,
    NextSlide,
    PrevSlide,
    RotateModel,
    Zoom,
};

enum class ZoomDirection : uint8_t { In, Out };

const char* to_string(CommandKind kind);

struct CommandEvent {
    CommandKind kind = CommandKind::CursorMove;
    uint64_t timestamp_ms = 0;
    int32_t x = 0;  // CursorMove screen position
    int32_t y = 0;
    double dax = 0.0;  // RotateModel increments, radians
    double day = 0.0;
    ZoomDirection zoom = ZoomDirection::In;
    std::string source;  // "pose", "pose_edge", or the gesture name

    /// Kind-specific argument column for the event log ("x,y", "in", ...).
    std::string args() const;
};

/// Body-relative rectangle whose x-y extent maps affinely onto the screen.
struct ControlBox {
    Vec3 center;
    double width = 400.0;   // mm
    double height = 300.0;  // mm
};

struct ScreenSize {
    int32_t width = 1920;
    int32_t height = 1080;
};

/// Clamps the hand to the box and maps it onto the screen rectangle; z is
/// ignored. mirror_x flips the horizontal axis for a facing-the-class setup.
std::pair<int32_t, int32_t> map_cursor(const Vec3& hand, const ControlBox& box, ScreenSize screen,
                                       bool mirror_x = false);

struct MapperConfig {
    Vec3 box_offset;  // control box center = SHOULDER_CENTER + box_offset
    double box_width = 400.0;
    double box_height = 300.0;
    ScreenSize screen;
    bool mirror_x = false;
    double min_step_mm = 40.0;  // shared with trajectory quantization
    uint64_t quiet_ms = 150;    // sub-min_step time that closes a capture window
};

struct MapperState {
    bool started = false;
    uint64_t last_t_ms = 0;
    HandPose prev_pose = HandPose::Unknown;
    bool pressed = false;  // a click is currently held down
    bool window_active = false;
    Trajectory window;
    Vec3 quiet_anchor;
    uint64_t last_motion_ms = 0;
};

/// Per-stream state machine turning pose edges and trajectory gestures into
/// command events. Feed frames in timestamp order, one instance per stream.
///
/// Clicks trigger on OPEN->FIST / FIST->OPEN edges. Trajectory capture runs
/// only while the pose is OPEN; a window closes after quiet_ms of sub-min_step
/// motion or on any pose edge, and its recognized gesture maps to a command.
/// UNKNOWN frames emit nothing and discard the window.
class CommandMapper {
public:
    explicit CommandMapper(GestureLibrary library, MapperConfig config = {});

    /// Processes one frame. `injected` is mapped as if a capture window had
    /// just recognized it (useful for tests and replay); normal operation
    /// leaves it empty and lets the internal window logic recognize gestures.
    /// Throws OutOfOrderTimestamp when t_ms does not increase.
    std::vector<CommandEvent> step(HandPose pose, const Vec3& hand, const Vec3& shoulder, uint64_t t_ms,
                                   const std::optional<GestureMatch>& injected = std::nullopt);

    const MapperState& state() const { return state_; }

private:
    void append_gesture_events(const GestureMatch& match, uint64_t t_ms, std::vector<CommandEvent>& out) const;
    GestureMatch close_window();

    GestureLibrary library_;
    MapperConfig config_;
    MapperState state_;
};

/// Event-kind or gesture-name keys, each bound to an ordered target list.
using RouteTable = std::map<std::string, std::vector<std::string>>;

/// Delivers events to the targets bound to their kind and to their source;
/// each bound target gets the event once, in registration order. Events with
/// no binding are dropped and counted.
class EventRouter {
public:
    explicit EventRouter(RouteTable routes) : routes_(std::move(routes)) {}

    std::vector<std::string> route(const CommandEvent& event);

    uint64_t dropped() const { return dropped_; }

private:
    RouteTable routes_;
    uint64_t dropped_ = 0;
};

/// Tab-separated log line: timestamp, kind, args, source, targets.
std::string event_log_line(const CommandEvent& event, const std::vector<std::string>& targets);

}  // namespace gdeck
