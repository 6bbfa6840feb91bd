#pragma once

#include <cstdint>

#include "gdeck/frame.hpp"
#include "gdeck/scene.hpp"

namespace gdeck {

/// Position of the hand primitive at time t (linear keyframe interpolation).
Vec3 hand_center_at(const HandPrimitive& hand, uint64_t t_ms);

/// Shape of the keyframe segment containing t.
HandShape hand_shape_at(const HandPrimitive& hand, uint64_t t_ms);

/// Renders one synthetic depth frame by casting a pinhole ray per pixel and
/// keeping the nearest analytic hit. Depth is the z-coordinate of the hit
/// point, not the ray length. Throws TimeOutOfRange outside [0, duration].
DepthFrame render_depth_frame(const SceneScript& scene, uint64_t t_ms);

/// Skeleton joints at time t; HAND_RIGHT tracks the hand primitive when the
/// scene declares them shared. Throws TimeOutOfRange outside [0, duration].
SkeletonFrame skeleton_from_scene(const SceneScript& scene, uint64_t t_ms);

/// Samples the whole scene at frame_count = floor(duration_ms * fps / 1000) + 1
/// uniform timestamps t_k = floor(k * 1000 / fps). When the scene requests
/// depth noise it is drawn from a generator seeded with `seed`.
RecordedStream synthesize_stream(const SceneScript& scene, uint64_t seed = 0);

}  // namespace gdeck
