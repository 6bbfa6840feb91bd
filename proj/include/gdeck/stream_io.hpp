#pragma once

#include <cstdint>
#include <string>

#include "gdeck/frame.hpp"

namespace gdeck {

// Stream file layout (.kds), all integers little endian:
//   magic "KDS1"
//   u32 width, height, fps, frame_count, joint_count (= 5)
//   per frame:
//     u64 timestamp_ms
//     width*height u16 depth (mm), row-major
//     width*height u8 player index, row-major
//     5 joints * 3 * f32 (x, y, z mm), fixed joint order

inline constexpr char kStreamMagic[4] = {'K', 'D', 'S', '1'};
inline constexpr std::size_t kStreamHeaderBytes = 24;

/// Closed-form size in bytes of a stream file with the given geometry.
constexpr uint64_t stream_file_size(uint32_t width, uint32_t height, uint64_t frame_count) {
    const uint64_t per_frame = uint64_t(width) * height * 3 + kJointCount * 12 + 8;
    return kStreamHeaderBytes + frame_count * per_frame;
}

/// Writes the stream, returns the byte count. Throws InvariantViolation if a
/// frame disagrees with the header or breaks a frame invariant, IoFailure on
/// filesystem errors.
uint64_t write_stream(const RecordedStream& stream, const std::string& path);

/// Bit-exact inverse of write_stream. Throws BadMagic, TruncatedFile,
/// DimensionMismatch or InvariantViolation as appropriate.
RecordedStream read_stream(const std::string& path);

}  // namespace gdeck
