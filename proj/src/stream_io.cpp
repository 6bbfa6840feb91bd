#include "gdeck/stream_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "gdeck/error.hpp"

namespace gdeck {

namespace {

void put_u16(std::string& out, uint16_t v) {
    out.push_back(char(v & 0xff));
    out.push_back(char((v >> 8) & 0xff));
}

void put_u32(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

void put_f32(std::string& out, float v) {
    static_assert(sizeof(float) == 4);
    put_u32(out, std::bit_cast<uint32_t>(v));
}

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    bool take(void* dst, std::size_t n) {
        in_.read(static_cast<char*>(dst), std::streamsize(n));
        return in_.gcount() == std::streamsize(n);
    }

    uint16_t u16() { return uint16_t(byte() | (uint16_t(byte()) << 8)); }

    uint32_t u32() {
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(byte()) << (8 * i);
        return v;
    }

    uint64_t u64() {
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(byte()) << (8 * i);
        return v;
    }

    float f32() { return std::bit_cast<float>(u32()); }

    bool truncated() const { return truncated_; }

private:
    uint8_t byte() {
        char c = 0;
        if (!in_.get(c)) {
            truncated_ = true;
            return 0;
        }
        return uint8_t(c);
    }

    std::istream& in_;
    bool truncated_ = false;
};

void check_writable_stream(const RecordedStream& stream) {
    if (stream.width < 1 || stream.height < 1) {
        throw Error(ErrorCode::InvariantViolation, "stream dimensions must be at least 1x1");
    }
    if (stream.fps < 1) {
        throw Error(ErrorCode::InvariantViolation, "stream fps must be at least 1");
    }
    uint64_t prev_ts = 0;
    bool first = true;
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        const StreamFrame& f = stream.frames[i];
        if (f.depth.width != stream.width || f.depth.height != stream.height) {
            throw Error(ErrorCode::InvariantViolation,
                        "frame " + std::to_string(i) + " is " + std::to_string(f.depth.width) + "x" +
                            std::to_string(f.depth.height) + ", header says " + std::to_string(stream.width) +
                            "x" + std::to_string(stream.height));
        }
        auto violations = validate_frame(f.depth);
        if (!violations.empty()) {
            throw Error(ErrorCode::InvariantViolation, "frame " + std::to_string(i) + ": " + violations.front());
        }
        if (f.depth.timestamp_ms != f.skeleton.timestamp_ms) {
            throw Error(ErrorCode::InvariantViolation,
                        "frame " + std::to_string(i) + " depth/skeleton timestamps disagree");
        }
        if (!first && f.depth.timestamp_ms <= prev_ts) {
            throw Error(ErrorCode::InvariantViolation,
                        "frame " + std::to_string(i) + " timestamp does not increase");
        }
        prev_ts = f.depth.timestamp_ms;
        first = false;
    }
}

}  // namespace

uint64_t write_stream(const RecordedStream& stream, const std::string& path) {
    check_writable_stream(stream);

    std::string buf;
    buf.reserve(stream_file_size(stream.width, stream.height, stream.frames.size()));
    buf.append(kStreamMagic, 4);
    put_u32(buf, stream.width);
    put_u32(buf, stream.height);
    put_u32(buf, stream.fps);
    put_u32(buf, uint32_t(stream.frames.size()));
    put_u32(buf, uint32_t(kJointCount));
    for (const StreamFrame& f : stream.frames) {
        put_u64(buf, f.depth.timestamp_ms);
        for (uint16_t d : f.depth.depth) put_u16(buf, d);
        buf.append(reinterpret_cast<const char*>(f.depth.player_index.data()), f.depth.player_index.size());
        for (const Vec3f& p : f.skeleton.joints) {
            put_f32(buf, p.x);
            put_f32(buf, p.y);
            put_f32(buf, p.z);
        }
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out.write(buf.data(), std::streamsize(buf.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write to " + path + " failed");
    return buf.size();
}

RecordedStream read_stream(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for reading");

    char magic[4] = {};
    Reader r(in);
    if (!r.take(magic, 4) || std::memcmp(magic, kStreamMagic, 4) != 0) {
        throw Error(ErrorCode::BadMagic, path + " is not a stream file");
    }

    RecordedStream stream;
    stream.width = r.u32();
    stream.height = r.u32();
    stream.fps = r.u32();
    const uint32_t frame_count = r.u32();
    const uint32_t joint_count = r.u32();
    if (r.truncated()) throw Error(ErrorCode::TruncatedFile, path + " ends inside the header");
    if (stream.width == 0 || stream.height == 0) {
        throw Error(ErrorCode::DimensionMismatch, path + " declares zero width or height");
    }
    if (stream.fps < 1) throw Error(ErrorCode::InvariantViolation, path + " declares fps 0");
    if (joint_count != kJointCount) {
        throw Error(ErrorCode::InvariantViolation,
                    path + " declares " + std::to_string(joint_count) + " joints, expected " +
                        std::to_string(kJointCount));
    }

    const std::size_t pixels = std::size_t(stream.width) * stream.height;
    stream.frames.reserve(frame_count);
    uint64_t prev_ts = 0;
    for (uint32_t i = 0; i < frame_count; ++i) {
        StreamFrame f;
        f.depth.width = stream.width;
        f.depth.height = stream.height;
        f.depth.timestamp_ms = r.u64();
        f.depth.depth.resize(pixels);
        for (std::size_t p = 0; p < pixels; ++p) f.depth.depth[p] = r.u16();
        f.depth.player_index.resize(pixels);
        if (!r.take(f.depth.player_index.data(), pixels)) {
            throw Error(ErrorCode::TruncatedFile,
                        path + " declares " + std::to_string(frame_count) + " frames but ends in frame " +
                            std::to_string(i));
        }
        for (Vec3f& p : f.skeleton.joints) {
            p.x = r.f32();
            p.y = r.f32();
            p.z = r.f32();
        }
        if (r.truncated()) {
            throw Error(ErrorCode::TruncatedFile,
                        path + " declares " + std::to_string(frame_count) + " frames but ends in frame " +
                            std::to_string(i));
        }
        f.skeleton.timestamp_ms = f.depth.timestamp_ms;
        if (i > 0 && f.depth.timestamp_ms <= prev_ts) {
            throw Error(ErrorCode::InvariantViolation,
                        path + " frame " + std::to_string(i) + " timestamp does not increase");
        }
        prev_ts = f.depth.timestamp_ms;
        auto violations = validate_frame(f.depth);
        if (!violations.empty()) {
            throw Error(ErrorCode::InvariantViolation,
                        path + " frame " + std::to_string(i) + ": " + violations.front());
        }
        stream.frames.push_back(std::move(f));
    }
    return stream;
}

}  // namespace gdeck
