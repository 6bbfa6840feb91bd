#include "gdeck/pgm.hpp"

#include <fstream>

#include "gdeck/error.hpp"

namespace gdeck {

void write_pgm(const std::string& path, uint32_t width, uint32_t height, std::span<const uint8_t> gray) {
    if (gray.size() != std::size_t(width) * height) {
        throw Error(ErrorCode::DimensionMismatch, "pixel buffer does not match " + std::to_string(width) +
                                                      "x" + std::to_string(height));
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(gray.data()), std::streamsize(gray.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write to " + path + " failed");
}

}  // namespace gdeck
