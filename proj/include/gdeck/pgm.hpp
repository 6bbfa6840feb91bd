#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace gdeck {

/// Binary PGM (P5), 8-bit grayscale, row-major top to bottom.
void write_pgm(const std::string& path, uint32_t width, uint32_t height, std::span<const uint8_t> gray);

}  // namespace gdeck
