#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gwva/grid.hpp"

namespace gwva {

struct Rgba {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    std::uint8_t a = 255;
};

/// "#rrggbb" or "#rrggbbaa".
Rgba parse_color(const std::string& hex);

/// Low -> high class colors: green, yellow-green, yellow, orange, red.
std::vector<Rgba> default_palette(int k);

struct Image {
    int width = 0;
    int height = 0;
    std::vector<Rgba> pixels; // row-major, top row first
};

/// One pixel per cell: class i -> palette[i-1], nodata -> fully transparent.
/// Class ids outside 1..palette.size() are an error.
Image render_map(const Grid& classes, std::span<const Rgba> palette);

/// Minimal RGBA PNG encoder (one IDAT, fixed zlib settings, no ancillary
/// chunks) so identical images always encode to identical bytes.
std::vector<std::uint8_t> encode_png(const Image& image);

void write_png_file(const Image& image, const std::filesystem::path& path);

} // namespace gwva
