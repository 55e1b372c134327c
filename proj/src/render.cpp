#include "gwva/render.hpp"

#include <cmath>
#include <fstream>

#include <zlib.h>

#include "gwva/errors.hpp"

namespace gwva {

Rgba parse_color(const std::string& hex)
{
    if (hex.empty() || hex[0] != '#' ||
        (hex.size() != 7 && hex.size() != 9))
        throw input_error("color must be #rrggbb or #rrggbbaa, got '" + hex +
                          "'");
    auto nibble = [&hex](std::size_t i) -> unsigned {
        const char c = hex[i];
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return 10 + (c - 'a');
        if (c >= 'A' && c <= 'F')
            return 10 + (c - 'A');
        throw input_error("invalid hex digit in color '" + hex + "'");
    };
    auto byte = [&nibble](std::size_t i) {
        return static_cast<std::uint8_t>(nibble(i) * 16 + nibble(i + 1));
    };
    Rgba c{byte(1), byte(3), byte(5), 255};
    if (hex.size() == 9)
        c.a = byte(7);
    return c;
}

std::vector<Rgba> default_palette(int k)
{
    static const Rgba kStops[] = {
        {0, 128, 0, 255},     // green
        {154, 205, 50, 255},  // yellow-green
        {255, 255, 0, 255},   // yellow
        {255, 165, 0, 255},   // orange
        {255, 0, 0, 255},     // red
    };
    std::vector<Rgba> palette;
    palette.reserve(k);
    if (k == 1)
        return {kStops[4]};
    for (int i = 0; i < k; ++i) {
        // spread the five stops over k classes by nearest stop
        const double t = static_cast<double>(i) / (k - 1) * 4.0;
        palette.push_back(kStops[static_cast<int>(std::lround(t))]);
    }
    return palette;
}

Image render_map(const Grid& classes, std::span<const Rgba> palette)
{
    Image img;
    img.width = classes.ncols();
    img.height = classes.nrows();
    img.pixels.resize(classes.size());
    const auto values = classes.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (classes.is_nodata(v)) {
            img.pixels[i] = Rgba{0, 0, 0, 0};
            continue;
        }
        const long id = std::lround(v);
        if (id < 1 || id > static_cast<long>(palette.size()))
            throw input_error("class id " + std::to_string(id) +
                              " outside the palette (size " +
                              std::to_string(palette.size()) + ")");
        img.pixels[i] = palette[id - 1];
    }
    return img;
}

namespace {

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v)
{
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::vector<std::uint8_t>& payload)
{
    append_u32(out, static_cast<std::uint32_t>(payload.size()));
    const std::size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), payload.begin(), payload.end());
    const std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start)));
    append_u32(out, crc);
}

} // namespace

std::vector<std::uint8_t> encode_png(const Image& image)
{
    if (image.width < 1 || image.height < 1 ||
        image.pixels.size() !=
            static_cast<std::size_t>(image.width) * image.height)
        throw input_error("encode_png: inconsistent image dimensions");

    std::vector<std::uint8_t> out{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

    std::vector<std::uint8_t> ihdr;
    append_u32(ihdr, static_cast<std::uint32_t>(image.width));
    append_u32(ihdr, static_cast<std::uint32_t>(image.height));
    ihdr.push_back(8); // bit depth
    ihdr.push_back(6); // color type RGBA
    ihdr.push_back(0); // compression
    ihdr.push_back(0); // filter
    ihdr.push_back(0); // interlace
    append_chunk(out, "IHDR", ihdr);

    // raw scanlines, filter byte 0 per row
    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(image.height) *
                (1 + 4 * static_cast<std::size_t>(image.width)));
    for (int row = 0; row < image.height; ++row) {
        raw.push_back(0);
        for (int col = 0; col < image.width; ++col) {
            const Rgba& p =
                image.pixels[static_cast<std::size_t>(row) * image.width + col];
            raw.push_back(p.r);
            raw.push_back(p.g);
            raw.push_back(p.b);
            raw.push_back(p.a);
        }
    }
    uLongf compressed_size = ::compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> idat(compressed_size);
    if (::compress2(idat.data(), &compressed_size, raw.data(),
                    static_cast<uLong>(raw.size()), 6) != Z_OK)
        throw compute_error("encode_png: deflate failed");
    idat.resize(compressed_size);
    append_chunk(out, "IDAT", idat);

    append_chunk(out, "IEND", {});
    return out;
}

void write_png_file(const Image& image, const std::filesystem::path& path)
{
    const std::vector<std::uint8_t> bytes = encode_png(image);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot create PNG file: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw input_error("failed writing PNG file: " + path.string());
}

} // namespace gwva
