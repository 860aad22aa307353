#include "staterep/encoders/png.hpp"

#include <cstring>

namespace staterep::encoders {

Raster::Raster(int w, int h, std::array<std::uint8_t, 3> fill_color) : width(w), height(h) {
    rgb.resize(static_cast<size_t>(w) * static_cast<size_t>(h) * 3);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) set(x, y, fill_color);
    }
}

void Raster::set(int x, int y, std::array<std::uint8_t, 3> color) {
    if (x < 0 || y < 0 || x >= width || y >= height) return;
    size_t i = (static_cast<size_t>(y) * static_cast<size_t>(width) + static_cast<size_t>(x)) * 3;
    rgb[i] = color[0];
    rgb[i + 1] = color[1];
    rgb[i + 2] = color[2];
}

std::array<std::uint8_t, 3> Raster::pixel(int x, int y) const {
    size_t i = (static_cast<size_t>(y) * static_cast<size_t>(width) + static_cast<size_t>(x)) * 3;
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
}

void Raster::fill_rect(int x0, int y0, int w, int h, std::array<std::uint8_t, 3> color) {
    for (int y = y0; y < y0 + h; ++y) {
        for (int x = x0; x < x0 + w; ++x) set(x, y, color);
    }
}

namespace {

// 5x7 bitmaps, one byte per row, low 5 bits used (bit 4 = leftmost column).
struct Glyph {
    char ch;
    std::uint8_t rows[7];
};

constexpr Glyph kGlyphs[] = {
    {'A', {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}},
    {'B', {0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E}},
    {'D', {0x1E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1E}},
    {'E', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F}},
    {'G', {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0E}},
    {'K', {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11}},
    {'M', {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11}},
    {'P', {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10}},
    {'X', {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11}},
    {'^', {0x04, 0x0A, 0x11, 0x00, 0x00, 0x00, 0x00}},
};

std::uint32_t crc32(const unsigned char* data, size_t len, std::uint32_t crc = 0) {
    static std::uint32_t table[256];
    static bool init = false;
    if (!init) {
        for (std::uint32_t n = 0; n < 256; ++n) {
            std::uint32_t c = n;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            table[n] = c;
        }
        init = true;
    }
    crc ^= 0xFFFFFFFFu;
    for (size_t i = 0; i < len; ++i) crc = table[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
    return crc ^ 0xFFFFFFFFu;
}

void push_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v >> 24));
    out.push_back(static_cast<unsigned char>(v >> 16));
    out.push_back(static_cast<unsigned char>(v >> 8));
    out.push_back(static_cast<unsigned char>(v));
}

void push_chunk(std::vector<unsigned char>& out, const char type[4],
                const std::vector<unsigned char>& data) {
    push_u32(out, static_cast<std::uint32_t>(data.size()));
    size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    push_u32(out, crc32(out.data() + crc_start, out.size() - crc_start));
}

}  // namespace

void Raster::draw_glyph(char glyph, int x, int y, int scale,
                        std::array<std::uint8_t, 3> color) {
    for (const auto& g : kGlyphs) {
        if (g.ch != glyph) continue;
        for (int row = 0; row < 7; ++row) {
            for (int col = 0; col < 5; ++col) {
                if (g.rows[row] & (1 << (4 - col))) {
                    fill_rect(x + col * scale, y + row * scale, scale, scale, color);
                }
            }
        }
        return;
    }
}

std::vector<unsigned char> encode_png(const Raster& raster) {
    // Scanline stream: filter byte 0 per row.
    std::vector<unsigned char> raw;
    raw.reserve(static_cast<size_t>(raster.height) * (static_cast<size_t>(raster.width) * 3 + 1));
    for (int y = 0; y < raster.height; ++y) {
        raw.push_back(0);
        const std::uint8_t* row = raster.rgb.data() +
                                  static_cast<size_t>(y) * static_cast<size_t>(raster.width) * 3;
        raw.insert(raw.end(), row, row + static_cast<size_t>(raster.width) * 3);
    }

    // zlib wrapper around stored (uncompressed) deflate blocks.
    std::vector<unsigned char> z;
    z.push_back(0x78);
    z.push_back(0x01);
    size_t offset = 0;
    while (offset < raw.size()) {
        size_t block = std::min<size_t>(65535, raw.size() - offset);
        bool final = offset + block == raw.size();
        z.push_back(final ? 0x01 : 0x00);
        z.push_back(static_cast<unsigned char>(block & 0xFF));
        z.push_back(static_cast<unsigned char>(block >> 8));
        z.push_back(static_cast<unsigned char>(~block & 0xFF));
        z.push_back(static_cast<unsigned char>((~block >> 8) & 0xFF));
        z.insert(z.end(), raw.begin() + static_cast<long>(offset),
                 raw.begin() + static_cast<long>(offset + block));
        offset += block;
    }
    std::uint32_t s1 = 1, s2 = 0;
    for (unsigned char byte : raw) {
        s1 = (s1 + byte) % 65521;
        s2 = (s2 + s1) % 65521;
    }
    push_u32(z, (s2 << 16) | s1);

    std::vector<unsigned char> out = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    std::vector<unsigned char> ihdr;
    push_u32(ihdr, static_cast<std::uint32_t>(raster.width));
    push_u32(ihdr, static_cast<std::uint32_t>(raster.height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(2);  // truecolor
    ihdr.push_back(0);  // compression
    ihdr.push_back(0);  // filter
    ihdr.push_back(0);  // no interlace
    push_chunk(out, "IHDR", ihdr);
    push_chunk(out, "IDAT", z);
    push_chunk(out, "IEND", {});
    return out;
}

}  // namespace staterep::encoders
