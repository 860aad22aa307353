#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace staterep::encoders {

// Fixed-size 24-bit RGB canvas with integer drawing primitives. No
// anti-aliasing anywhere, so renders are byte-stable across platforms.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    Raster(int w, int h, std::array<std::uint8_t, 3> fill_color = {255, 255, 255});

    void set(int x, int y, std::array<std::uint8_t, 3> color);
    std::array<std::uint8_t, 3> pixel(int x, int y) const;
    void fill_rect(int x0, int y0, int w, int h, std::array<std::uint8_t, 3> color);
    // 5x7 bitmap glyph scaled by an integer factor; supported glyphs are the
    // ones the renderers use (A B D E G K M P X ^ and digits are not needed).
    void draw_glyph(char glyph, int x, int y, int scale, std::array<std::uint8_t, 3> color);
};

// Encodes the raster as a valid PNG (truecolor 8-bit, zlib stream made of
// stored-deflate blocks). Deterministic: equal rasters produce equal bytes.
std::vector<unsigned char> encode_png(const Raster& raster);

}  // namespace staterep::encoders
