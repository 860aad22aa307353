#include "doctest.h"
#include "staterep/core/rng.hpp"
#include "staterep/core/sha256.hpp"
#include "staterep/encoders/image.hpp"

using namespace staterep;
using namespace staterep::encoders;
using namespace staterep::env;

TEST_SUITE("image") {

TEST_CASE("equal states produce byte-identical PNGs") {
    HanoiState s = HanoiState::initial(3);
    auto a = render_image(Observation{s});
    auto b = render_image(Observation{s});
    CHECK(a == b);
    CHECK(a.size() > 100);

    Rng rng(12);
    MessengerState m = messenger_spawn(rng);
    auto obs = messenger_observe(m);
    CHECK(render_image(Observation{obs}) == render_image(Observation{obs}));
}

TEST_CASE("PNG container is well formed") {
    auto png = render_image(Observation{HanoiState::initial(3)});
    const unsigned char signature[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    REQUIRE(png.size() > 8);
    for (int i = 0; i < 8; ++i) CHECK(png[static_cast<size_t>(i)] == signature[i]);
    // IHDR follows immediately, then IEND terminates the stream.
    CHECK(std::string(png.begin() + 12, png.begin() + 16) == "IHDR");
    CHECK(std::string(png.end() - 8, png.end() - 4) == "IEND");
}

TEST_CASE("hanoi reset draws three stacked width-proportional disks on peg A") {
    Raster r = render_hanoi_raster(HanoiState::initial(3));
    REQUIRE(r.width == 320);
    REQUIRE(r.height == 240);
    // Disk 2 (largest, bottom), disk 1, disk 0 from the base upward.
    CHECK(r.pixel(80, 190) == std::array<std::uint8_t, 3>{60, 90, 200});
    CHECK(r.pixel(80, 170) == std::array<std::uint8_t, 3>{60, 160, 70});
    CHECK(r.pixel(80, 150) == std::array<std::uint8_t, 3>{202, 60, 60});
    // Width proportionality: disk 2 extends past disk 0's edge.
    CHECK(r.pixel(80 - 35, 190) == std::array<std::uint8_t, 3>{60, 90, 200});
    CHECK(r.pixel(80 - 35, 150) == std::array<std::uint8_t, 3>{240, 240, 240});
    // Peg C carries no disks: background beside the pole.
    CHECK(r.pixel(260, 150) == std::array<std::uint8_t, 3>{240, 240, 240});
}

TEST_CASE("messenger enemy tile and goal tile differ in color and glyph mask") {
    MessengerState s;
    s.agent = {0, 0};
    s.entities = {
        MessengerEntity{"robot", "secret document", Role::Message, {2, 2}},
        MessengerEntity{"ball", "orb", Role::Goal, {4, 4}},
        MessengerEntity{"mage", "wizard", Role::Enemy, {6, 6}},
    };
    Raster r = render_messenger_raster(messenger_observe(s));
    auto goal_base = r.pixel(4 * 32 + 4, 4 * 32 + 4);
    auto enemy_base = r.pixel(6 * 32 + 4, 6 * 32 + 4);
    CHECK(goal_base != enemy_base);

    // Glyph masks (white pixels relative to the tile origin) must differ.
    auto mask = [&r](int tile_col, int tile_row) {
        std::vector<bool> bits;
        for (int y = 0; y < 32; ++y) {
            for (int x = 0; x < 32; ++x) {
                bits.push_back(r.pixel(tile_col * 32 + x, tile_row * 32 + y) ==
                               std::array<std::uint8_t, 3>{255, 255, 255});
            }
        }
        return bits;
    };
    CHECK(mask(4, 4) != mask(6, 6));
    CHECK(mask(2, 2) != mask(6, 6));
}

TEST_CASE("golden digest: hanoi reset PNG is frozen") {
    auto png = render_image(Observation{HanoiState::initial(3)});
    CHECK(sha256_hex(png) == "6814e96c93cac7e6516437465eefb65c43911a2628df151db503c585d314d830");
}

}  // TEST_SUITE
