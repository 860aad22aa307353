#include "staterep/encoders/image.hpp"

namespace staterep::encoders {

using Color = std::array<std::uint8_t, 3>;

namespace {

constexpr Color kBackground{240, 240, 240};
constexpr Color kWood{120, 85, 50};
constexpr Color kDiskColors[3] = {{202, 60, 60}, {60, 160, 70}, {60, 90, 200}};

constexpr Color kTileEmpty{225, 225, 225};
constexpr Color kTileGridLine{180, 180, 180};
constexpr Color kAgentBlue{70, 110, 220};
constexpr Color kEnemyRed{205, 65, 65};
constexpr Color kMessageAmber{215, 165, 50};
constexpr Color kGoalGreen{80, 165, 90};
constexpr Color kWhite{255, 255, 255};
constexpr Color kWallGrey{90, 90, 90};
constexpr Color kHiddenDark{45, 45, 45};

constexpr int kTile = 32;

Color grid_color(env::GridColor c) {
    switch (c) {
        case env::GridColor::Red: return {200, 60, 60};
        case env::GridColor::Green: return {60, 170, 70};
        case env::GridColor::Blue: return {60, 90, 210};
        case env::GridColor::Purple: return {150, 70, 190};
        case env::GridColor::Yellow: return {220, 200, 60};
        case env::GridColor::Grey: return {130, 130, 130};
    }
    return {0, 0, 0};
}

void draw_tile_glyph(Raster& raster, int tile_x, int tile_y, char glyph, Color color) {
    // 5x7 glyph at scale 3 (15x21), centered within a 32px tile.
    raster.draw_glyph(glyph, tile_x * kTile + (kTile - 15) / 2, tile_y * kTile + (kTile - 21) / 2,
                      3, color);
}

}  // namespace

Raster render_hanoi_raster(const env::HanoiState& state) {
    Raster raster(320, 240, kBackground);
    raster.fill_rect(20, 200, 280, 8, kWood);  // base
    const int peg_x[3] = {80, 160, 240};
    for (int p = 0; p < 3; ++p) {
        raster.fill_rect(peg_x[p] - 2, 80, 4, 120, kWood);
    }
    const int disk_height = 20;
    for (int p = 0; p < 3; ++p) {
        const auto& peg = state.pegs[static_cast<size_t>(p)];
        for (size_t slot = 0; slot < peg.size(); ++slot) {
            const int disk = peg[slot];
            const int disk_width = 30 + disk * 22;
            const int top = 200 - disk_height * (static_cast<int>(slot) + 1);
            raster.fill_rect(peg_x[p] - disk_width / 2, top, disk_width, disk_height,
                             kDiskColors[disk % 3]);
        }
    }
    return raster;
}

Raster render_messenger_raster(const env::MessengerObs& obs) {
    Raster raster(obs.cols * kTile, obs.rows * kTile, kTileEmpty);
    for (int r = 0; r <= obs.rows; ++r) {
        raster.fill_rect(0, r * kTile - (r == obs.rows ? 1 : 0), obs.cols * kTile, 1,
                         kTileGridLine);
    }
    for (int c = 0; c <= obs.cols; ++c) {
        raster.fill_rect(c * kTile - (c == obs.cols ? 1 : 0), 0, 1, obs.rows * kTile,
                         kTileGridLine);
    }
    for (const auto& e : obs.entities) {
        Color tile;
        char glyph;
        switch (e.role) {
            case env::Role::Enemy: tile = kEnemyRed; glyph = 'E'; break;
            case env::Role::Message: tile = kMessageAmber; glyph = 'M'; break;
            case env::Role::Goal: tile = kGoalGreen; glyph = 'G'; break;
            default: tile = kTileEmpty; glyph = '?'; break;
        }
        raster.fill_rect(e.pos.col * kTile + 1, e.pos.row * kTile + 1, kTile - 2, kTile - 2, tile);
        draw_tile_glyph(raster, e.pos.col, e.pos.row, glyph, kWhite);
    }
    raster.fill_rect(obs.agent.col * kTile + 1, obs.agent.row * kTile + 1, kTile - 2, kTile - 2,
                     kAgentBlue);
    draw_tile_glyph(raster, obs.agent.col, obs.agent.row, obs.has_message ? 'P' : 'A', kWhite);
    return raster;
}

Raster render_grid_raster(const env::GridObs& obs) {
    constexpr int kView = env::GridObs::kView;
    Raster raster(kView * kTile, kView * kTile, kHiddenDark);
    for (int wr = 0; wr < kView; ++wr) {
        for (int wc = 0; wc < kView; ++wc) {
            if (!obs.visible_at(wr, wc)) continue;
            const env::Cell& cell = obs.at(wr, wc);
            Color base = kTileEmpty;
            if (cell.type == env::Cell::Type::Wall) base = kWallGrey;
            raster.fill_rect(wc * kTile, wr * kTile, kTile, kTile, base);
            if (cell.type == env::Cell::Type::Door) {
                raster.fill_rect(wc * kTile + 2, wr * kTile + 2, kTile - 4, kTile - 4,
                                 grid_color(cell.door_color));
                draw_tile_glyph(raster, wc, wr, 'D',
                                cell.door_state == env::DoorState::Open ? kTileEmpty : kWhite);
            } else if (cell.type == env::Cell::Type::Object) {
                char glyph = 'B';
                if (cell.object.kind == env::ObjKind::Box) glyph = 'X';
                if (cell.object.kind == env::ObjKind::Key) glyph = 'K';
                draw_tile_glyph(raster, wc, wr, glyph, grid_color(cell.object.color));
            }
        }
    }
    // The agent sits at the bottom-center of the window, always facing up.
    const int agent_wc = kView / 2, agent_wr = kView - 1;
    raster.fill_rect(agent_wc * kTile, agent_wr * kTile, kTile, kTile, kTileEmpty);
    draw_tile_glyph(raster, agent_wc, agent_wr, '^', kAgentBlue);
    return raster;
}

std::vector<unsigned char> render_image(const env::Observation& observation) {
    if (std::holds_alternative<env::HanoiState>(observation)) {
        return encode_png(render_hanoi_raster(std::get<env::HanoiState>(observation)));
    }
    if (std::holds_alternative<env::MessengerObs>(observation)) {
        return encode_png(render_messenger_raster(std::get<env::MessengerObs>(observation)));
    }
    return encode_png(render_grid_raster(std::get<env::GridObs>(observation)));
}

}  // namespace staterep::encoders
