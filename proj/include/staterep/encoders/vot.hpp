#pragma once

#include <string>
#include <vector>

#include "staterep/env/grid.hpp"
#include "staterep/env/hanoi.hpp"
#include "staterep/env/messenger.hpp"

namespace staterep::encoders {

// Programmatic ground-truth ASCII maps in the "Map (Top-Down View):" shape:
// RowK lines of space-separated glyphs plus a Legend block. The Hanoi
// overload emits the rod-list form instead of a grid.
std::string oracle_vot_map(const env::MessengerObs& obs);
std::string oracle_vot_map(const env::GridWorldState& state);
std::string oracle_vot_map(const env::HanoiState& state);

struct VotEntity {
    char glyph = '?';
    std::string label;
    env::GridPos pos;
};

struct VotMap {
    int rows = 0;
    int cols = 0;
    bool has_agent = false;
    env::GridPos agent;
    std::vector<VotEntity> entities;  // legend entries besides the agent and walls
};

// Inverse of the grid-form oracle maps: recovers the agent and legend-entity
// positions exactly. Missing header/legend, ragged rows, or a letter glyph
// placed twice are Parse errors.
VotMap parse_vot_map(const std::string& text);

}  // namespace staterep::encoders
