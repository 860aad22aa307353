#pragma once

#include <vector>

#include "staterep/encoders/png.hpp"
#include "staterep/env/environment.hpp"

namespace staterep::encoders {

// Deterministic rasters: Hanoi on a 320x240 canvas with width-proportional
// disks; Messenger as a 10x10 grid of 32px tiles with role glyphs; the grid
// view as 32px tiles of the visible 7x7 window.
Raster render_hanoi_raster(const env::HanoiState& state);
Raster render_messenger_raster(const env::MessengerObs& obs);
Raster render_grid_raster(const env::GridObs& obs);

// PNG attachment for the TextPlusImage grounding.
std::vector<unsigned char> render_image(const env::Observation& observation);

}  // namespace staterep::encoders
