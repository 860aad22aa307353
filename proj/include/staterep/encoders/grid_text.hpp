#pragma once

#include <string>

#include "staterep/env/grid.hpp"

namespace staterep::encoders {

// Text rendering of the egocentric grid view: mission, heading, carrying
// slot, then visible objects/doors ("a red ball 2 steps forward") and the
// nearest visible wall along each pure axis.
std::string encode_grid(const env::GridObs& obs);

}  // namespace staterep::encoders
