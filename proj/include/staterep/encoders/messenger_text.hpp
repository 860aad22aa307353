#pragma once

#include <string>

#include "staterep/encoders/representation.hpp"
#include "staterep/env/messenger.hpp"

namespace staterep::encoders {

// Messenger observation renderings, one per structure variant:
//  - NaturalLanguage: last action, message possession, "- bird 9 steps away"
//  - NaturalLanguagePos: single sentence with the agent position and
//    compass directions
//  - Coordinates: "COORDINATE SYSTEM:" block followed by the original view
//  - Symbolic: the 10x10 dot grid plus legend
std::string encode_messenger(const env::MessengerObs& obs, Structure structure);

}  // namespace staterep::encoders
