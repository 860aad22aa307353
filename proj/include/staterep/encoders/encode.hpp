#pragma once

#include <string>

#include "staterep/encoders/grid_text.hpp"
#include "staterep/encoders/hanoi_codec.hpp"
#include "staterep/encoders/messenger_text.hpp"
#include "staterep/env/environment.hpp"

namespace staterep::encoders {

// Family dispatch over the observation payload.
inline std::string encode_state_text(const env::Observation& obs, Structure structure) {
    if (std::holds_alternative<env::HanoiState>(obs)) {
        return encode_hanoi(std::get<env::HanoiState>(obs), structure);
    }
    if (std::holds_alternative<env::MessengerObs>(obs)) {
        return encode_messenger(std::get<env::MessengerObs>(obs), structure);
    }
    return encode_grid(std::get<env::GridObs>(obs));
}

// History variant: the step header of the long-form trajectory already names
// the action, so the Messenger action line is dropped from stored text.
inline std::string encode_history_text(const env::Observation& obs, Structure structure) {
    if (std::holds_alternative<env::MessengerObs>(obs)) {
        env::MessengerObs copy = std::get<env::MessengerObs>(obs);
        copy.last_action.reset();
        return encode_messenger(copy, structure);
    }
    return encode_state_text(obs, structure);
}

}  // namespace staterep::encoders
