#include "staterep/encoders/messenger_text.hpp"

#include <map>

#include "staterep/core/error.hpp"

namespace staterep::encoders {

using env::MessengerEntityView;
using env::MessengerObs;
using env::Role;

namespace {

std::string steps_phrase(int distance) {
    return std::to_string(distance) + (distance == 1 ? " step" : " steps");
}

std::string possession_line(bool has_message) {
    return has_message ? "You (agent) already have the message."
                       : "You (agent) don't have the message.";
}

std::string natural_language(const MessengerObs& obs) {
    std::string out;
    if (obs.last_action) out += "You took action " + *obs.last_action + ".\n";
    out += possession_line(obs.has_message) + "\n";
    out += "You see:";
    for (const auto& e : obs.entities) {
        out += "\n- " + e.base + " " + steps_phrase(e.distance) + " away";
    }
    return out;
}

std::string natural_language_pos(const MessengerObs& obs) {
    std::string out = obs.has_message ? "You are an agent with the message."
                                      : "You are an agent without the message.";
    out += " You are currently in position " + std::to_string(obs.agent.row) + ", " +
           std::to_string(obs.agent.col) + ".";
    if (obs.entities.empty()) {
        out += " You can see nothing.";
        return out;
    }
    out += " You can see ";
    for (size_t i = 0; i < obs.entities.size(); ++i) {
        const auto& e = obs.entities[i];
        if (i > 0) out += ", ";
        if (e.distance == 0) {
            out += "a " + e.base + " 0 steps away";
        } else {
            // This variant always pluralises ("1 steps"), as shipped.
            out += "a " + e.base + " " + std::to_string(e.distance) + " steps to the " +
                   env::direction_word(e.d_row, e.d_col);
        }
    }
    out += ".";
    return out;
}

std::string coordinates(const MessengerObs& obs) {
    std::string out = "COORDINATE SYSTEM:\n";
    out += "Agent: (" + std::to_string(obs.agent.row) + ", " + std::to_string(obs.agent.col) +
           ")\n";
    out += "Entities:";
    std::map<std::string, int> occurrence;
    for (const auto& e : obs.entities) {
        int index = occurrence[e.base]++;
        out += "\n  " + e.base + "_" + std::to_string(index) + ": (" + std::to_string(e.pos.row) +
               ", " + std::to_string(e.pos.col) + ")";
    }
    out += "\n\nOriginal View:\n";
    out += possession_line(obs.has_message) + "\n\n";
    out += "You see:";
    for (const auto& e : obs.entities) {
        if (e.distance == 0) {
            out += "\n- " + e.base + " 0 steps away";
        } else {
            out += "\n- " + e.base + " " + steps_phrase(e.distance) + " to your " +
                   env::direction_word(e.d_row, e.d_col);
        }
    }
    return out;
}

std::string symbolic(const MessengerObs& obs) {
    std::vector<std::string> grid(static_cast<size_t>(obs.rows),
                                  std::string(static_cast<size_t>(obs.cols), '.'));
    const MessengerEntityView* by_role[3] = {nullptr, nullptr, nullptr};
    for (const auto& e : obs.entities) {
        char glyph = '.';
        switch (e.role) {
            case Role::Enemy: glyph = 'E'; break;
            case Role::Message: glyph = 'M'; break;
            case Role::Goal: glyph = 'G'; break;
        }
        grid[static_cast<size_t>(e.pos.row)][static_cast<size_t>(e.pos.col)] = glyph;
        by_role[static_cast<int>(e.role)] = &e;
    }
    // The agent marker wins the cell when co-located with an entity.
    grid[static_cast<size_t>(obs.agent.row)][static_cast<size_t>(obs.agent.col)] =
        obs.has_message ? 'P' : 'A';

    std::string out;
    for (const auto& row : grid) out += row + "\n";
    out += "Legend:\n";
    out += "A=agent(no msg)\n";
    out += "P=agent(with msg)\n";
    out += ".=empty\n";
    out += "Entities:";
    const std::pair<char, Role> legend[3] = {
        {'E', Role::Enemy}, {'M', Role::Message}, {'G', Role::Goal}};
    for (const auto& [glyph, role] : legend) {
        const auto* e = by_role[static_cast<int>(role)];
        if (e) out += std::string("\n  ") + glyph + "=" + e->base;
    }
    return out;
}

}  // namespace

std::string encode_messenger(const MessengerObs& obs, Structure structure) {
    switch (structure) {
        case Structure::NaturalLanguage: return natural_language(obs);
        case Structure::NaturalLanguagePos: return natural_language_pos(obs);
        case Structure::Coordinates: return coordinates(obs);
        case Structure::Symbolic: return symbolic(obs);
        default:
            throw config_error("structure " + to_string(structure) +
                               " is not a messenger format");
    }
}

}  // namespace staterep::encoders
