#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staterep/core/rng.hpp"
#include "staterep/env/types.hpp"

namespace staterep::env {

enum class Role { Message, Goal, Enemy };

std::string to_string(Role role);

// Display/base name pair for one role. Observations use the base name; the
// environment manual refers to the role by the synonym, so the agent has to
// bridge the two semantically.
struct RoleNames {
    std::string base;
    std::string synonym;
};

struct SynonymTable {
    RoleNames message;
    RoleNames goal;
    RoleNames enemy;

    const RoleNames& for_role(Role role) const;
};

// Fixed 12-word base-name vocabulary and its per-word synonyms.
const std::vector<std::string>& messenger_vocabulary();
const std::string& synonym_for(const std::string& base_name);

// Deterministic per-seed assignment of distinct base names to the three
// roles. Two roles never share a name.
SynonymTable synonym_table(Rng& rng);

struct MessengerEntity {
    std::string base;
    std::string synonym;
    Role role = Role::Message;
    GridPos pos;
};

// Coordinates follow (row, col) with row growing southward and col eastward.
struct MessengerState {
    int rows = 10;
    int cols = 10;
    GridPos agent;
    std::vector<MessengerEntity> entities;  // message, goal, enemy order
    bool has_message = false;
    std::optional<std::string> last_action;

    const MessengerEntity& entity(Role role) const;
};

// Seeded spawn: uniform cells with pairwise Manhattan separation >= 2
// between the agent and every entity.
MessengerState messenger_spawn(Rng& rng);

enum class MessengerAction { North = 0, South = 1, East = 2, West = 3, Stay = 4 };

inline constexpr const char* kMessengerActionLabels[5] = {
    "Move North", "Move South", "Move East", "Move West", "Stay",
};

// Entity view relative to the agent, precomputed for encoders.
struct MessengerEntityView {
    std::string base;
    std::string synonym;
    Role role = Role::Message;
    GridPos pos;
    int d_row = 0;  // pos.row - agent.row (positive = south)
    int d_col = 0;  // pos.col - agent.col (positive = east)
    int distance = 0;
};

struct MessengerObs {
    int rows = 10;
    int cols = 10;
    GridPos agent;
    bool has_message = false;
    std::optional<std::string> last_action;
    std::vector<MessengerEntityView> entities;
};

MessengerObs messenger_observe(const MessengerState& state);

// Compass word for a relative offset ("north", "southwest", ...); empty for
// a zero offset.
std::string direction_word(int d_row, int d_col);

// Deterministic scripted policy used as a test oracle: walks toward the
// message, then the goal, never stepping onto the enemy cell. Returns a
// 0-based MessengerAction index.
int messenger_scripted_action(const MessengerState& state);

}  // namespace staterep::env
