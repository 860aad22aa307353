#include "staterep/env/messenger.hpp"

#include <algorithm>
#include <array>

#include "staterep/core/error.hpp"

namespace staterep::env {

std::string to_string(Role role) {
    switch (role) {
        case Role::Message: return "message";
        case Role::Goal: return "goal";
        case Role::Enemy: return "enemy";
    }
    return "message";
}

const RoleNames& SynonymTable::for_role(Role role) const {
    switch (role) {
        case Role::Message: return message;
        case Role::Goal: return goal;
        case Role::Enemy: return enemy;
    }
    return message;
}

const std::vector<std::string>& messenger_vocabulary() {
    static const std::vector<std::string> vocab = {
        "airplane", "ball", "bird", "dog", "fish", "mage",
        "queen", "robot", "scientist", "ship", "sword", "thief",
    };
    return vocab;
}

const std::string& synonym_for(const std::string& base_name) {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"airplane", "jet"},     {"ball", "orb"},
        {"bird", "sparrow"},     {"dog", "hound"},
        {"fish", "trout"},       {"mage", "wizard"},
        {"queen", "monarch"},    {"robot", "secret document"},
        {"scientist", "researcher"}, {"ship", "vessel"},
        {"sword", "blade"},      {"thief", "burglar"},
    };
    for (const auto& [base, synonym] : table) {
        if (base == base_name) return synonym;
    }
    throw config_error("unknown messenger entity name: " + base_name);
}

SynonymTable synonym_table(Rng& rng) {
    auto pool = messenger_vocabulary();
    std::array<std::string, 3> picked;
    for (auto& slot : picked) {
        auto idx = rng.next_below(static_cast<std::uint32_t>(pool.size()));
        slot = pool[idx];
        pool.erase(pool.begin() + idx);
    }
    SynonymTable t;
    t.message = {picked[0], synonym_for(picked[0])};
    t.goal = {picked[1], synonym_for(picked[1])};
    t.enemy = {picked[2], synonym_for(picked[2])};
    return t;
}

const MessengerEntity& MessengerState::entity(Role role) const {
    for (const auto& e : entities) {
        if (e.role == role) return e;
    }
    throw state_error("messenger state has no entity for role " + to_string(role));
}

MessengerState messenger_spawn(Rng& rng) {
    MessengerState s;
    auto table = synonym_table(rng);

    auto random_pos = [&rng, &s]() {
        return GridPos{rng.range(0, s.rows - 1), rng.range(0, s.cols - 1)};
    };
    auto separated = [](const GridPos& p, const std::vector<GridPos>& placed) {
        return std::all_of(placed.begin(), placed.end(),
                           [&p](const GridPos& q) { return manhattan(p, q) >= 2; });
    };

    std::vector<GridPos> placed;
    s.agent = random_pos();
    placed.push_back(s.agent);

    const std::array<std::pair<Role, RoleNames>, 3> roles = {{
        {Role::Message, table.message},
        {Role::Goal, table.goal},
        {Role::Enemy, table.enemy},
    }};
    for (const auto& [role, names] : roles) {
        GridPos pos = random_pos();
        while (!separated(pos, placed)) pos = random_pos();
        placed.push_back(pos);
        s.entities.push_back(MessengerEntity{names.base, names.synonym, role, pos});
    }
    return s;
}

MessengerObs messenger_observe(const MessengerState& state) {
    MessengerObs obs;
    obs.rows = state.rows;
    obs.cols = state.cols;
    obs.agent = state.agent;
    obs.has_message = state.has_message;
    obs.last_action = state.last_action;
    for (const auto& e : state.entities) {
        MessengerEntityView v;
        v.base = e.base;
        v.synonym = e.synonym;
        v.role = e.role;
        v.pos = e.pos;
        v.d_row = e.pos.row - state.agent.row;
        v.d_col = e.pos.col - state.agent.col;
        v.distance = std::abs(v.d_row) + std::abs(v.d_col);
        obs.entities.push_back(std::move(v));
    }
    return obs;
}

std::string direction_word(int d_row, int d_col) {
    std::string word;
    if (d_row < 0) word += "north";
    if (d_row > 0) word += "south";
    if (d_col > 0) word += "east";
    if (d_col < 0) word += "west";
    return word;
}

namespace {

GridPos apply_messenger_action(const MessengerState& s, MessengerAction a) {
    GridPos p = s.agent;
    switch (a) {
        case MessengerAction::North: p.row -= 1; break;
        case MessengerAction::South: p.row += 1; break;
        case MessengerAction::East: p.col += 1; break;
        case MessengerAction::West: p.col -= 1; break;
        case MessengerAction::Stay: break;
    }
    p.row = std::clamp(p.row, 0, s.rows - 1);
    p.col = std::clamp(p.col, 0, s.cols - 1);
    return p;
}

}  // namespace

int messenger_scripted_action(const MessengerState& state) {
    const GridPos target =
        state.has_message ? state.entity(Role::Goal).pos : state.entity(Role::Message).pos;
    const GridPos enemy = state.entity(Role::Enemy).pos;

    // BFS distances to the target over the grid minus the enemy cell; the
    // first move of a shortest path, with a fixed N/S/E/W preference order.
    const int rows = state.rows, cols = state.cols;
    std::vector<int> dist(static_cast<size_t>(rows * cols), -1);
    auto idx = [cols](const GridPos& p) { return static_cast<size_t>(p.row * cols + p.col); };
    std::vector<GridPos> frontier{target};
    dist[idx(target)] = 0;
    while (!frontier.empty()) {
        std::vector<GridPos> next_frontier;
        for (const auto& p : frontier) {
            const GridPos neighbours[4] = {
                {p.row - 1, p.col}, {p.row + 1, p.col}, {p.row, p.col + 1}, {p.row, p.col - 1}};
            for (const auto& n : neighbours) {
                if (n.row < 0 || n.row >= rows || n.col < 0 || n.col >= cols) continue;
                if (n == enemy || dist[idx(n)] >= 0) continue;
                dist[idx(n)] = dist[idx(p)] + 1;
                next_frontier.push_back(n);
            }
        }
        frontier = std::move(next_frontier);
    }

    int best = static_cast<int>(MessengerAction::Stay);
    int best_dist = dist[idx(state.agent)] >= 0 ? dist[idx(state.agent)] : rows * cols;
    for (int a = 0; a < 4; ++a) {
        GridPos next = apply_messenger_action(state, static_cast<MessengerAction>(a));
        if (next == enemy || next == state.agent) continue;
        int d = dist[idx(next)];
        if (d >= 0 && d < best_dist) {
            best_dist = d;
            best = a;
        }
    }
    return best;
}

}  // namespace staterep::env
