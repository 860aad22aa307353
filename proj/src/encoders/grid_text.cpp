#include "staterep/encoders/grid_text.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace staterep::encoders {

using env::Cell;
using env::GridObs;

namespace {

std::string steps(int n) { return std::to_string(n) + (n == 1 ? " step" : " steps"); }

// Egocentric phrase for a window offset: `ahead` cells forward, `lateral`
// cells to the right (negative = left).
std::string direction_phrase(int ahead, int lateral) {
    const std::string side = lateral > 0 ? "right" : "left";
    if (ahead > 0 && lateral == 0) return steps(ahead) + " forward";
    if (ahead == 0) return steps(std::abs(lateral)) + " " + side;
    return steps(ahead) + " forward and " + steps(std::abs(lateral)) + " " + side;
}

struct Entry {
    int distance;
    int window_index;
    std::string text;
};

}  // namespace

std::string encode_grid(const GridObs& obs) {
    constexpr int kView = GridObs::kView;
    const int agent_wr = kView - 1, agent_wc = kView / 2;

    std::string out = "Mission: " + obs.mission_text + "\n";
    out += "You are facing " + env::to_string(obs.heading) + ".\n";
    if (obs.carrying) {
        out += "You are carrying a " + env::to_string(obs.carrying->color) + " " +
               env::to_string(obs.carrying->kind) + ".\n";
    } else {
        out += "You are not carrying anything.\n";
    }
    out += "You see:";

    std::vector<Entry> entries;
    // Nearest visible wall per pure axis (forward / left / right).
    int wall_forward = -1, wall_left = -1, wall_right = -1;

    for (int wr = 0; wr < kView; ++wr) {
        for (int wc = 0; wc < kView; ++wc) {
            if (!obs.visible_at(wr, wc)) continue;
            const int ahead = agent_wr - wr;
            const int lateral = wc - agent_wc;
            if (ahead == 0 && lateral == 0) continue;
            const Cell& cell = obs.at(wr, wc);
            if (cell.type == Cell::Type::Wall) {
                if (lateral == 0 && ahead > 0 && (wall_forward < 0 || ahead < wall_forward)) {
                    wall_forward = ahead;
                }
                if (ahead == 0 && lateral < 0 &&
                    (wall_left < 0 || -lateral < wall_left)) {
                    wall_left = -lateral;
                }
                if (ahead == 0 && lateral > 0 && (wall_right < 0 || lateral < wall_right)) {
                    wall_right = lateral;
                }
                continue;
            }
            if (cell.type == Cell::Type::Object) {
                entries.push_back({ahead + std::abs(lateral), wr * kView + wc,
                                   "a " + env::to_string(cell.object.color) + " " +
                                       env::to_string(cell.object.kind) + " " +
                                       direction_phrase(ahead, lateral)});
            } else if (cell.type == Cell::Type::Door) {
                entries.push_back({ahead + std::abs(lateral), wr * kView + wc,
                                   "a " + env::to_string(cell.door_color) + " door " +
                                       direction_phrase(ahead, lateral) + " (" +
                                       env::to_string(cell.door_state) + ")"});
            }
        }
    }
    if (wall_forward > 0) {
        entries.push_back({wall_forward, 0, "a wall " + direction_phrase(wall_forward, 0)});
    }
    if (wall_left > 0) {
        entries.push_back({wall_left, 1, "a wall " + direction_phrase(0, -wall_left)});
    }
    if (wall_right > 0) {
        entries.push_back({wall_right, 2, "a wall " + direction_phrase(0, wall_right)});
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.window_index != b.window_index) return a.window_index < b.window_index;
        return a.text < b.text;
    });

    if (entries.empty()) {
        out += "\nnothing visible";
    } else {
        for (const auto& e : entries) out += "\n- " + e.text;
    }
    return out;
}

}  // namespace staterep::encoders
