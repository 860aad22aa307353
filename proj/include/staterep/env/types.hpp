#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace staterep::env {

enum class Difficulty { Easy, Medium, Hard };

enum class TerminationCause { None, GoalReached, Failure, Timeout };

std::string to_string(TerminationCause cause);
TerminationCause termination_cause_from_string(std::string_view s);

// Static per-environment configuration. The seven shipped specs mirror the
// benchmark table (history window, action count, step limit, episodes per
// run) and are validated by a conformance test.
struct EnvSpec {
    std::string name;
    std::vector<std::string> action_labels;
    int max_timesteps = 1;
    int history_window = 1;
    Difficulty difficulty = Difficulty::Easy;
    int default_episodes = 1;  // episodes per run

    int action_count() const { return static_cast<int>(action_labels.size()); }
};

struct EpisodeSeed {
    std::uint64_t run_seed = 0;
    std::uint64_t episode_index = 0;
};

enum class Family { Hanoi, Messenger, Grid };

const std::vector<EnvSpec>& builtin_specs();
const EnvSpec& spec_for(std::string_view name);  // throws Config for unknown names
Family family_of(std::string_view env_name);

struct GridPos {
    int row = 0;
    int col = 0;
    friend bool operator==(const GridPos&, const GridPos&) = default;
};

inline int manhattan(const GridPos& a, const GridPos& b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

}  // namespace staterep::env
