#pragma once

#include <string>

#include "staterep/eval/record.hpp"

namespace staterep::eval {

struct ReplayResult {
    bool ok = true;
    int divergence_timestep = -1;  // first step whose reward/termination differs
    std::string message;
};

// Re-executes the record's action sequence against a freshly seeded
// environment and verifies that rewards, termination and score match
// exactly. Incident records verify their recorded prefix only.
ReplayResult replay_record(const EpisodeRecord& record);

}  // namespace staterep::eval
