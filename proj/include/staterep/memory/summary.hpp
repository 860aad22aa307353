#pragma once

#include <string>

#include "staterep/gateway/gateway.hpp"
#include "staterep/memory/trajectory.hpp"

namespace staterep::memory {

struct SummaryUpdate {
    std::string summary;      // rolling summary stored after the update
    bool failed = false;      // neither attempt produced a "Summary:" line
    long input_tokens = 0;    // summariser tokens across attempts
    long output_tokens = 0;
    int attempts = 0;         // zero when short-circuited on empty history
};

// One summariser turn: renders the summarization prompt over the recent
// window, extracts the "Summary:" line, and stores it in the memory. A reply
// without the line is retried once with the identical prompt; after a second
// miss the previous summary is kept and a failure is recorded. Empty history
// short-circuits to "Start of game" without a model call.
SummaryUpdate update_summary(TrajectoryMemory& memory, const std::string& manual,
                             gateway::Gateway& gateway, const gateway::ModelConfig& config,
                             int window);

}  // namespace staterep::memory
