#pragma once

#include <cstdint>

#include "staterep/eval/record.hpp"
#include "staterep/gateway/gateway.hpp"

namespace staterep::eval {

struct RunConfig {
    std::string environment;
    encoders::RepresentationSpec representation;
    gateway::ModelConfig model;
    int episodes = 0;  // 0 -> the environment's default rollout length
    std::uint64_t run_seed = 0;
    int parallelism = 1;

    void validate() const;  // Config error before any model call
};

// One full episode: reset with (run_seed, episode_index), then per step
// encode -> (summary upkeep) -> build prompt -> chat -> parse (retry once,
// then random fallback) -> step, until terminal. Transport failures mark the
// record as an incident instead of scoring it.
EpisodeRecord run_episode(const RunConfig& config, gateway::Gateway& gateway,
                          std::uint64_t episode_index);

// Runs `episodes` seeded episodes, up to `parallelism` at a time. Records
// come back ordered by episode index, so parallel and serial execution
// produce the same list.
std::vector<EpisodeRecord> run_experiment(const RunConfig& config, gateway::Gateway& gateway);

// Registers the scripted policies the CLI exposes via --mock:
//   optimal      solves Hanoi by decoding the structured observation
//   first-action always answers action 1
//   gibberish    never parses, exercising the fallback path
std::vector<gateway::MockRegistration> register_builtin_mock_policies();

}  // namespace staterep::eval
