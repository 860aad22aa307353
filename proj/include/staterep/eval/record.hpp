#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "staterep/encoders/representation.hpp"
#include "staterep/env/types.hpp"

namespace staterep::eval {

struct StepEntry {
    int timestep = 0;
    std::string prompt_hash;   // sha256 of user_text (and image bytes when attached)
    std::string encoded_obs;   // observation text shown to the agent
    int action_index = 0;
    std::string action_label;
    double reward = 0.0;
    long input_tokens = 0;     // agent-call tokens for this step (all attempts)
    long output_tokens = 0;
    std::string summary_text;  // rolling summary after this step; "" under LongForm
    bool fallback_used = false;
};

// Replayable per-episode log. Replaying the recorded actions through a fresh
// environment with the same seed must reproduce rewards and termination.
struct EpisodeRecord {
    std::string environment;
    encoders::RepresentationSpec representation;
    std::string model_name;
    std::uint64_t run_seed = 0;
    std::uint64_t episode_index = 0;
    std::vector<StepEntry> steps;
    double normalized_score = 0.0;
    env::TerminationCause termination = env::TerminationCause::None;
    bool incident = false;  // transport abort; excluded from statistics
    std::string incident_reason;
    int agent_calls = 0;  // chat calls for action selection (includes retries)
    long summarizer_input_tokens = 0;
    long summarizer_output_tokens = 0;
    int summary_violations = 0;
    int summary_failures = 0;
    int fallback_count = 0;

    double mean_agent_input_tokens() const;
    double fallback_rate() const;  // fallback steps / total steps
};

nlohmann::json representation_to_json(const encoders::RepresentationSpec& rep);
encoders::RepresentationSpec representation_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const EpisodeRecord& record);
EpisodeRecord record_from_json(const nlohmann::json& j);

// JSONL: one record per line, keys in sorted order (deterministic bytes).
void write_episode_log(const std::vector<EpisodeRecord>& records,
                       const std::filesystem::path& path);
std::vector<EpisodeRecord> read_episode_log(const std::filesystem::path& path);

}  // namespace staterep::eval
