#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "staterep/eval/runner.hpp"

namespace staterep::cli {

// One structured configuration document declaring the experiment grid.
// Validation happens in full before any model call; every diagnostic names
// the offending key. Credentials never live in the file: the remote
// endpoint/key come from STATEREP_ENDPOINT / STATEREP_API_KEY.
struct ExperimentFile {
    std::string environment;
    int episodes = 0;  // 0 -> the environment's default rollout length
    std::uint64_t run_seed = 0;
    int parallelism = 1;
    std::string output_dir = "runs/out";
    gateway::ModelConfig model;
    std::vector<encoders::RepresentationSpec> representations;
};

ExperimentFile load_experiment_file(const std::filesystem::path& path);

struct RunOverrides {
    std::optional<std::string> mock_policy;  // switch to the scripted backend
    std::optional<int> episodes;
    std::optional<std::uint64_t> run_seed;
    std::optional<std::string> output_dir;
    std::optional<int> parallelism;
};

void apply_overrides(ExperimentFile& experiment, const RunOverrides& overrides);

// Full pre-run validation of every grid cell (environment x representation
// x model); throws Config with a key-named message.
void validate_experiment(const ExperimentFile& experiment);

}  // namespace staterep::cli
