#include <iostream>

#include "CLI11.hpp"
#include "staterep/cli/commands.hpp"
#include "staterep/core/error.hpp"
#include "staterep/eval/runner.hpp"

using namespace staterep;

int main(int argc, char** argv) {
    CLI::App app{"staterep: state-representation benchmark harness for LLM agents"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "execute an experiment grid from a config file");
    std::string config_path;
    cli::RunOverrides overrides;
    std::string mock_name, out_dir;
    int episodes = 0, parallelism = 0;
    std::uint64_t seed = 0;
    run->add_option("--config", config_path, "experiment config (JSON)")->required();
    auto* mock_opt = run->add_option("--mock", mock_name,
                                     "use the scripted mock backend with this policy "
                                     "(optimal, first-action, gibberish)");
    auto* episodes_opt = run->add_option("--episodes", episodes, "episodes per condition");
    auto* seed_opt = run->add_option("--seed", seed, "run seed");
    auto* out_opt = run->add_option("--out", out_dir, "output directory");
    auto* par_opt = run->add_option("--parallelism", parallelism, "concurrent episodes");

    // compare
    auto* compare = app.add_subcommand("compare", "bootstrap comparison of two episode logs");
    std::string dir_a, dir_b;
    compare->add_option("log_a", dir_a, "first log directory or .jsonl file")->required();
    compare->add_option("log_b", dir_b, "second log directory or .jsonl file")->required();

    // replay
    auto* replay = app.add_subcommand("replay", "verify a log by re-executing its actions");
    std::string log_path;
    replay->add_option("log", log_path, "episode log (.jsonl file or directory)")->required();

    CLI11_PARSE(app, argc, argv);

    auto policies = eval::register_builtin_mock_policies();
    try {
        if (run->parsed()) {
            if (*mock_opt) overrides.mock_policy = mock_name;
            if (*episodes_opt) overrides.episodes = episodes;
            if (*seed_opt) overrides.run_seed = seed;
            if (*out_opt) overrides.output_dir = out_dir;
            if (*par_opt) overrides.parallelism = parallelism;
            return cli::cmd_run(config_path, overrides, std::cout);
        }
        if (compare->parsed()) return cli::cmd_compare(dir_a, dir_b, std::cout);
        if (replay->parsed()) return cli::cmd_replay(log_path, std::cout);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Transport: return cli::kExitIncident;
            default: return cli::kExitValidation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitValidation;
    }
    return cli::kExitOk;
}
