#include "staterep/cli/commands.hpp"

#include <map>
#include <ostream>

#include "staterep/core/error.hpp"
#include "staterep/eval/replay.hpp"
#include "staterep/eval/report.hpp"

namespace staterep::cli {

namespace fs = std::filesystem;

namespace {

nlohmann::json experiment_echo(const ExperimentFile& experiment) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& rep : experiment.representations) {
        reps.push_back(eval::representation_to_json(rep));
    }
    return nlohmann::json{{"environment", experiment.environment},
                          {"episodes", experiment.episodes},
                          {"run_seed", experiment.run_seed},
                          {"parallelism", experiment.parallelism},
                          {"output_dir", experiment.output_dir},
                          {"model",
                           {{"backend", gateway::to_string(experiment.model.backend)},
                            {"model_name", experiment.model.model_name},
                            {"mock_policy", experiment.model.mock_policy},
                            {"temperature", experiment.model.temperature},
                            {"top_p", experiment.model.top_p},
                            {"max_output_tokens", experiment.model.max_output_tokens}}},
                          {"representations", reps}};
}

fs::path resolve_log_file(const fs::path& arg) {
    if (fs::is_directory(arg)) {
        if (fs::exists(arg / "episodes.jsonl")) return arg / "episodes.jsonl";
        for (const auto& entry : fs::recursive_directory_iterator(arg)) {
            if (entry.path().extension() == ".jsonl") return entry.path();
        }
        throw config_error("no .jsonl log found under " + arg.string());
    }
    if (!fs::exists(arg)) throw config_error("no such log file: " + arg.string());
    return arg;
}

}  // namespace

int cmd_run(const fs::path& config_path, const RunOverrides& overrides, std::ostream& out) {
    ExperimentFile experiment = load_experiment_file(config_path);
    apply_overrides(experiment, overrides);
    validate_experiment(experiment);  // no model call happens before this passes

    gateway::Gateway gateway;
    const fs::path out_dir = experiment.output_dir;
    std::map<std::string, std::vector<eval::EpisodeRecord>> groups;
    std::vector<fs::path> artifacts;
    int incidents = 0;

    std::string baseline;
    for (const auto& rep : experiment.representations) {
        eval::RunConfig config;
        config.environment = experiment.environment;
        config.representation = rep;
        config.model = experiment.model;
        config.episodes = experiment.episodes;
        config.run_seed = experiment.run_seed;
        config.parallelism = experiment.parallelism;

        const std::string label = rep.label();
        if (baseline.empty()) baseline = label;
        out << "running " << experiment.environment << " / " << label << " ..." << std::endl;
        auto records = eval::run_experiment(config, gateway);
        for (const auto& record : records) incidents += record.incident ? 1 : 0;

        const fs::path log_path = out_dir / label / "episodes.jsonl";
        eval::write_episode_log(records, log_path);
        artifacts.push_back(log_path);
        groups.emplace(label, std::move(records));
    }

    auto report = eval::build_report(groups, baseline);
    eval::write_report_csv(report, out_dir / "report.csv");
    eval::write_report_markdown(report, out_dir / "report.md");
    artifacts.push_back(out_dir / "report.csv");
    artifacts.push_back(out_dir / "report.md");
    eval::write_manifest(out_dir, experiment_echo(experiment), artifacts);

    out << "\n" << eval::format_report_table(report);
    if (incidents > 0) {
        out << "\n" << incidents << " incident episode(s) excluded from statistics\n";
        return kExitIncident;
    }
    return kExitOk;
}

int cmd_compare(const fs::path& a, const fs::path& b, std::ostream& out) {
    auto records_a = eval::read_episode_log(resolve_log_file(a));
    auto records_b = eval::read_episode_log(resolve_log_file(b));
    if (records_a.empty() || records_b.empty()) {
        throw config_error("compare: both logs must contain episodes");
    }
    for (const auto& record : records_a) {
        if (record.environment != records_a.front().environment) {
            throw config_error("compare: mixed environments in " + a.string());
        }
    }
    for (const auto& record : records_b) {
        if (record.environment != records_a.front().environment) {
            throw config_error("compare: logs come from different environments (" +
                               records_a.front().environment + " vs " + record.environment + ")");
        }
    }

    std::vector<double> scores_a, scores_b;
    for (const auto& r : records_a) {
        if (!r.incident) scores_a.push_back(r.normalized_score);
    }
    for (const auto& r : records_b) {
        if (!r.incident) scores_b.push_back(r.normalized_score);
    }
    auto result = eval::bootstrap_mean_diff(scores_a, scores_b);

    out << "environment: " << records_a.front().environment << "\n";
    out << "A: " << a.string() << "  n=" << scores_a.size() << "  mean=" << result.mean_a
        << " sd=" << result.sd_a << "\n";
    out << "B: " << b.string() << "  n=" << scores_b.size() << "  mean=" << result.mean_b
        << " sd=" << result.sd_b << "\n";
    out << "mean diff (A-B): " << result.mean_diff << (result.significant ? "*" : "") << "  95% CI ["
        << result.ci_low << ", " << result.ci_high << "]  (" << result.resamples
        << " resamples)\n";
    out << (result.significant ? "significant at the 95% level\n"
                               : "not significant at the 95% level\n");
    return kExitOk;
}

int cmd_replay(const fs::path& log_path, std::ostream& out) {
    auto records = eval::read_episode_log(resolve_log_file(log_path));
    if (records.empty()) throw config_error("replay: log contains no episodes");
    int failures = 0;
    for (const auto& record : records) {
        auto result = eval::replay_record(record);
        if (!result.ok) {
            ++failures;
            out << "episode " << record.episode_index << ": DIVERGED";
            if (result.divergence_timestep >= 0) {
                out << " at step " << result.divergence_timestep;
            }
            out << " (" << result.message << ")\n";
        }
    }
    if (failures == 0) {
        out << "replay OK (" << records.size() << " episode(s))\n";
        return kExitOk;
    }
    out << failures << " of " << records.size() << " episode(s) diverged\n";
    return kExitReplayMismatch;
}

}  // namespace staterep::cli
