#include "staterep/eval/report.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "staterep/core/error.hpp"
#include "staterep/core/sha256.hpp"
#include "staterep/eval/metrics.hpp"

namespace staterep::eval {

namespace {

std::vector<double> scores_of(const std::vector<EpisodeRecord>& records) {
    std::vector<double> scores;
    for (const auto& r : records) {
        if (!r.incident) scores.push_back(r.normalized_score);
    }
    return scores;
}

ConditionStats stats_for(const std::string& name, const std::vector<EpisodeRecord>& records) {
    ConditionStats stats;
    stats.name = name;
    auto scores = scores_of(records);
    stats.episodes = static_cast<int>(scores.size());
    stats.incidents = static_cast<int>(records.size() - scores.size());
    if (!scores.empty()) {
        stats.mean_score = mean_of(scores);
        stats.sd_episodes = sample_sd(scores);
    }

    // Per-run grain: a run is one run_seed's worth of episodes.
    std::map<std::uint64_t, std::vector<double>> by_run;
    double token_sum = 0.0;
    double fallback_sum = 0.0;
    for (const auto& r : records) {
        if (r.incident) continue;
        by_run[r.run_seed].push_back(r.normalized_score);
        token_sum += r.mean_agent_input_tokens();
        fallback_sum += r.fallback_rate();
    }
    stats.runs = static_cast<int>(by_run.size());
    if (stats.runs >= 2) {
        std::vector<double> run_means;
        for (const auto& [seed, run_scores] : by_run) run_means.push_back(mean_of(run_scores));
        stats.sd_runs = sample_sd(run_means);
    }
    if (stats.episodes > 0) {
        stats.mean_input_tokens = token_sum / stats.episodes;
        stats.fallback_rate = fallback_sum / stats.episodes;
        try {
            stats.score_per_kilo_tokens = score_per_kilo_token(records);
        } catch (const Error&) {
            stats.score_per_kilo_tokens.reset();
        }
    }
    return stats;
}

std::string num(double v, int precision = 4) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(precision);
    ss << v;
    return ss.str();
}

}  // namespace

Report build_report(const std::map<std::string, std::vector<EpisodeRecord>>& groups,
                    const std::string& baseline, int resamples, double level,
                    std::uint64_t seed) {
    if (groups.empty()) throw config_error("report needs at least one condition group");
    if (!groups.count(baseline)) {
        throw config_error("baseline condition not present: " + baseline);
    }

    Report report;
    report.baseline = baseline;
    const auto baseline_scores = scores_of(groups.at(baseline));

    report.rows.push_back(stats_for(baseline, groups.at(baseline)));
    for (const auto& [name, records] : groups) {
        if (name == baseline) continue;
        ConditionStats stats = stats_for(name, records);
        auto scores = scores_of(records);
        if (!scores.empty() && !baseline_scores.empty()) {
            stats.vs_baseline =
                bootstrap_mean_diff(scores, baseline_scores, resamples, level, seed);
        }
        report.rows.push_back(std::move(stats));
    }
    return report;
}

std::string format_report_table(const Report& report) {
    std::ostringstream out;
    out << "| condition | episodes | mean ± SD | SD (runs) | mean tokens | score/1k tok "
           "| fallback | incidents | Δ vs baseline | 95% CI |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : report.rows) {
        out << "| " << row.name << (row.name == report.baseline ? " (baseline)" : "") << " | "
            << row.episodes << " | ";
        out << num(row.mean_score, 3) << " ± " << num(row.sd_episodes, 3);
        if (row.vs_baseline && row.vs_baseline->significant) out << "*";
        out << " | " << (row.sd_runs ? num(*row.sd_runs, 3) : std::string("-"));
        out << " | " << num(row.mean_input_tokens, 1);
        out << " | "
            << (row.score_per_kilo_tokens ? num(*row.score_per_kilo_tokens, 4)
                                          : std::string("-"));
        out << " | " << num(row.fallback_rate, 3) << " | " << row.incidents << " | ";
        if (row.vs_baseline) {
            out << num(row.vs_baseline->mean_diff, 4) << " | [" << num(row.vs_baseline->ci_low, 4)
                << ", " << num(row.vs_baseline->ci_high, 4) << "] |";
        } else {
            out << "- | - |";
        }
        out << "\n";
    }
    out << "\n`*` marks a significant difference from the baseline "
           "(bootstrap mean difference, 95% CI excluding 0).\n";
    return out.str();
}

void write_report_markdown(const Report& report, const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << "# Results\n\nBaseline condition: `" << report.baseline << "`\n\n"
        << format_report_table(report);
}

void write_report_csv(const Report& report, const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << "condition,episodes,incidents,runs,mean_score,sd_episodes,sd_runs,mean_input_tokens,"
           "score_per_kilo_tokens,fallback_rate,mean_diff_vs_baseline,ci_low,ci_high,"
           "significant\n";
    for (const auto& row : report.rows) {
        out << row.name << "," << row.episodes << "," << row.incidents << "," << row.runs << ","
            << num(row.mean_score, 6) << "," << num(row.sd_episodes, 6) << ",";
        if (row.sd_runs) out << num(*row.sd_runs, 6);
        out << "," << num(row.mean_input_tokens, 3) << ",";
        if (row.score_per_kilo_tokens) out << num(*row.score_per_kilo_tokens, 6);
        out << "," << num(row.fallback_rate, 6) << ",";
        if (row.vs_baseline) {
            out << num(row.vs_baseline->mean_diff, 6) << "," << num(row.vs_baseline->ci_low, 6)
                << "," << num(row.vs_baseline->ci_high, 6) << ","
                << (row.vs_baseline->significant ? "true" : "false");
        } else {
            out << ",,,";
        }
        out << "\n";
    }
}

void write_manifest(const std::filesystem::path& out_dir, const nlohmann::json& config_echo,
                    const std::vector<std::filesystem::path>& files) {
    nlohmann::json manifest;
    manifest["config"] = config_echo;
    auto entries = nlohmann::json::array();
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw state_error("manifest: cannot read " + file.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        entries.push_back({{"path", std::filesystem::relative(file, out_dir).string()},
                           {"sha256", sha256_hex(ss.str())}});
    }
    manifest["files"] = entries;
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << "\n";
}

}  // namespace staterep::eval
