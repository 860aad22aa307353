#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "staterep/eval/bootstrap.hpp"
#include "staterep/eval/record.hpp"

namespace staterep::eval {

struct ConditionStats {
    std::string name;
    int episodes = 0;   // scoreable (non-incident)
    int incidents = 0;
    int runs = 0;       // distinct run seeds in the group
    double mean_score = 0.0;
    double sd_episodes = 0.0;            // SD over episode scores
    std::optional<double> sd_runs;       // SD over per-run means when runs >= 2
    double mean_input_tokens = 0.0;
    std::optional<double> score_per_kilo_tokens;
    double fallback_rate = 0.0;
    std::optional<ComparisonResult> vs_baseline;  // absent for the baseline row
};

struct Report {
    std::string baseline;
    std::vector<ConditionStats> rows;  // baseline first, then insertion order
};

// Aggregates per-condition statistics and pairwise bootstrap comparisons
// against the named baseline condition. Values are order-independent in the
// episode records.
Report build_report(const std::map<std::string, std::vector<EpisodeRecord>>& groups,
                    const std::string& baseline, int resamples = 10000, double level = 0.95,
                    std::uint64_t seed = 0);

void write_report_csv(const Report& report, const std::filesystem::path& path);
void write_report_markdown(const Report& report, const std::filesystem::path& path);
std::string format_report_table(const Report& report);  // the markdown body

// Run manifest: every artifact file with its content hash, plus the
// configuration echo.
void write_manifest(const std::filesystem::path& out_dir, const nlohmann::json& config_echo,
                    const std::vector<std::filesystem::path>& files);

}  // namespace staterep::eval
