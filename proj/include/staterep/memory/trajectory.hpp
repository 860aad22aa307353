#pragma once

#include <string>
#include <vector>

#include "staterep/env/hanoi.hpp"

namespace staterep::memory {

struct TrajectoryRecord {
    int timestep = 0;
    std::string observation_text;  // encoded observation after the action
    std::string action_label;
    double reward = 0.0;
};

// Per-episode trajectory store plus the rolling summary text. The summary
// starts as "Start of game"; candidate updates are budget-checked (25
// whitespace tokens) and hard-capped at 60 tokens. Violations are counted
// rather than silently repaired.
class TrajectoryMemory {
public:
    static constexpr const char* kInitialSummary = "Start of game";
    static constexpr int kTokenBudget = 25;
    static constexpr int kHardCap = 60;

    void append(TrajectoryRecord record);  // timesteps must increase by exactly 1

    const std::vector<TrajectoryRecord>& records() const { return records_; }
    const std::string& rolling_summary() const { return rolling_summary_; }
    int summary_violations() const { return summary_violations_; }
    int summary_failures() const { return summary_failures_; }

    // Stores a summariser-produced candidate, counting budget violations and
    // truncating at the hard cap.
    void apply_summary(const std::string& candidate);
    // Stores a programmatic (oracle) summary verbatim; no budget accounting.
    void set_summary_verbatim(std::string text);
    // Both summariser attempts failed; the previous summary stays.
    void note_summary_failure() { ++summary_failures_; }

private:
    std::vector<TrajectoryRecord> records_;
    std::string rolling_summary_ = kInitialSummary;
    int summary_violations_ = 0;
    int summary_failures_ = 0;
};

// "Past trajectory:" block over the most recent `window` records, in the
// step-per-line layout with 8-space continuation indent. Empty memory
// renders "(none)".
std::string format_long_form(const TrajectoryMemory& memory, int window);

// The step lines alone (no header); the summariser's recent-history slot.
std::string format_history_body(const TrajectoryMemory& memory, int window);

// Deterministic ground-truth summary of the current Hanoi configuration and
// goal; the state is Markovian, so no history is included.
std::string oracle_summary_hanoi(const env::HanoiState& state);

}  // namespace staterep::memory
