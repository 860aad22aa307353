#include "staterep/memory/trajectory.hpp"

#include "staterep/core/error.hpp"
#include "staterep/core/strings.hpp"

namespace staterep::memory {

void TrajectoryMemory::append(TrajectoryRecord record) {
    const int expected = records_.empty() ? record.timestep : records_.back().timestep + 1;
    if (!records_.empty() && record.timestep != expected) {
        throw state_error("trajectory timesteps must increase without gaps: got " +
                          std::to_string(record.timestep) + ", expected " +
                          std::to_string(expected));
    }
    records_.push_back(std::move(record));
}

void TrajectoryMemory::apply_summary(const std::string& candidate) {
    auto tokens = whitespace_tokens(candidate);
    if (static_cast<int>(tokens.size()) > kTokenBudget) ++summary_violations_;
    if (static_cast<int>(tokens.size()) > kHardCap) {
        tokens.resize(kHardCap);
        rolling_summary_ = join(tokens, " ");
    } else {
        rolling_summary_ = trim(candidate);
    }
}

void TrajectoryMemory::set_summary_verbatim(std::string text) {
    rolling_summary_ = std::move(text);
}

namespace {

std::string render_steps(const TrajectoryMemory& memory, int window) {
    const auto& records = memory.records();
    const size_t count = records.size();
    const size_t first = count > static_cast<size_t>(window) ? count - static_cast<size_t>(window)
                                                             : 0;
    std::string out;
    for (size_t i = first; i < count; ++i) {
        const auto& rec = records[i];
        if (i > first) out += "\n";
        out += "Step " + std::to_string(rec.timestep) + ": You took action " + rec.action_label +
               ".";
        auto lines = split_lines(rec.observation_text);
        for (size_t l = 0; l < lines.size(); ++l) {
            if (lines[l].empty() && l + 1 == lines.size()) break;
            if (l == 0) {
                out += " " + lines[l];
            } else {
                out += "\n        " + lines[l];
            }
        }
    }
    return out;
}

}  // namespace

std::string format_long_form(const TrajectoryMemory& memory, int window) {
    if (window < 1) throw protocol_error("history window must be >= 1");
    if (memory.records().empty()) return "Past trajectory:\n(none)";
    return "Past trajectory:\n" + render_steps(memory, window);
}

std::string format_history_body(const TrajectoryMemory& memory, int window) {
    if (window < 1) throw protocol_error("history window must be >= 1");
    if (memory.records().empty()) return "(none)";
    return render_steps(memory, window);
}

namespace {

std::string disk_list_phrase(const std::vector<int>& peg) {
    if (peg.size() == 1) return "disk " + std::to_string(peg[0]);
    std::string out = "disks ";
    for (size_t i = 0; i < peg.size(); ++i) {
        if (i > 0) out += (i + 1 == peg.size()) ? (peg.size() == 2 ? " and " : ", and ") : ", ";
        out += std::to_string(peg[i]);
    }
    out += " from bottom to top";
    return out;
}

}  // namespace

std::string oracle_summary_hanoi(const env::HanoiState& state) {
    std::vector<std::string> occupied;
    std::vector<char> empty_pegs;
    for (int p = 0; p < 3; ++p) {
        const auto& peg = state.pegs[static_cast<size_t>(p)];
        const char label = env::kPegLabels[static_cast<size_t>(p)];
        if (peg.empty()) {
            empty_pegs.push_back(label);
        } else {
            occupied.push_back(std::string("peg ") + label + " has " + disk_list_phrase(peg));
        }
    }
    std::vector<std::string> clauses = occupied;
    if (empty_pegs.size() == 1) {
        clauses.push_back(std::string("peg ") + empty_pegs[0] + " is empty");
    } else if (empty_pegs.size() == 2) {
        clauses.push_back(std::string("pegs ") + empty_pegs[0] + " and " + empty_pegs[1] +
                          " are empty");
    }
    std::string body = join(clauses, "; ");
    body[0] = 'P';
    return body + ". Goal: move all disks to peg " +
           env::kPegLabels[static_cast<size_t>(state.goal_peg)] + ".";
}

}  // namespace staterep::memory
