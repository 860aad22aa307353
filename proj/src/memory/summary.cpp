#include "staterep/memory/summary.hpp"

#include "staterep/prompting/prompt.hpp"

namespace staterep::memory {

SummaryUpdate update_summary(TrajectoryMemory& memory, const std::string& manual,
                             gateway::Gateway& gateway, const gateway::ModelConfig& config,
                             int window) {
    SummaryUpdate result;
    if (memory.records().empty()) {
        memory.set_summary_verbatim(TrajectoryMemory::kInitialSummary);
        result.summary = memory.rolling_summary();
        return result;
    }

    const auto bundle = prompting::build_summarizer_prompt(
        manual, format_history_body(memory, window), memory.rolling_summary());

    for (int attempt = 0; attempt < 2; ++attempt) {
        auto reply = gateway.chat(config, bundle);
        ++result.attempts;
        result.input_tokens += reply.input_tokens;
        result.output_tokens += reply.output_tokens;
        if (auto line = prompting::extract_summary_line(reply.text)) {
            memory.apply_summary(*line);
            result.summary = memory.rolling_summary();
            return result;
        }
    }
    memory.note_summary_failure();
    result.failed = true;
    result.summary = memory.rolling_summary();
    return result;
}

}  // namespace staterep::memory
