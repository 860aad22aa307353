#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "staterep/core/rng.hpp"
#include "staterep/encoders/representation.hpp"
#include "staterep/env/types.hpp"
#include "staterep/memory/trajectory.hpp"

namespace staterep::prompting {

enum class TemplateId { Agent, AgentVoT, Summarizer };

// Fully assembled model input. The whole template ships as a single user
// message (no system message), matching the reference prompt boxes.
struct PromptBundle {
    std::string system_text;
    std::string user_text;
    std::vector<unsigned char> image_png;
    int action_count = 0;
    TemplateId template_id = TemplateId::Agent;

    bool has_image() const { return !image_png.empty(); }
};

const std::string& template_text(TemplateId id);

// Strict rendering: every placeholder in the template must be supplied
// exactly once, and every supplied slot must exist in the template.
std::string render_template(TemplateId id, const std::map<std::string, std::string>& slots);

std::string numbered_action_question(const std::vector<std::string>& action_labels);

PromptBundle build_agent_prompt(const encoders::RepresentationSpec& rep,
                                const env::EnvSpec& env_spec, env::Family family,
                                const std::string& manual,
                                const encoders::EncodedObservation& encoded_obs,
                                const memory::TrajectoryMemory& memory);

// VoT variant; `oracle_map` (when non-empty) is injected after the current
// observation with an instruction to use it instead of drawing.
PromptBundle build_vot_prompt(const encoders::RepresentationSpec& rep,
                              const env::EnvSpec& env_spec, env::Family family,
                              const std::string& manual,
                              const encoders::EncodedObservation& encoded_obs,
                              const memory::TrajectoryMemory& memory,
                              const std::string& oracle_map);

PromptBundle build_summarizer_prompt(const std::string& manual,
                                     const std::string& recent_history,
                                     const std::string& previous_summary);

struct ParsedAction {
    int action_index = 0;  // 1-based, within range after fallback resolution
    std::string reason;
    std::string raw_reply;
    bool fallback_used = false;
};

// Extracts the first "Action:" occurrence followed by an integer, tolerating
// brackets, punctuation and a parenthesised action name. Out-of-range or
// absent integers yield nullopt (never clamped).
std::optional<ParsedAction> try_parse_action(const std::string& raw_reply, int action_count);

// Uniform random legal action from the episode's fallback stream after the
// single re-query also failed to parse.
ParsedAction resolve_fallback(Rng& rng, int action_count, std::string raw_reply);

// Text after "Summary:" on the first line that carries any; used by the
// summariser reply parser and the VoT rolling-summary extraction.
std::optional<std::string> extract_summary_line(const std::string& reply);

}  // namespace staterep::prompting
