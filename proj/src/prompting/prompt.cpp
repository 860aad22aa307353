#include "staterep/prompting/prompt.hpp"

#include <cctype>
#include <set>

#include "staterep/core/assets.hpp"
#include "staterep/core/error.hpp"
#include "staterep/core/strings.hpp"

namespace staterep::prompting {

using encoders::Granularity;
using encoders::Grounding;

const std::string& template_text(TemplateId id) {
    switch (id) {
        case TemplateId::Agent: return load_asset("prompts/agent.txt");
        case TemplateId::AgentVoT: return load_asset("prompts/vot.txt");
        case TemplateId::Summarizer: return load_asset("prompts/summarizer.txt");
    }
    return load_asset("prompts/agent.txt");
}

namespace {

std::vector<std::string> placeholders_in(const std::string& text) {
    std::vector<std::string> names;
    size_t pos = 0;
    while ((pos = text.find('{', pos)) != std::string::npos) {
        size_t end = text.find('}', pos);
        if (end == std::string::npos) break;
        std::string name = text.substr(pos + 1, end - pos - 1);
        bool word = !name.empty();
        for (char c : name) {
            if (!(std::islower(static_cast<unsigned char>(c)) || c == '_')) word = false;
        }
        if (word) names.push_back(name);
        pos = end + 1;
    }
    return names;
}

}  // namespace

std::string render_template(TemplateId id, const std::map<std::string, std::string>& slots) {
    std::string text = template_text(id);
    while (!text.empty() && text.back() == '\n') text.pop_back();

    auto names = placeholders_in(text);
    std::set<std::string> expected(names.begin(), names.end());
    if (names.size() != expected.size()) {
        throw config_error("template has a repeated placeholder");
    }
    for (const auto& [key, value] : slots) {
        if (!expected.count(key)) throw config_error("template has no slot named " + key);
    }
    for (const auto& name : expected) {
        if (!slots.count(name)) throw config_error("missing value for template slot " + name);
    }
    for (const auto& [key, value] : slots) text = replace_placeholder(text, key, value);
    return text;
}

std::string numbered_action_question(const std::vector<std::string>& action_labels) {
    std::string out = "What action do you take next? Available actions:";
    for (size_t i = 0; i < action_labels.size(); ++i) {
        out += "\n" + std::to_string(i + 1) + ". " + action_labels[i];
    }
    return out;
}

namespace {

std::string trajectory_slot(const encoders::RepresentationSpec& rep,
                            const env::EnvSpec& env_spec,
                            const memory::TrajectoryMemory& memory) {
    if (rep.granularity == Granularity::LongForm) {
        return memory::format_long_form(memory, env_spec.history_window);
    }
    return "Summary of past actions:\n" + memory.rolling_summary();
}

PromptBundle assemble(TemplateId id, const encoders::RepresentationSpec& rep,
                      const env::EnvSpec& env_spec, env::Family family,
                      const std::string& manual,
                      const encoders::EncodedObservation& encoded_obs,
                      const memory::TrajectoryMemory& memory, const std::string& obs_slot) {
    encoders::validate_representation(rep, family);
    if (encoded_obs.format_label != rep.structure) {
        throw config_error("encoded observation format " + to_string(encoded_obs.format_label) +
                           " does not match the representation structure " +
                           to_string(rep.structure));
    }

    PromptBundle bundle;
    bundle.template_id = id;
    bundle.action_count = env_spec.action_count();
    bundle.user_text = render_template(
        id, {{"manual", manual},
             {"obs", obs_slot},
             {"trajectory", trajectory_slot(rep, env_spec, memory)},
             {"question", numbered_action_question(env_spec.action_labels)}});
    if (rep.grounding == Grounding::TextPlusImage) {
        if (encoded_obs.image_png.empty()) {
            throw config_error("TextPlusImage grounding requires a rendered image");
        }
        bundle.image_png = encoded_obs.image_png;
    }
    return bundle;
}

}  // namespace

PromptBundle build_agent_prompt(const encoders::RepresentationSpec& rep,
                                const env::EnvSpec& env_spec, env::Family family,
                                const std::string& manual,
                                const encoders::EncodedObservation& encoded_obs,
                                const memory::TrajectoryMemory& memory) {
    if (rep.grounding == Grounding::TextPlusVoT) {
        throw config_error("use build_vot_prompt for TextPlusVoT grounding");
    }
    return assemble(TemplateId::Agent, rep, env_spec, family, manual, encoded_obs, memory,
                    encoded_obs.text);
}

PromptBundle build_vot_prompt(const encoders::RepresentationSpec& rep,
                              const env::EnvSpec& env_spec, env::Family family,
                              const std::string& manual,
                              const encoders::EncodedObservation& encoded_obs,
                              const memory::TrajectoryMemory& memory,
                              const std::string& oracle_map) {
    if (rep.grounding != Grounding::TextPlusVoT) {
        throw config_error("build_vot_prompt requires TextPlusVoT grounding");
    }
    if (rep.oracle_vot == oracle_map.empty()) {
        throw config_error(rep.oracle_vot ? "oracle_vot is set but no oracle map was supplied"
                                          : "an oracle map was supplied without oracle_vot");
    }
    std::string obs_slot = encoded_obs.text;
    if (!oracle_map.empty()) {
        obs_slot += "\n\nA ground-truth map of the current state is provided below. "
                    "Use this map instead of drawing your own: copy it into your map section "
                    "and still produce all remaining output sections.\n" +
                    oracle_map;
    }
    return assemble(TemplateId::AgentVoT, rep, env_spec, family, manual, encoded_obs, memory,
                    obs_slot);
}

PromptBundle build_summarizer_prompt(const std::string& manual,
                                     const std::string& recent_history,
                                     const std::string& previous_summary) {
    PromptBundle bundle;
    bundle.template_id = TemplateId::Summarizer;
    bundle.user_text = render_template(TemplateId::Summarizer,
                                       {{"manual", manual},
                                        {"recent_history", recent_history},
                                        {"previous_summary", previous_summary}});
    return bundle;
}

std::optional<ParsedAction> try_parse_action(const std::string& raw_reply, int action_count) {
    size_t search = 0;
    while ((search = raw_reply.find("Action:", search)) != std::string::npos) {
        size_t i = search + 7;
        while (i < raw_reply.size() &&
               (raw_reply[i] == ' ' || raw_reply[i] == '\t' || raw_reply[i] == '[' ||
                raw_reply[i] == '(' || raw_reply[i] == '*' || raw_reply[i] == '#')) {
            ++i;
        }
        size_t digits_start = i;
        while (i < raw_reply.size() && std::isdigit(static_cast<unsigned char>(raw_reply[i]))) {
            ++i;
        }
        if (i == digits_start) {
            search += 7;
            continue;  // "Action:" without an integer; keep scanning
        }
        int value = std::stoi(raw_reply.substr(digits_start, i - digits_start));
        if (value < 1 || value > action_count) return std::nullopt;

        ParsedAction parsed;
        parsed.action_index = value;
        parsed.raw_reply = raw_reply;
        size_t reason_pos = raw_reply.find("Reason:", i);
        if (reason_pos != std::string::npos) {
            size_t line_end = raw_reply.find('\n', reason_pos);
            std::string reason = raw_reply.substr(
                reason_pos + 7,
                line_end == std::string::npos ? std::string::npos : line_end - reason_pos - 7);
            parsed.reason = trim(reason);
        }
        return parsed;
    }
    return std::nullopt;
}

ParsedAction resolve_fallback(Rng& rng, int action_count, std::string raw_reply) {
    ParsedAction parsed;
    parsed.action_index = rng.range(1, action_count);
    parsed.raw_reply = std::move(raw_reply);
    parsed.fallback_used = true;
    return parsed;
}

std::optional<std::string> extract_summary_line(const std::string& reply) {
    for (const auto& line : split_lines(reply)) {
        size_t pos = line.find("Summary:");
        if (pos == std::string::npos) continue;
        std::string content = trim(line.substr(pos + 8));
        if (!content.empty()) return content;
    }
    return std::nullopt;
}

}  // namespace staterep::prompting
