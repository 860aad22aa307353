#include "staterep/eval/record.hpp"

#include <fstream>

#include "staterep/core/error.hpp"
#include "staterep/env/environment.hpp"

namespace staterep::eval {

using nlohmann::json;

double EpisodeRecord::mean_agent_input_tokens() const {
    if (agent_calls == 0) return 0.0;
    long total = 0;
    for (const auto& step : steps) total += step.input_tokens;
    return static_cast<double>(total) / static_cast<double>(agent_calls);
}

double EpisodeRecord::fallback_rate() const {
    if (steps.empty()) return 0.0;
    return static_cast<double>(fallback_count) / static_cast<double>(steps.size());
}

json representation_to_json(const encoders::RepresentationSpec& rep) {
    return json{{"granularity", encoders::to_string(rep.granularity)},
                {"structure", encoders::to_string(rep.structure)},
                {"grounding", encoders::to_string(rep.grounding)},
                {"oracle_summary", rep.oracle_summary},
                {"oracle_vot", rep.oracle_vot}};
}

encoders::RepresentationSpec representation_from_json(const json& j) {
    encoders::RepresentationSpec rep;
    rep.granularity = encoders::granularity_from_string(j.at("granularity").get<std::string>());
    rep.structure = encoders::structure_from_string(j.at("structure").get<std::string>());
    rep.grounding = encoders::grounding_from_string(j.at("grounding").get<std::string>());
    rep.oracle_summary = j.value("oracle_summary", false);
    rep.oracle_vot = j.value("oracle_vot", false);
    return rep;
}

json record_to_json(const EpisodeRecord& record) {
    json steps = json::array();
    for (const auto& s : record.steps) {
        steps.push_back(json{{"timestep", s.timestep},
                             {"prompt_hash", s.prompt_hash},
                             {"encoded_obs", s.encoded_obs},
                             {"action_index", s.action_index},
                             {"action_label", s.action_label},
                             {"reward", s.reward},
                             {"input_tokens", s.input_tokens},
                             {"output_tokens", s.output_tokens},
                             {"summary_text", s.summary_text},
                             {"fallback_used", s.fallback_used}});
    }
    return json{{"environment", record.environment},
                {"representation", representation_to_json(record.representation)},
                {"model_name", record.model_name},
                {"run_seed", record.run_seed},
                {"episode_index", record.episode_index},
                {"steps", steps},
                {"normalized_score", record.normalized_score},
                {"termination", env::to_string(record.termination)},
                {"incident", record.incident},
                {"incident_reason", record.incident_reason},
                {"agent_calls", record.agent_calls},
                {"summarizer_input_tokens", record.summarizer_input_tokens},
                {"summarizer_output_tokens", record.summarizer_output_tokens},
                {"summary_violations", record.summary_violations},
                {"summary_failures", record.summary_failures},
                {"fallback_count", record.fallback_count}};
}

EpisodeRecord record_from_json(const json& j) {
    EpisodeRecord record;
    try {
        record.environment = j.at("environment").get<std::string>();
        record.representation = representation_from_json(j.at("representation"));
        record.model_name = j.value("model_name", "");
        record.run_seed = j.at("run_seed").get<std::uint64_t>();
        record.episode_index = j.at("episode_index").get<std::uint64_t>();
        for (const auto& s : j.at("steps")) {
            StepEntry step;
            step.timestep = s.at("timestep").get<int>();
            step.prompt_hash = s.value("prompt_hash", "");
            step.encoded_obs = s.value("encoded_obs", "");
            step.action_index = s.at("action_index").get<int>();
            step.action_label = s.value("action_label", "");
            step.reward = s.at("reward").get<double>();
            step.input_tokens = s.value("input_tokens", 0L);
            step.output_tokens = s.value("output_tokens", 0L);
            step.summary_text = s.value("summary_text", "");
            step.fallback_used = s.value("fallback_used", false);
            record.steps.push_back(std::move(step));
        }
        record.normalized_score = j.at("normalized_score").get<double>();
        record.termination =
            env::termination_cause_from_string(j.at("termination").get<std::string>());
        record.incident = j.value("incident", false);
        record.incident_reason = j.value("incident_reason", "");
        record.agent_calls = j.value("agent_calls", 0);
        record.summarizer_input_tokens = j.value("summarizer_input_tokens", 0L);
        record.summarizer_output_tokens = j.value("summarizer_output_tokens", 0L);
        record.summary_violations = j.value("summary_violations", 0);
        record.summary_failures = j.value("summary_failures", 0);
        record.fallback_count = j.value("fallback_count", 0);
    } catch (const json::exception& e) {
        throw parse_error(std::string("episode record: ") + e.what());
    }
    return record;
}

void write_episode_log(const std::vector<EpisodeRecord>& records,
                       const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw state_error("cannot open log file for writing: " + path.string());
    for (const auto& record : records) out << record_to_json(record).dump() << "\n";
}

std::vector<EpisodeRecord> read_episode_log(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open log file: " + path.string());
    std::vector<EpisodeRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw parse_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace staterep::eval
