#include "staterep/cli/experiment.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "staterep/core/error.hpp"

namespace staterep::cli {

using nlohmann::json;

namespace {

[[noreturn]] void key_error(const std::string& key, const std::string& what) {
    throw config_error("config: " + key + ": " + what);
}

template <typename T>
T get_field(const json& j, const std::string& key, const T& fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        key_error(key, e.what());
    }
}

encoders::RepresentationSpec parse_representation(const json& j, const std::string& prefix) {
    if (!j.is_object()) key_error(prefix, "must be an object");
    encoders::RepresentationSpec rep;
    try {
        rep.granularity =
            encoders::granularity_from_string(get_field<std::string>(j, "granularity", "LongForm"));
    } catch (const Error& e) {
        key_error(prefix + ".granularity", e.what());
    }
    try {
        rep.structure = encoders::structure_from_string(
            get_field<std::string>(j, "structure", "NaturalLanguage"));
    } catch (const Error& e) {
        key_error(prefix + ".structure", e.what());
    }
    try {
        rep.grounding =
            encoders::grounding_from_string(get_field<std::string>(j, "grounding", "TextOnly"));
    } catch (const Error& e) {
        key_error(prefix + ".grounding", e.what());
    }
    rep.oracle_summary = get_field<bool>(j, "oracle_summary", false);
    rep.oracle_vot = get_field<bool>(j, "oracle_vot", false);
    for (const auto& [key, value] : j.items()) {
        if (key != "granularity" && key != "structure" && key != "grounding" &&
            key != "oracle_summary" && key != "oracle_vot") {
            key_error(prefix + "." + key, "unknown key");
        }
    }
    return rep;
}

gateway::ModelConfig parse_model(const json& j) {
    gateway::ModelConfig model;
    if (j.contains("api_key")) {
        key_error("model.api_key", "credentials are only accepted via STATEREP_API_KEY");
    }
    try {
        model.backend =
            gateway::backend_from_string(get_field<std::string>(j, "backend", "mock"));
    } catch (const Error& e) {
        key_error("model.backend", e.what());
    }
    model.endpoint_url = get_field<std::string>(j, "endpoint_url", "");
    model.model_name = get_field<std::string>(j, "model_name", "mock");
    model.temperature = get_field<double>(j, "temperature", 0.2);
    model.top_p = get_field<double>(j, "top_p", 0.95);
    model.max_output_tokens = get_field<int>(j, "max_output_tokens", 512);
    model.timeout_ms = get_field<int>(j, "timeout_ms", 30000);
    model.max_retries = get_field<int>(j, "max_retries", 3);
    model.retry_backoff_ms = get_field<int>(j, "retry_backoff_ms", 250);
    model.mock_policy = get_field<std::string>(j, "mock_policy", "");
    model.max_in_flight = get_field<int>(j, "max_in_flight", 8);

    if (model.backend == gateway::Backend::Remote) {
        if (const char* url = std::getenv("STATEREP_ENDPOINT"); url && *url) {
            model.endpoint_url = url;
        }
        if (const char* key = std::getenv("STATEREP_API_KEY"); key && *key) {
            model.api_key = key;
        }
        if (model.endpoint_url.empty()) {
            key_error("model.endpoint_url",
                      "remote backend needs endpoint_url (or STATEREP_ENDPOINT)");
        }
    }
    return model;
}

}  // namespace

ExperimentFile load_experiment_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config file: " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw config_error("config: not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw config_error("config: top level must be an object");

    ExperimentFile experiment;
    if (!j.contains("environment")) key_error("environment", "required");
    experiment.environment = get_field<std::string>(j, "environment", "");
    experiment.episodes = get_field<int>(j, "episodes", 0);
    experiment.run_seed = get_field<std::uint64_t>(j, "run_seed", 0);
    experiment.parallelism = get_field<int>(j, "parallelism", 1);
    experiment.output_dir = get_field<std::string>(j, "output_dir", "runs/out");
    experiment.model = parse_model(j.contains("model") ? j.at("model") : json::object());

    if (!j.contains("representations") || !j.at("representations").is_array() ||
        j.at("representations").empty()) {
        key_error("representations", "must be a non-empty array");
    }
    int index = 0;
    for (const auto& rep : j.at("representations")) {
        experiment.representations.push_back(
            parse_representation(rep, "representations[" + std::to_string(index) + "]"));
        ++index;
    }
    return experiment;
}

void apply_overrides(ExperimentFile& experiment, const RunOverrides& overrides) {
    if (overrides.mock_policy) {
        experiment.model.backend = gateway::Backend::Mock;
        experiment.model.mock_policy = *overrides.mock_policy;
    }
    if (overrides.episodes) experiment.episodes = *overrides.episodes;
    if (overrides.run_seed) experiment.run_seed = *overrides.run_seed;
    if (overrides.output_dir) experiment.output_dir = *overrides.output_dir;
    if (overrides.parallelism) experiment.parallelism = *overrides.parallelism;
}

void validate_experiment(const ExperimentFile& experiment) {
    const env::Family family = [&] {
        try {
            return env::family_of(experiment.environment);
        } catch (const Error& e) {
            throw config_error("config: environment: " + std::string(e.what()));
        }
    }();
    if (experiment.episodes < 0) throw config_error("config: episodes: must be >= 1");
    if (experiment.parallelism < 1) throw config_error("config: parallelism: must be >= 1");
    int index = 0;
    for (const auto& rep : experiment.representations) {
        try {
            encoders::validate_representation(rep, family);
        } catch (const Error& e) {
            throw config_error("config: representations[" + std::to_string(index) +
                               "]: " + e.what());
        }
        ++index;
    }
    try {
        experiment.model.validate();
    } catch (const Error& e) {
        throw config_error("config: model: " + std::string(e.what()));
    }
}

}  // namespace staterep::cli
