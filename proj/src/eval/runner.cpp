#include "staterep/eval/runner.hpp"

#include <atomic>
#include <thread>

#include "staterep/core/error.hpp"
#include "staterep/core/sha256.hpp"
#include "staterep/encoders/encode.hpp"
#include "staterep/encoders/image.hpp"
#include "staterep/encoders/vot.hpp"
#include "staterep/env/environment.hpp"
#include "staterep/memory/summary.hpp"
#include "staterep/prompting/prompt.hpp"

namespace staterep::eval {

using encoders::Granularity;
using encoders::Grounding;

void RunConfig::validate() const {
    const env::EnvSpec& spec = env::spec_for(environment);  // throws for unknown names
    encoders::validate_representation(representation, env::family_of(environment));
    model.validate();
    if (episodes < 0) throw config_error("episodes must be >= 1");
    if (parallelism < 1) throw config_error("parallelism must be >= 1");
    (void)spec;
}

namespace {

std::string prompt_hash(const prompting::PromptBundle& bundle) {
    Sha256 h;
    h.update(bundle.user_text.data(), bundle.user_text.size());
    if (bundle.has_image()) {
        const unsigned char sep = 0;
        h.update(&sep, 1);
        h.update(bundle.image_png.data(), bundle.image_png.size());
    }
    return h.hex_digest();
}

std::string oracle_map_for(const env::Environment& environment, const env::Observation& obs) {
    if (std::holds_alternative<env::HanoiState>(obs)) {
        return encoders::oracle_vot_map(std::get<env::HanoiState>(obs));
    }
    if (std::holds_alternative<env::MessengerObs>(obs)) {
        return encoders::oracle_vot_map(std::get<env::MessengerObs>(obs));
    }
    // Grid oracle maps come from the ground-truth state, not the partial view.
    return encoders::oracle_vot_map(dynamic_cast<const env::GridEnv&>(environment).state());
}

}  // namespace

EpisodeRecord run_episode(const RunConfig& config, gateway::Gateway& gateway,
                          std::uint64_t episode_index) {
    config.validate();
    const auto& rep = config.representation;
    const env::Family family = env::family_of(config.environment);

    EpisodeRecord record;
    record.environment = config.environment;
    record.representation = rep;
    record.model_name = config.model.backend == gateway::Backend::Mock
                            ? "mock:" + config.model.mock_policy
                            : config.model.model_name;
    record.run_seed = config.run_seed;
    record.episode_index = episode_index;

    auto environment = env::make_environment(config.environment);
    env::Observation obs = environment->reset({config.run_seed, episode_index});
    const std::string manual = environment->manual();
    const env::EnvSpec& spec = environment->spec();

    memory::TrajectoryMemory mem;
    Rng fallback_rng =
        Rng::episode_stream(config.run_seed, episode_index, rng_stream::kFallback);

    const bool use_summary = rep.granularity == Granularity::Summary;
    const bool vot = rep.grounding == Grounding::TextPlusVoT;

    if (use_summary && rep.oracle_summary) {
        mem.set_summary_verbatim(memory::oracle_summary_hanoi(std::get<env::HanoiState>(obs)));
    }

    try {
        while (!environment->is_terminal()) {
            encoders::EncodedObservation encoded;
            encoded.text = encoders::encode_state_text(obs, rep.structure);
            encoded.format_label = rep.structure;
            if (rep.grounding == Grounding::TextPlusImage) {
                encoded.image_png = encoders::render_image(obs);
            }

            prompting::PromptBundle bundle =
                vot ? prompting::build_vot_prompt(
                          rep, spec, family, manual, encoded, mem,
                          rep.oracle_vot ? oracle_map_for(*environment, obs) : std::string())
                    : prompting::build_agent_prompt(rep, spec, family, manual, encoded, mem);

            StepEntry step;
            step.timestep = environment->timestep();
            step.prompt_hash = prompt_hash(bundle);
            step.encoded_obs = encoded.text;

            auto reply = gateway.chat(config.model, bundle);
            ++record.agent_calls;
            step.input_tokens = reply.input_tokens;
            step.output_tokens = reply.output_tokens;

            auto parsed = prompting::try_parse_action(reply.text, bundle.action_count);
            if (!parsed) {
                auto retry = gateway.chat(config.model, bundle);
                ++record.agent_calls;
                step.input_tokens += retry.input_tokens;
                step.output_tokens += retry.output_tokens;
                parsed = prompting::try_parse_action(retry.text, bundle.action_count);
                if (!parsed) {
                    parsed = prompting::resolve_fallback(fallback_rng, bundle.action_count,
                                                         retry.text);
                }
            }
            step.action_index = parsed->action_index;
            step.action_label = spec.action_labels[static_cast<size_t>(parsed->action_index - 1)];
            step.fallback_used = parsed->fallback_used;
            if (parsed->fallback_used) ++record.fallback_count;

            env::StepOutcome outcome = environment->step(parsed->action_index);
            step.reward = outcome.reward;
            mem.append({step.timestep,
                        encoders::encode_history_text(outcome.observation, rep.structure),
                        step.action_label, outcome.reward});

            if (use_summary) {
                if (rep.oracle_summary) {
                    mem.set_summary_verbatim(memory::oracle_summary_hanoi(
                        std::get<env::HanoiState>(outcome.observation)));
                } else if (vot) {
                    // The VoT reply's required Summary section keeps the
                    // rolling summary current; no separate summariser call.
                    if (auto line = prompting::extract_summary_line(parsed->raw_reply)) {
                        mem.apply_summary(*line);
                    } else {
                        mem.note_summary_failure();
                    }
                } else {
                    auto update = memory::update_summary(mem, manual, gateway, config.model,
                                                         spec.history_window);
                    record.summarizer_input_tokens += update.input_tokens;
                    record.summarizer_output_tokens += update.output_tokens;
                }
                step.summary_text = mem.rolling_summary();
            }

            record.steps.push_back(std::move(step));
            obs = std::move(outcome.observation);
        }
        record.normalized_score = environment->normalized_score();
        record.termination = environment->termination_cause();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Transport) throw;
        record.incident = true;
        record.incident_reason = e.what();
    }
    record.summary_violations = mem.summary_violations();
    record.summary_failures = mem.summary_failures();
    return record;
}

std::vector<EpisodeRecord> run_experiment(const RunConfig& config, gateway::Gateway& gateway) {
    config.validate();
    const int episodes =
        config.episodes > 0 ? config.episodes : env::spec_for(config.environment).default_episodes;

    std::vector<EpisodeRecord> records(static_cast<size_t>(episodes));
    if (config.parallelism <= 1) {
        for (int i = 0; i < episodes; ++i) {
            records[static_cast<size_t>(i)] =
                run_episode(config, gateway, static_cast<std::uint64_t>(i));
        }
        return records;
    }

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= episodes) return;
            try {
                records[static_cast<size_t>(i)] =
                    run_episode(config, gateway, static_cast<std::uint64_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int workers = std::min(config.parallelism, episodes);
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

namespace {

std::string extract_observation_block(const std::string& user_text) {
    const std::string marker = "Current observation: ";
    size_t start = user_text.find(marker);
    if (start == std::string::npos) return "";
    start += marker.size();
    size_t end = user_text.find("\n\n", start);
    return user_text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

std::string optimal_hanoi_reply(const prompting::PromptBundle& bundle) {
    if (bundle.template_id == prompting::TemplateId::Summarizer) {
        return "Summary: scripted summary of progress.";
    }
    const std::string obs = extract_observation_block(bundle.user_text);
    env::HanoiState state;
    bool decoded = false;
    for (auto structure : {encoders::Structure::TaggedList, encoders::Structure::DictList,
                           encoders::Structure::Matrix}) {
        try {
            state = encoders::decode_hanoi(obs, structure);
            decoded = true;
            break;
        } catch (const Error&) {
        }
    }
    int action = 1;
    if (decoded) {
        if (auto move = env::hanoi_optimal_move(state)) {
            static constexpr int kMoves[6][2] = {{0, 1}, {0, 2}, {1, 0},
                                                 {1, 2}, {2, 0}, {2, 1}};
            for (int i = 0; i < 6; ++i) {
                if (kMoves[i][0] == move->from && kMoves[i][1] == move->to) action = i + 1;
            }
        }
    }
    if (bundle.template_id == prompting::TemplateId::AgentVoT) {
        return "Map (Top-Down View):\nRod A: scripted\nMap Update Notes:\n- scripted\n"
               "Reasoning: scripted\nAction: [" +
               std::to_string(action) +
               "] (scripted). Reason: scripted.\nSummary: scripted map recap.";
    }
    return "Action: " + std::to_string(action) + ". Reason: scripted.";
}

}  // namespace

std::vector<gateway::MockRegistration> register_builtin_mock_policies() {
    std::vector<gateway::MockRegistration> handles;
    handles.push_back(gateway::register_mock_policy("optimal", optimal_hanoi_reply));
    handles.push_back(
        gateway::register_mock_policy("first-action", [](const prompting::PromptBundle& b) {
            return b.template_id == prompting::TemplateId::Summarizer
                       ? std::string("Summary: scripted summary of progress.")
                       : std::string("Action: 1. Reason: scripted.");
        }));
    handles.push_back(gateway::register_mock_policy("gibberish", [](const prompting::PromptBundle&) {
        return std::string("I think we should go east");
    }));
    return handles;
}

}  // namespace staterep::eval
