// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each, nonzero exit when anything fails. Run via `ctest -R acceptance` or
// directly: build/tests/staterep_acceptance.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>
#include <vector>

#include "staterep/cli/commands.hpp"
#include "staterep/core/rng.hpp"
#include "staterep/core/strings.hpp"
#include "staterep/encoders/encode.hpp"
#include "staterep/encoders/vot.hpp"
#include "staterep/env/environment.hpp"
#include "staterep/eval/bootstrap.hpp"
#include "staterep/eval/metrics.hpp"
#include "staterep/eval/replay.hpp"
#include "staterep/eval/runner.hpp"
#include "staterep/prompting/prompt.hpp"
#include "test_util.hpp"

using namespace staterep;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::string name;
    double budget_seconds;
    std::function<void()> body;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error(what);
}

// --- criterion 1: encoding fidelity -----------------------------------------

void encoding_fidelity() {
    const env::HanoiState reset = env::HanoiState::initial(3);
    require(encoders::encode_hanoi(reset, encoders::Structure::NaturalLanguage) ==
                "Peg A has disk 2 at the bottom, disk 1 in the middle, and disk 0 on top. "
                "Peg B is empty. Peg C is empty.",
            "Hanoi NaturalLanguage mismatch");
    require(encoders::encode_hanoi(reset, encoders::Structure::DictList) ==
                "{'A': [2, 1, 0], 'B': [], 'C': []}",
            "Hanoi DictList mismatch");
    require(encoders::encode_hanoi(reset, encoders::Structure::Matrix) ==
                "[[2, 1, 0], [-1, -1, -1], [-1, -1, -1]]",
            "Hanoi Matrix mismatch");
    require(encoders::encode_hanoi(reset, encoders::Structure::TaggedList) ==
                "- A: |bottom, [2, 1, 0], top|\n- B: |bottom, [], top|\n- C: |bottom, [], top|",
            "Hanoi TaggedList mismatch");

    env::MessengerState scenario;
    scenario.agent = {5, 5};
    scenario.entities = {
        env::MessengerEntity{"airplane", "jet", env::Role::Message, {5, 3}},
        env::MessengerEntity{"ball", "orb", env::Role::Goal, {7, 5}},
        env::MessengerEntity{"queen", "monarch", env::Role::Enemy, {3, 5}},
    };
    require(encoders::encode_messenger(env::messenger_observe(scenario),
                                       encoders::Structure::Coordinates) ==
                testutil::load_golden("messenger_coordinates.txt"),
            "Coordinates block mismatch");
}

// --- criterion 2: environment correctness ------------------------------------

std::string hanoi_key(const env::HanoiState& s) {
    std::string k;
    for (const auto& peg : s.pegs) {
        for (int d : peg) k += static_cast<char>('0' + d);
        k += '|';
    }
    return k;
}

void environment_correctness() {
    // 10,000 random-walk steps with invariants checked at every step.
    Rng rng(2025);
    env::HanoiState state = env::HanoiState::initial(3);
    for (int i = 0; i < 10000; ++i) {
        int from = rng.range(0, 2), to = rng.range(0, 2);
        if (from == to) continue;
        auto result = env::hanoi_apply(state, from, to);
        if (std::holds_alternative<env::HanoiState>(result)) {
            state = std::get<env::HanoiState>(result);
        }
        require(state.valid(), "Hanoi invariant violated during random walk");
        require(state.pegs[0].size() + state.pegs[1].size() + state.pegs[2].size() == 3,
                "disk count not conserved");
    }

    // The scripted optimal policy solves the 3-disk game in exactly 7 moves.
    env::HanoiEnv environment;
    environment.reset({1, 0});
    int moves = 0;
    while (!environment.is_terminal()) {
        auto move = env::hanoi_optimal_move(environment.state());
        require(move.has_value(), "optimal policy returned no move before the goal");
        static constexpr int kMoves[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
        int action = 0;
        for (int i = 0; i < 6; ++i) {
            if (kMoves[i][0] == move->from && kMoves[i][1] == move->to) action = i + 1;
        }
        environment.step(action);
        ++moves;
        require(moves <= 7, "optimal policy exceeded 7 moves");
    }
    require(moves == 7, "optimal policy did not take exactly 7 moves");
    require(environment.normalized_score() == 1.0, "solved episode must score 1.0");

    // Breadth-first search over all 27 legal states: the policy reaches the
    // goal from each one within the BFS distance.
    env::HanoiState goal;
    goal.pegs[2] = {2, 1, 0};
    std::map<std::string, int> distance{{hanoi_key(goal), 0}};
    std::queue<env::HanoiState> queue;
    queue.push(goal);
    while (!queue.empty()) {
        env::HanoiState s = queue.front();
        queue.pop();
        for (int from = 0; from < 3; ++from) {
            for (int to = 0; to < 3; ++to) {
                if (from == to) continue;
                auto r = env::hanoi_apply(s, from, to);
                if (!std::holds_alternative<env::HanoiState>(r)) continue;
                const auto& next = std::get<env::HanoiState>(r);
                if (distance.emplace(hanoi_key(next), distance[hanoi_key(s)] + 1).second) {
                    queue.push(next);
                }
            }
        }
    }
    require(distance.size() == 27, "BFS oracle must enumerate all 27 states");
    for (const auto& start : testutil::all_hanoi_states_3()) {
        env::HanoiState s = start;
        int steps = 0;
        while (auto move = env::hanoi_optimal_move(s)) {
            s = std::get<env::HanoiState>(env::hanoi_apply(s, move->from, move->to));
            ++steps;
            require(steps <= 7, "policy exceeded the 2^n - 1 bound");
        }
        require(s.solved(), "policy failed to reach the goal from a legal state");
        require(steps == distance.at(hanoi_key(start)), "policy path is not BFS-optimal");
    }
}

// --- criterion 3: round trips -------------------------------------------------

void round_trips() {
    for (const auto& state : testutil::all_hanoi_states_3()) {
        for (auto format : {encoders::Structure::DictList, encoders::Structure::Matrix,
                            encoders::Structure::TaggedList}) {
            require(encoders::decode_hanoi(encoders::encode_hanoi(state, format), format) == state,
                    "decode(encode(s)) != s for " + encoders::to_string(format));
        }
    }

    // The reference Text+VoT example layout, verbatim.
    env::MessengerState table1;
    table1.rows = 4;
    table1.cols = 4;
    table1.agent = {2, 2};
    table1.entities = {
        env::MessengerEntity{"robot", "secret document", env::Role::Message, {3, 0}},
        env::MessengerEntity{"ball", "orb", env::Role::Goal, {3, 2}},
        env::MessengerEntity{"mage", "wizard", env::Role::Enemy, {3, 3}},
    };
    const std::string map = encoders::oracle_vot_map(env::messenger_observe(table1));
    require(map == testutil::load_golden("vot_table1.txt"), "Text+VoT example map mismatch");
    auto parsed = encoders::parse_vot_map(map);
    require(parsed.has_agent && parsed.agent == env::GridPos{2, 2}, "agent position lost");
    require(parsed.entities.size() == 3, "entity count lost");

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        env::MessengerState s = env::messenger_spawn(rng);
        auto obs = env::messenger_observe(s);
        auto round = encoders::parse_vot_map(encoders::oracle_vot_map(obs));
        require(round.has_agent && round.agent == s.agent, "agent position not recovered");
        require(round.entities.size() == s.entities.size(), "entity count not recovered");
        for (const auto& entity : s.entities) {
            bool found = false;
            for (const auto& parsed_entity : round.entities) {
                if (parsed_entity.pos == entity.pos) found = true;
            }
            require(found, "entity position not recovered");
        }
    }
}

// --- criterion 4: prompt fidelity ----------------------------------------------

void prompt_fidelity() {
    const std::string agent = prompting::render_template(
        prompting::TemplateId::Agent, {{"manual", "<manual>"},
                                       {"obs", "<obs>"},
                                       {"trajectory", "<trajectory>"},
                                       {"question", "<question>"}});
    require(agent == testutil::load_golden("prompt_agent.txt"), "agent template mismatch");
    require(contains(agent, "Action: [action number]. Reason: [explanation]"),
            "agent response format anchor missing");

    const std::string summarizer = prompting::render_template(
        prompting::TemplateId::Summarizer, {{"manual", "<manual>"},
                                            {"recent_history", "<recent history>"},
                                            {"previous_summary", "<previous summary>"}});
    require(summarizer == testutil::load_golden("prompt_summarizer.txt"),
            "summarization template mismatch");
    require(contains(summarizer, "If the history is empty, return \"Start of game\"."),
            "summarizer empty-history anchor missing");

    const std::string vot = prompting::render_template(
        prompting::TemplateId::AgentVoT, {{"manual", "<manual>"},
                                          {"obs", "<obs>"},
                                          {"trajectory", "<trajectory>"},
                                          {"question", "<question>"}});
    require(vot == testutil::load_golden("prompt_vot.txt"), "vot template mismatch");
    require(contains(vot, "Draw a compact top-down ASCII map"), "vot protocol anchor missing");
    require(contains(vot, "Map Update Notes:"), "vot output-section anchor missing");
}

// --- criterion 5: end-to-end determinism ---------------------------------------

void end_to_end_determinism() {
    auto policies = eval::register_builtin_mock_policies();
    gateway::Gateway gw;
    const fs::path dir = fs::temp_directory_path() / "staterep_acceptance_e2e";
    fs::remove_all(dir);

    for (bool oracle_summary : {false, true}) {
        eval::RunConfig config;
        config.environment = "hanoi";
        config.representation.granularity = oracle_summary ? encoders::Granularity::Summary
                                                           : encoders::Granularity::LongForm;
        config.representation.structure = encoders::Structure::TaggedList;
        config.representation.oracle_summary = oracle_summary;
        config.model.backend = gateway::Backend::Mock;
        config.model.mock_policy = "optimal";
        config.episodes = 10;
        config.run_seed = 77;

        const std::string label = config.representation.label();
        auto first = eval::run_experiment(config, gw);
        auto second = eval::run_experiment(config, gw);
        fs::path p1 = dir / (label + "_a.jsonl");
        fs::path p2 = dir / (label + "_b.jsonl");
        eval::write_episode_log(first, p1);
        eval::write_episode_log(second, p2);

        std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        require(s1.str() == s2.str() && !s1.str().empty(),
                "logs differ between identical runs for " + label);

        std::ostringstream replay_out;
        require(cli::cmd_replay(p1, replay_out) == cli::kExitOk,
                "cmd_replay failed for " + label + ": " + replay_out.str());
    }
}

// --- criterion 6: statistics calibration ---------------------------------------

void statistics_calibration() {
    // Equal-distribution samples: the 95% CI should exclude 0 in about 5% of
    // trials. 1000 seeded trials, 10,000 resamples each.
    Rng data_rng(31415);
    int significant = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> a(100), b(100);
        for (auto& v : a) v = data_rng.next_unit();
        for (auto& v : b) v = data_rng.next_unit();
        auto result =
            eval::bootstrap_mean_diff(a, b, 10000, 0.95, static_cast<std::uint64_t>(trial));
        if (result.significant) ++significant;
    }
    const double rate = static_cast<double>(significant) / trials;
    require(rate >= 0.03 && rate <= 0.07,
            "significance rate " + std::to_string(rate) + " outside 5% +/- 2pp");

    // Antisymmetry under a group swap holds exactly.
    Rng pair_rng(999);
    for (int i = 0; i < 5; ++i) {
        std::vector<double> a(40), b(35);
        for (auto& v : a) v = pair_rng.next_unit();
        for (auto& v : b) v = 0.1 + pair_rng.next_unit();
        auto ab = eval::bootstrap_mean_diff(a, b, 10000, 0.95, 5 + static_cast<std::uint64_t>(i));
        auto ba = eval::bootstrap_mean_diff(b, a, 10000, 0.95, 5 + static_cast<std::uint64_t>(i));
        require(ab.mean_diff == -ba.mean_diff, "mean_diff not antisymmetric");
        require(ab.ci_low == -ba.ci_high && ab.ci_high == -ba.ci_low, "CI not reflected");
        require(ab.significant == ba.significant, "significance changed under swap");
    }

    // Score-per-kilo-token against hand-computed values, 1e-12 relative.
    auto record = [](double score, long tokens, int calls) {
        eval::EpisodeRecord r;
        r.environment = "hanoi";
        r.normalized_score = score;
        r.agent_calls = calls;
        for (int i = 0; i < calls; ++i) {
            eval::StepEntry s;
            s.timestep = i + 1;
            s.input_tokens = tokens;
            r.steps.push_back(s);
        }
        return r;
    };
    struct Case {
        std::vector<eval::EpisodeRecord> records;
        double expected;
    };
    const Case cases[3] = {
        {{record(0.5, 2000, 4)}, 0.25},
        {{record(1.0, 1000, 5), record(0.0, 3000, 5)}, 0.25},
        {{record(1.0, 800, 3), record(0.5, 1000, 3), record(0.0, 1200, 3)}, 0.5},
    };
    for (const auto& c : cases) {
        const double got = eval::score_per_kilo_token(c.records);
        require(std::abs(got - c.expected) <= 1e-12 * std::abs(c.expected),
                "score_per_kilo_token " + std::to_string(got) + " != " +
                    std::to_string(c.expected));
    }
}

// --- criterion 7: environment-table conformance --------------------------------

void table_conformance() {
    struct Row {
        const char* name;
        int history, actions, timesteps;
    };
    const Row rows[7] = {
        {"hanoi", 30, 6, 30},          {"messenger", 10, 5, 10},
        {"babyai-goto", 128, 6, 128},  {"babyai-open", 128, 6, 128},
        {"babyai-pickup", 128, 6, 128}, {"babyai-pickupseqgoto", 128, 6, 128},
        {"babyai-putnext", 128, 6, 128},
    };
    require(env::builtin_specs().size() == 7, "expected exactly seven shipped environments");
    for (const auto& row : rows) {
        const auto& spec = env::spec_for(row.name);
        require(spec.history_window == row.history, std::string(row.name) + ": history mismatch");
        require(spec.action_count() == row.actions, std::string(row.name) + ": action mismatch");
        require(spec.max_timesteps == row.timesteps,
                std::string(row.name) + ": timestep mismatch");
    }
}

// --- criterion 8: fallback accounting ------------------------------------------

void fallback_accounting() {
    // Inject parse failures on every step with timestep % 3 == 1 (both the
    // first reply and the retry), parse cleanly otherwise. The timestep is
    // read off the long-form trajectory, so the policy is pure and the
    // schedule survives episode boundaries.
    auto scheduled_reply = [](const prompting::PromptBundle& bundle) {
        int steps_so_far = 0;
        size_t pos = 0;
        while ((pos = bundle.user_text.find("\nStep ", pos)) != std::string::npos) {
            ++steps_so_far;
            pos += 6;
        }
        const int timestep = steps_so_far + 1;
        return (timestep % 3) == 1 ? std::string("not a valid action line")
                                   : std::string("Action: 1. Reason: scripted.");
    };
    auto reg = gateway::register_mock_policy("acceptance-schedule", scheduled_reply);
    gateway::Gateway gw;
    eval::RunConfig config;
    config.environment = "messenger";
    config.representation.structure = encoders::Structure::NaturalLanguage;
    config.model.backend = gateway::Backend::Mock;
    config.model.mock_policy = "acceptance-schedule";
    config.episodes = 5;
    config.run_seed = 17;

    auto records = eval::run_experiment(config, gw);
    for (const auto& record : records) {
        int injected = 0;
        for (const auto& step : record.steps) {
            const bool scheduled = (step.timestep % 3) == 1;
            require(step.fallback_used == scheduled, "fallback flag off schedule");
            if (scheduled) ++injected;
        }
        require(record.fallback_count == injected, "fallback count mismatch");
        const double expected_rate =
            static_cast<double>(injected) / static_cast<double>(record.steps.size());
        require(record.fallback_rate() == expected_rate, "fallback rate not exact");
    }
}

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {"encoding-fidelity", 1.0, encoding_fidelity},
        {"environment-correctness", 5.0, environment_correctness},
        {"round-trips", 2.0, round_trips},
        {"prompt-fidelity", 1.0, prompt_fidelity},
        {"end-to-end-determinism", 30.0, end_to_end_determinism},
        {"statistics-calibration", 60.0, statistics_calibration},
        {"environment-table-conformance", 1.0, table_conformance},
        {"fallback-accounting", 5.0, fallback_accounting},
    };

    int failures = 0;
    for (const auto& check : checks) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            check.body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && elapsed > check.budget_seconds) {
            failure = "exceeded the " + std::to_string(check.budget_seconds) + "s budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        if (failure.empty()) {
            line << "PASS  " << check.name << " (" << elapsed << "s)";
        } else {
            line << "FAIL  " << check.name << " (" << elapsed << "s): " << failure;
            ++failures;
        }
        std::cout << line.str() << std::endl;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
