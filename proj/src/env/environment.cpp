#include "staterep/env/environment.hpp"

#include <algorithm>

#include "staterep/core/assets.hpp"
#include "staterep/core/error.hpp"
#include "staterep/core/strings.hpp"

namespace staterep::env {

std::string to_string(TerminationCause cause) {
    switch (cause) {
        case TerminationCause::None: return "None";
        case TerminationCause::GoalReached: return "GoalReached";
        case TerminationCause::Failure: return "Failure";
        case TerminationCause::Timeout: return "Timeout";
    }
    return "None";
}

TerminationCause termination_cause_from_string(std::string_view s) {
    if (s == "None") return TerminationCause::None;
    if (s == "GoalReached") return TerminationCause::GoalReached;
    if (s == "Failure") return TerminationCause::Failure;
    if (s == "Timeout") return TerminationCause::Timeout;
    throw parse_error("unknown termination cause: " + std::string(s));
}

namespace {

std::vector<std::string> hanoi_action_labels() {
    std::vector<std::string> labels;
    const int moves[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    for (const auto& m : moves) {
        labels.push_back(std::string("move disk from ") + kPegLabels[m[0]] + " to " +
                         kPegLabels[m[1]]);
    }
    return labels;
}

std::vector<std::string> messenger_action_labels() {
    return {kMessengerActionLabels, kMessengerActionLabels + 5};
}

std::vector<std::string> grid_action_labels() {
    return {kGridActionLabels, kGridActionLabels + 6};
}

EnvSpec babyai_spec(const std::string& name, Difficulty difficulty) {
    return EnvSpec{name, grid_action_labels(), 128, 128, difficulty, 10};
}

}  // namespace

const std::vector<EnvSpec>& builtin_specs() {
    static const std::vector<EnvSpec> specs = {
        EnvSpec{"hanoi", hanoi_action_labels(), 30, 30, Difficulty::Medium, 10},
        EnvSpec{"messenger", messenger_action_labels(), 10, 10, Difficulty::Hard, 20},
        babyai_spec("babyai-goto", Difficulty::Easy),
        babyai_spec("babyai-open", Difficulty::Medium),
        babyai_spec("babyai-pickup", Difficulty::Medium),
        babyai_spec("babyai-pickupseqgoto", Difficulty::Hard),
        babyai_spec("babyai-putnext", Difficulty::Hard),
    };
    return specs;
}

const EnvSpec& spec_for(std::string_view name) {
    for (const auto& spec : builtin_specs()) {
        if (spec.name == name) return spec;
    }
    throw config_error("unknown environment: " + std::string(name));
}

Family family_of(std::string_view env_name) {
    if (env_name == "hanoi") return Family::Hanoi;
    if (env_name == "messenger") return Family::Messenger;
    if (env_name.rfind("babyai-", 0) == 0) {
        spec_for(env_name);  // validates the exact name
        return Family::Grid;
    }
    throw config_error("unknown environment: " + std::string(env_name));
}

Observation Environment::reset(const EpisodeSeed& seed) {
    rng_ = Rng::episode_stream(seed.run_seed, seed.episode_index, rng_stream::kEnvironment);
    active_ = true;
    timestep_ = 1;
    cumulative_ = 0.0;
    cause_ = TerminationCause::None;
    return on_reset(rng_);
}

StepOutcome Environment::step(int action_index) {
    if (!active_) throw state_error("step() before reset()");
    if (is_terminal()) throw state_error("step() after a terminal outcome");
    if (action_index < 1 || action_index > spec_.action_count()) {
        throw protocol_error("action index " + std::to_string(action_index) +
                             " out of range 1.." + std::to_string(spec_.action_count()));
    }

    Transition tr = on_step(action_index - 1);
    const int acted_at = timestep_;
    timestep_ += 1;
    if (tr.cause == TerminationCause::None && acted_at >= spec_.max_timesteps) {
        tr.cause = TerminationCause::Timeout;
        tr.reward += timeout_bonus();
    }
    cumulative_ += tr.reward;
    cause_ = tr.cause;

    StepOutcome outcome;
    outcome.observation = std::move(tr.obs);
    outcome.reward = tr.reward;
    outcome.cause = cause_;
    outcome.terminal = cause_ != TerminationCause::None;
    return outcome;
}

double Environment::normalized_score() const {
    if (!is_terminal()) throw state_error("normalized_score() before the episode is terminal");
    return std::clamp(cumulative_, 0.0, 1.0);
}

// --- Hanoi ---

HanoiEnv::HanoiEnv() : Environment(spec_for("hanoi")) {}

std::string HanoiEnv::manual() const { return trim(load_asset("manuals/hanoi.txt")); }

Observation HanoiEnv::on_reset(Rng&) {
    state_ = HanoiState::initial(3);
    return state_;
}

Environment::Transition HanoiEnv::on_step(int action0) {
    static constexpr int kMoves[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    Transition tr;
    auto result = hanoi_apply(state_, kMoves[action0][0], kMoves[action0][1]);
    if (std::holds_alternative<HanoiState>(result)) {
        state_ = std::get<HanoiState>(result);
        if (state_.solved()) {
            tr.cause = TerminationCause::GoalReached;
            tr.reward = 1.0;
        }
    }
    // Illegal moves consume the timestep with zero reward.
    tr.obs = state_;
    return tr;
}

double HanoiEnv::timeout_bonus() const {
    return static_cast<double>(state_.goal_prefix()) / static_cast<double>(state_.n_disks);
}

// --- Messenger ---

MessengerEnv::MessengerEnv() : Environment(spec_for("messenger")) {}

std::string MessengerEnv::manual() const {
    if (state_.entities.empty()) throw state_error("manual() before reset()");
    std::string text = trim(load_asset("manuals/messenger.txt"));
    text = replace_placeholder(text, "message_synonym", state_.entity(Role::Message).synonym);
    text = replace_placeholder(text, "goal_synonym", state_.entity(Role::Goal).synonym);
    text = replace_placeholder(text, "enemy_synonym", state_.entity(Role::Enemy).synonym);
    return text;
}

Observation MessengerEnv::on_reset(Rng& rng) {
    state_ = messenger_spawn(rng);
    return messenger_observe(state_);
}

Environment::Transition MessengerEnv::on_step(int action0) {
    const auto action = static_cast<MessengerAction>(action0);
    GridPos next = state_.agent;
    switch (action) {
        case MessengerAction::North: next.row -= 1; break;
        case MessengerAction::South: next.row += 1; break;
        case MessengerAction::East: next.col += 1; break;
        case MessengerAction::West: next.col -= 1; break;
        case MessengerAction::Stay: break;
    }
    next.row = std::clamp(next.row, 0, state_.rows - 1);
    next.col = std::clamp(next.col, 0, state_.cols - 1);
    state_.agent = next;
    state_.last_action = kMessengerActionLabels[action0];

    Transition tr;
    if (next == state_.entity(Role::Enemy).pos) {
        tr.cause = TerminationCause::Failure;
        tr.reward = -cumulative_reward();  // enemy contact zeroes the episode
    } else {
        if (!state_.has_message && next == state_.entity(Role::Message).pos) {
            state_.has_message = true;
            tr.reward += 0.5;
        }
        if (state_.has_message && next == state_.entity(Role::Goal).pos) {
            tr.cause = TerminationCause::GoalReached;
            tr.reward += 0.5;
        }
    }
    tr.obs = messenger_observe(state_);
    return tr;
}

// --- BabyAI grid ---

GridEnv::GridEnv(EnvSpec spec, MissionSpec::Task task)
    : Environment(std::move(spec)), task_(task) {}

std::string GridEnv::manual() const { return trim(load_asset("manuals/babyai.txt")); }

Observation GridEnv::on_reset(Rng& rng) {
    state_ = grid_spawn(task_, rng);
    return grid_observe(state_);
}

Environment::Transition GridEnv::on_step(int action0) {
    const auto action = static_cast<GridAction>(action0);
    GridPos f = state_.facing_pos();
    const bool facing_in_bounds = state_.in_bounds(f.row, f.col);

    switch (action) {
        case GridAction::TurnLeft:
            state_.heading = static_cast<Heading>((static_cast<int>(state_.heading) + 3) % 4);
            break;
        case GridAction::TurnRight:
            state_.heading = static_cast<Heading>((static_cast<int>(state_.heading) + 1) % 4);
            break;
        case GridAction::Forward:
            if (facing_in_bounds && state_.at(f.row, f.col).passable()) state_.agent = f;
            break;
        case GridAction::Pickup:
            if (facing_in_bounds && !state_.carrying &&
                state_.at(f.row, f.col).type == Cell::Type::Object) {
                state_.carrying = state_.at(f.row, f.col).object;
                state_.at(f.row, f.col) = Cell{};
            }
            break;
        case GridAction::Drop:
            if (facing_in_bounds && state_.carrying &&
                state_.at(f.row, f.col).type == Cell::Type::Empty) {
                Cell& cell = state_.at(f.row, f.col);
                cell.type = Cell::Type::Object;
                cell.object = *state_.carrying;
                state_.carrying.reset();
            }
            break;
        case GridAction::Toggle:
            if (facing_in_bounds && state_.at(f.row, f.col).type == Cell::Type::Door) {
                Cell& door = state_.at(f.row, f.col);
                switch (door.door_state) {
                    case DoorState::Closed: door.door_state = DoorState::Open; break;
                    case DoorState::Open: door.door_state = DoorState::Closed; break;
                    case DoorState::Locked:
                        if (state_.carrying && state_.carrying->kind == ObjKind::Key &&
                            state_.carrying->color == door.door_color) {
                            door.door_state = DoorState::Open;
                        }
                        break;
                }
            }
            break;
    }

    Transition tr;
    if (mission_succeeded(state_)) {
        tr.cause = TerminationCause::GoalReached;
        tr.reward = 1.0;
    }
    tr.obs = grid_observe(state_);
    return tr;
}

std::unique_ptr<Environment> make_environment(std::string_view name) {
    switch (family_of(name)) {
        case Family::Hanoi: return std::make_unique<HanoiEnv>();
        case Family::Messenger: return std::make_unique<MessengerEnv>();
        case Family::Grid: {
            const EnvSpec& spec = spec_for(name);
            MissionSpec::Task task;
            if (name == "babyai-goto") task = MissionSpec::Task::GoTo;
            else if (name == "babyai-open") task = MissionSpec::Task::Open;
            else if (name == "babyai-pickup") task = MissionSpec::Task::Pickup;
            else if (name == "babyai-pickupseqgoto") task = MissionSpec::Task::PickUpSeqGoTo;
            else task = MissionSpec::Task::PutNext;
            return std::make_unique<GridEnv>(spec, task);
        }
    }
    throw config_error("unknown environment: " + std::string(name));
}

}  // namespace staterep::env
