#pragma once

#include <memory>
#include <string>
#include <variant>

#include "staterep/core/rng.hpp"
#include "staterep/env/grid.hpp"
#include "staterep/env/hanoi.hpp"
#include "staterep/env/messenger.hpp"
#include "staterep/env/types.hpp"

namespace staterep::env {

// Ground-truth observation payload, family specific. Hanoi is fully
// observed; the grid families expose derived views.
using Observation = std::variant<HanoiState, MessengerObs, GridObs>;

struct StepOutcome {
    Observation observation;
    double reward = 0.0;
    bool terminal = false;
    TerminationCause cause = TerminationCause::None;
};

// Episode contract shared by all families: deterministic seeding, 1-based
// action indices, strict timestep monotonicity, timeout at the spec's step
// limit, and rejection of any step after a terminal outcome. Instances are
// single-threaded and externally synchronized; distinct instances share no
// mutable state.
class Environment {
public:
    virtual ~Environment() = default;

    const EnvSpec& spec() const { return spec_; }

    Observation reset(const EpisodeSeed& seed);
    StepOutcome step(int action_index);  // 1-based per the agent prompt contract

    bool started() const { return active_; }
    bool is_terminal() const { return active_ && cause_ != TerminationCause::None; }
    int timestep() const { return timestep_; }
    double cumulative_reward() const { return cumulative_; }
    TerminationCause termination_cause() const { return cause_; }

    // Normalized score in [0, 1]; exactly 1.0 iff the task was completed.
    // Only meaningful (and only callable) once the episode is terminal.
    double normalized_score() const;

    // Static task manual shown to the agent; for Messenger it is templated
    // with the episode's synonym assignment, so reset() must come first.
    virtual std::string manual() const = 0;

protected:
    explicit Environment(EnvSpec spec) : spec_(std::move(spec)) {}

    struct Transition {
        Observation obs;
        double reward = 0.0;
        TerminationCause cause = TerminationCause::None;
    };

    virtual Observation on_reset(Rng& rng) = 0;
    virtual Transition on_step(int action0) = 0;
    // Extra reward granted when the episode times out (Hanoi partial credit).
    virtual double timeout_bonus() const { return 0.0; }

private:
    EnvSpec spec_;
    Rng rng_{0};
    bool active_ = false;
    int timestep_ = 0;
    double cumulative_ = 0.0;
    TerminationCause cause_ = TerminationCause::None;
};

class HanoiEnv final : public Environment {
public:
    HanoiEnv();
    std::string manual() const override;
    const HanoiState& state() const { return state_; }

protected:
    Observation on_reset(Rng& rng) override;
    Transition on_step(int action0) override;
    double timeout_bonus() const override;

private:
    HanoiState state_;
};

class MessengerEnv final : public Environment {
public:
    MessengerEnv();
    std::string manual() const override;
    const MessengerState& state() const { return state_; }

protected:
    Observation on_reset(Rng& rng) override;
    Transition on_step(int action0) override;

private:
    MessengerState state_;
};

class GridEnv final : public Environment {
public:
    GridEnv(EnvSpec spec, MissionSpec::Task task);
    std::string manual() const override;
    const GridWorldState& state() const { return state_; }

protected:
    Observation on_reset(Rng& rng) override;
    Transition on_step(int action0) override;

private:
    MissionSpec::Task task_;
    GridWorldState state_;
};

// Instantiates a registered environment by name; Config error otherwise.
std::unique_ptr<Environment> make_environment(std::string_view name);

}  // namespace staterep::env
