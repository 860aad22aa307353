#include "staterep/eval/replay.hpp"

#include <sstream>

#include "staterep/env/environment.hpp"

namespace staterep::eval {

ReplayResult replay_record(const EpisodeRecord& record) {
    ReplayResult result;
    auto environment = env::make_environment(record.environment);
    environment->reset({record.run_seed, record.episode_index});

    for (const auto& step : record.steps) {
        if (environment->is_terminal()) {
            result.ok = false;
            result.divergence_timestep = step.timestep;
            result.message = "environment terminal before recorded step " +
                             std::to_string(step.timestep);
            return result;
        }
        auto outcome = environment->step(step.action_index);
        if (outcome.reward != step.reward) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "step " << step.timestep << ": reward " << outcome.reward
                << " != recorded " << step.reward;
            result.ok = false;
            result.divergence_timestep = step.timestep;
            result.message = msg.str();
            return result;
        }
    }

    if (record.incident) return result;  // only the recorded prefix is claimed

    if (!environment->is_terminal()) {
        result.ok = false;
        result.message = "environment not terminal after replaying all recorded steps";
        return result;
    }
    if (environment->termination_cause() != record.termination) {
        result.ok = false;
        result.message = "termination cause " + env::to_string(environment->termination_cause()) +
                         " != recorded " + env::to_string(record.termination);
        return result;
    }
    if (environment->normalized_score() != record.normalized_score) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "normalized score " << environment->normalized_score() << " != recorded "
            << record.normalized_score;
        result.ok = false;
        result.message = msg.str();
        return result;
    }
    return result;
}

}  // namespace staterep::eval
