#include "staterep/eval/metrics.hpp"

#include "staterep/core/error.hpp"

namespace staterep::eval {

double score_per_kilo_token(const std::vector<EpisodeRecord>& records) {
    double score_sum = 0.0;
    double token_mean_sum = 0.0;
    int counted = 0;
    for (const auto& record : records) {
        if (record.incident) continue;
        score_sum += record.normalized_score;
        token_mean_sum += record.mean_agent_input_tokens();
        ++counted;
    }
    if (counted == 0) throw metric_error("no scoreable episodes");
    const double mean_tokens = token_mean_sum / counted;
    if (mean_tokens <= 0.0) throw metric_error("zero input-token denominator");
    const double mean_score = score_sum / counted;
    return mean_score / mean_tokens * 1000.0;
}

}  // namespace staterep::eval
