#pragma once

#include <vector>

#include "staterep/eval/record.hpp"

namespace staterep::eval {

// Normalised score per input token (x1000): mean episode score divided by
// the mean agent-call input tokens (mean of per-episode means). Summariser
// tokens are excluded by construction; incident episodes are skipped.
// Metric error when no scoreable episode or the token denominator is zero.
double score_per_kilo_token(const std::vector<EpisodeRecord>& records);

}  // namespace staterep::eval
