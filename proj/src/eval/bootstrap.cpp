#include "staterep/eval/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "staterep/core/error.hpp"
#include "staterep/core/rng.hpp"

namespace staterep::eval {

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_sd(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const double m = mean_of(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

namespace {

std::uint64_t hash_group(const std::vector<double>& values) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the raw bit patterns
    for (double v : values) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (bits >> (byte * 8)) & 0xFF;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

double resample_mean(const std::vector<double>& values, Rng& rng) {
    const auto n = static_cast<std::uint32_t>(values.size());
    double sum = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) sum += values[rng.next_below(n)];
    return sum / static_cast<double>(n);
}

}  // namespace

ComparisonResult bootstrap_mean_diff(const std::vector<double>& a, const std::vector<double>& b,
                                     int resamples, double level, std::uint64_t seed) {
    if (a.empty() || b.empty()) throw protocol_error("bootstrap samples must be non-empty");
    if (resamples < 1) throw protocol_error("resamples must be >= 1");
    if (level <= 0.0 || level >= 1.0) throw protocol_error("confidence level must be in (0,1)");

    ComparisonResult result;
    result.mean_a = mean_of(a);
    result.mean_b = mean_of(b);
    result.sd_a = sample_sd(a);
    result.sd_b = sample_sd(b);
    result.mean_diff = result.mean_a - result.mean_b;
    result.resamples = resamples;

    Rng rng_a(seed ^ hash_group(a));
    Rng rng_b(seed ^ hash_group(b));

    std::vector<double> diffs(static_cast<size_t>(resamples));
    for (int r = 0; r < resamples; ++r) {
        diffs[static_cast<size_t>(r)] = resample_mean(a, rng_a) - resample_mean(b, rng_b);
    }
    std::sort(diffs.begin(), diffs.end());

    const double alpha = 1.0 - level;
    // Symmetric order-statistic indices keep the CI an exact reflection
    // under a group swap.
    int lo_idx = static_cast<int>(alpha / 2.0 * resamples);
    lo_idx = std::clamp(lo_idx, 0, resamples - 1);
    const int hi_idx = resamples - 1 - lo_idx;
    result.ci_low = diffs[static_cast<size_t>(lo_idx)];
    result.ci_high = diffs[static_cast<size_t>(hi_idx)];
    result.significant = !(result.ci_low <= 0.0 && 0.0 <= result.ci_high);
    return result;
}

}  // namespace staterep::eval
