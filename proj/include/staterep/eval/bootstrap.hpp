#pragma once

#include <cstdint>
#include <vector>

namespace staterep::eval {

struct ComparisonResult {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double sd_a = 0.0;
    double sd_b = 0.0;
    double mean_diff = 0.0;  // mean_a - mean_b
    double ci_low = 0.0;
    double ci_high = 0.0;
    bool significant = false;  // 0 outside [ci_low, ci_high]
    int resamples = 0;
};

double mean_of(const std::vector<double>& values);
double sample_sd(const std::vector<double>& values);  // n-1 denominator; 0 for n < 2

// Percentile bootstrap of mean(a) - mean(b) with independent resampling of
// each group. Each group's index stream is keyed by (seed, hash of the
// group's values) rather than by argument position, so swapping the groups
// mirrors every draw: the swapped result is the exact negation.
ComparisonResult bootstrap_mean_diff(const std::vector<double>& a, const std::vector<double>& b,
                                     int resamples = 10000, double level = 0.95,
                                     std::uint64_t seed = 0);

}  // namespace staterep::eval
