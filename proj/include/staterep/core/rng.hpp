#pragma once

#include <cstdint>

namespace staterep {

// Counter-based generator (splitmix64). Chosen over <random> engines so that
// sequences are identical across platforms and standard library versions,
// which the replay and golden-file tests rely on. No global state: every
// episode derives its own streams from (run_seed, episode_index, stream_id).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng episode_stream(std::uint64_t run_seed, std::uint64_t episode_index,
                              std::uint64_t stream_id) {
        std::uint64_t s = mix(run_seed);
        s = mix(s ^ (episode_index + 0x9e3779b97f4a7c15ULL));
        s = mix(s ^ (stream_id + 0xbf58476d1ce4e5b9ULL));
        return Rng(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Unbiased draw in [0, bound), bound > 0.
    std::uint32_t next_below(std::uint32_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r = next_u64();
        while (r >= limit) r = next_u64();
        return static_cast<std::uint32_t>(r % bound);
    }

    // Inclusive integer range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1) with 53 bits of entropy.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

// Stream ids used by the harness; keeping them in one place avoids collisions.
namespace rng_stream {
inline constexpr std::uint64_t kEnvironment = 0;
inline constexpr std::uint64_t kFallback = 1;
}  // namespace rng_stream

}  // namespace staterep
