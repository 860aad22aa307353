#include "staterep/env/hanoi.hpp"

#include <algorithm>

namespace staterep::env {

HanoiState HanoiState::initial(int n_disks) {
    HanoiState s;
    s.n_disks = n_disks;
    for (int d = n_disks - 1; d >= 0; --d) s.pegs[0].push_back(d);
    return s;
}

bool HanoiState::valid() const {
    std::vector<int> seen(static_cast<size_t>(n_disks), 0);
    for (const auto& peg : pegs) {
        for (size_t i = 0; i < peg.size(); ++i) {
            int d = peg[i];
            if (d < 0 || d >= n_disks) return false;
            seen[static_cast<size_t>(d)] += 1;
            if (i > 0 && peg[i - 1] <= d) return false;  // larger must sit below
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

bool HanoiState::solved() const {
    return static_cast<int>(pegs[static_cast<size_t>(goal_peg)].size()) == n_disks;
}

int HanoiState::goal_prefix() const {
    const auto& goal = pegs[static_cast<size_t>(goal_peg)];
    int count = 0;
    for (size_t i = 0; i < goal.size(); ++i) {
        if (goal[i] == n_disks - 1 - static_cast<int>(i)) {
            ++count;
        } else {
            break;
        }
    }
    return count;
}

int HanoiState::peg_of(int disk) const {
    for (int p = 0; p < 3; ++p) {
        for (int d : pegs[static_cast<size_t>(p)]) {
            if (d == disk) return p;
        }
    }
    return -1;
}

std::variant<HanoiState, HanoiMoveError> hanoi_apply(const HanoiState& state, int from, int to) {
    const auto& src = state.pegs[static_cast<size_t>(from)];
    const auto& dst = state.pegs[static_cast<size_t>(to)];
    if (src.empty()) return HanoiMoveError::EmptySource;
    if (!dst.empty() && src.back() > dst.back()) return HanoiMoveError::LargerOnSmaller;

    HanoiState next = state;
    int disk = next.pegs[static_cast<size_t>(from)].back();
    next.pegs[static_cast<size_t>(from)].pop_back();
    next.pegs[static_cast<size_t>(to)].push_back(disk);
    return next;
}

namespace {

// Considering only disks 0..disk, returns the next move that progresses the
// stack toward `target`, or nullopt when those disks already sit there.
std::optional<HanoiMove> next_move_for(const HanoiState& s, int disk, int target) {
    if (disk < 0) return std::nullopt;
    int p = s.peg_of(disk);
    if (p == target) return next_move_for(s, disk - 1, target);
    int aux = 3 - p - target;
    if (auto sub = next_move_for(s, disk - 1, aux)) return sub;
    return HanoiMove{p, target};
}

}  // namespace

std::optional<HanoiMove> hanoi_optimal_move(const HanoiState& state) {
    if (state.solved()) return std::nullopt;
    return next_move_for(state, state.n_disks - 1, state.goal_peg);
}

}  // namespace staterep::env
