#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace staterep::env {

inline constexpr std::array<char, 3> kPegLabels{'A', 'B', 'C'};

// Disks are identified 0..n-1 with 0 the smallest; each peg stack is stored
// bottom to top and must be strictly decreasing.
struct HanoiState {
    std::array<std::vector<int>, 3> pegs;
    int n_disks = 3;
    int goal_peg = 2;

    static HanoiState initial(int n_disks = 3);

    bool valid() const;
    bool solved() const;
    // Number of disks correctly in place on the goal peg, counted from the
    // largest disk upward (the partial-credit basis).
    int goal_prefix() const;
    int peg_of(int disk) const;

    friend bool operator==(const HanoiState&, const HanoiState&) = default;
};

enum class HanoiMoveError { EmptySource, LargerOnSmaller };

struct HanoiMove {
    int from = 0;
    int to = 0;
    friend bool operator==(const HanoiMove&, const HanoiMove&) = default;
};

// Applies one move; illegal moves are reported, never applied.
std::variant<HanoiState, HanoiMoveError> hanoi_apply(const HanoiState& state, int from, int to);

// Next move of the classic recursive solution toward the goal peg. From any
// legal state the iterated policy solves within 2^n - 1 moves; returns
// nullopt exactly when the state is already solved.
std::optional<HanoiMove> hanoi_optimal_move(const HanoiState& state);

}  // namespace staterep::env
