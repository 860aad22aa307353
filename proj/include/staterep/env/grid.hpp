#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "staterep/core/rng.hpp"
#include "staterep/env/types.hpp"

namespace staterep::env {

enum class ObjKind { Ball, Box, Key };
enum class GridColor { Red, Green, Blue, Purple, Yellow, Grey };
enum class DoorState { Open, Closed, Locked };
enum class Heading { North, East, South, West };

std::string to_string(ObjKind kind);
std::string to_string(GridColor color);
std::string to_string(Heading heading);
std::string to_string(DoorState s);

struct GridObject {
    ObjKind kind = ObjKind::Ball;
    GridColor color = GridColor::Red;
    friend bool operator==(const GridObject&, const GridObject&) = default;
};

struct Cell {
    enum class Type { Empty, Wall, Door, Object };
    Type type = Type::Empty;
    GridObject object{};               // valid when type == Object
    GridColor door_color = GridColor::Red;  // valid when type == Door
    DoorState door_state = DoorState::Closed;

    bool passable() const {
        return type == Type::Empty || (type == Type::Door && door_state == DoorState::Open);
    }
    bool opaque() const {
        return type == Type::Wall || (type == Type::Door && door_state != DoorState::Open);
    }
};

// What a mission clause points at: either a door of a color or an object of
// (kind, color).
struct Referent {
    bool is_door = false;
    ObjKind kind = ObjKind::Ball;
    GridColor color = GridColor::Red;
    friend bool operator==(const Referent&, const Referent&) = default;
};

struct MissionSpec {
    enum class Task { GoTo, Open, Pickup, PutNext, PickUpSeqGoTo };
    Task task = Task::GoTo;
    std::vector<Referent> referents;  // arity 2 for PutNext/PickUpSeqGoTo, else 1
    std::string mission_text;
};

std::string to_string(MissionSpec::Task task);

struct GridWorldState {
    int rows = 8;
    int cols = 8;
    std::vector<Cell> cells;  // row-major
    GridPos agent;
    Heading heading = Heading::North;
    std::optional<GridObject> carrying;
    MissionSpec mission;

    Cell& at(int row, int col) { return cells[static_cast<size_t>(row * cols + col)]; }
    const Cell& at(int row, int col) const { return cells[static_cast<size_t>(row * cols + col)]; }
    bool in_bounds(int row, int col) const {
        return row >= 0 && row < rows && col >= 0 && col < cols;
    }
    GridPos facing_pos() const;
};

// Pure success predicate over the state; re-evaluation never changes it.
bool mission_succeeded(const GridWorldState& state);

enum class GridAction { TurnLeft = 0, TurnRight = 1, Forward = 2, Pickup = 3, Drop = 4, Toggle = 5 };

inline constexpr const char* kGridActionLabels[6] = {
    "turn left", "turn right", "go forward", "pick up", "drop", "toggle",
};

// Seeded level generator for one mission family. Layouts are an 8x8 walled
// room, except Open which splits the room in two with a single door.
GridWorldState grid_spawn(MissionSpec::Task task, Rng& rng);

// Egocentric 7x7 window with the agent at the bottom-center facing "up";
// cells behind opaque cells are masked via straight-line ray casting.
struct GridObs {
    static constexpr int kView = 7;
    std::array<Cell, kView * kView> cells{};
    std::array<bool, kView * kView> visible{};
    Heading heading = Heading::North;
    std::optional<GridObject> carrying;
    std::string mission_text;

    const Cell& at(int wrow, int wcol) const {
        return cells[static_cast<size_t>(wrow * kView + wcol)];
    }
    bool visible_at(int wrow, int wcol) const {
        return visible[static_cast<size_t>(wrow * kView + wcol)];
    }
};

GridObs grid_observe(const GridWorldState& state);

}  // namespace staterep::env
