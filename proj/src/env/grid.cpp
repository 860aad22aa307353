#include "staterep/env/grid.hpp"

#include <algorithm>
#include <cstdlib>

#include "staterep/core/error.hpp"

namespace staterep::env {

std::string to_string(ObjKind kind) {
    switch (kind) {
        case ObjKind::Ball: return "ball";
        case ObjKind::Box: return "box";
        case ObjKind::Key: return "key";
    }
    return "ball";
}

std::string to_string(GridColor color) {
    switch (color) {
        case GridColor::Red: return "red";
        case GridColor::Green: return "green";
        case GridColor::Blue: return "blue";
        case GridColor::Purple: return "purple";
        case GridColor::Yellow: return "yellow";
        case GridColor::Grey: return "grey";
    }
    return "red";
}

std::string to_string(Heading heading) {
    switch (heading) {
        case Heading::North: return "north";
        case Heading::East: return "east";
        case Heading::South: return "south";
        case Heading::West: return "west";
    }
    return "north";
}

std::string to_string(DoorState s) {
    switch (s) {
        case DoorState::Open: return "open";
        case DoorState::Closed: return "closed";
        case DoorState::Locked: return "locked";
    }
    return "closed";
}

std::string to_string(MissionSpec::Task task) {
    switch (task) {
        case MissionSpec::Task::GoTo: return "GoTo";
        case MissionSpec::Task::Open: return "Open";
        case MissionSpec::Task::Pickup: return "Pickup";
        case MissionSpec::Task::PutNext: return "PutNext";
        case MissionSpec::Task::PickUpSeqGoTo: return "PickUpSeqGoTo";
    }
    return "GoTo";
}

namespace {

GridPos heading_delta(Heading h) {
    switch (h) {
        case Heading::North: return {-1, 0};
        case Heading::East: return {0, 1};
        case Heading::South: return {1, 0};
        case Heading::West: return {0, -1};
    }
    return {-1, 0};
}

bool cell_matches(const Cell& cell, const Referent& ref) {
    if (ref.is_door) return cell.type == Cell::Type::Door && cell.door_color == ref.color;
    return cell.type == Cell::Type::Object && cell.object.kind == ref.kind &&
           cell.object.color == ref.color;
}

bool carrying_matches(const GridWorldState& s, const Referent& ref) {
    return !ref.is_door && s.carrying.has_value() && s.carrying->kind == ref.kind &&
           s.carrying->color == ref.color;
}

bool facing_matches(const GridWorldState& s, const Referent& ref) {
    GridPos f = s.facing_pos();
    return s.in_bounds(f.row, f.col) && cell_matches(s.at(f.row, f.col), ref);
}

}  // namespace

GridPos GridWorldState::facing_pos() const {
    GridPos d = heading_delta(heading);
    return {agent.row + d.row, agent.col + d.col};
}

bool mission_succeeded(const GridWorldState& state) {
    const auto& refs = state.mission.referents;
    switch (state.mission.task) {
        case MissionSpec::Task::GoTo:
            return facing_matches(state, refs[0]);
        case MissionSpec::Task::Open: {
            for (int r = 0; r < state.rows; ++r) {
                for (int c = 0; c < state.cols; ++c) {
                    const Cell& cell = state.at(r, c);
                    if (cell.type == Cell::Type::Door && cell.door_color == refs[0].color &&
                        cell.door_state == DoorState::Open) {
                        return true;
                    }
                }
            }
            return false;
        }
        case MissionSpec::Task::Pickup:
            return carrying_matches(state, refs[0]);
        case MissionSpec::Task::PutNext: {
            // Both objects must be placed in the layout, 4-adjacent.
            for (int r = 0; r < state.rows; ++r) {
                for (int c = 0; c < state.cols; ++c) {
                    if (!cell_matches(state.at(r, c), refs[0])) continue;
                    const GridPos neighbours[4] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
                    for (const auto& n : neighbours) {
                        if (state.in_bounds(n.row, n.col) &&
                            cell_matches(state.at(n.row, n.col), refs[1])) {
                            return true;
                        }
                    }
                }
            }
            return false;
        }
        case MissionSpec::Task::PickUpSeqGoTo:
            return carrying_matches(state, refs[0]) && facing_matches(state, refs[1]);
    }
    return false;
}

namespace {

constexpr ObjKind kKinds[3] = {ObjKind::Ball, ObjKind::Box, ObjKind::Key};
constexpr GridColor kColors[6] = {GridColor::Red,    GridColor::Green,  GridColor::Blue,
                                  GridColor::Purple, GridColor::Yellow, GridColor::Grey};

Referent random_object_referent(Rng& rng) {
    Referent r;
    r.is_door = false;
    r.kind = kKinds[rng.next_below(3)];
    r.color = kColors[rng.next_below(6)];
    return r;
}

std::string referent_phrase(const Referent& r) {
    if (r.is_door) return to_string(r.color) + " door";
    return to_string(r.color) + " " + to_string(r.kind);
}

GridWorldState walled_room() {
    GridWorldState s;
    s.cells.assign(static_cast<size_t>(s.rows * s.cols), Cell{});
    for (int r = 0; r < s.rows; ++r) {
        for (int c = 0; c < s.cols; ++c) {
            if (r == 0 || c == 0 || r == s.rows - 1 || c == s.cols - 1) {
                s.at(r, c).type = Cell::Type::Wall;
            }
        }
    }
    return s;
}

GridPos random_empty_cell(const GridWorldState& s, Rng& rng) {
    while (true) {
        GridPos p{rng.range(1, s.rows - 2), rng.range(1, s.cols - 2)};
        if (s.at(p.row, p.col).type == Cell::Type::Empty && !(p == s.agent)) return p;
    }
}

void place_object(GridWorldState& s, const Referent& ref, Rng& rng) {
    GridPos p = random_empty_cell(s, rng);
    Cell& cell = s.at(p.row, p.col);
    cell.type = Cell::Type::Object;
    cell.object = GridObject{ref.kind, ref.color};
}

void place_agent(GridWorldState& s, Rng& rng, int min_col = 1, int max_col = -1) {
    if (max_col < 0) max_col = s.cols - 2;
    while (true) {
        GridPos p{rng.range(1, s.rows - 2), rng.range(min_col, max_col)};
        if (s.at(p.row, p.col).type != Cell::Type::Empty) continue;
        s.agent = p;
        s.heading = static_cast<Heading>(rng.next_below(4));
        return;
    }
}

std::vector<Referent> distinct_referents(Rng& rng, size_t count) {
    std::vector<Referent> out;
    while (out.size() < count) {
        Referent r = random_object_referent(rng);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

}  // namespace

GridWorldState grid_spawn(MissionSpec::Task task, Rng& rng) {
    using Task = MissionSpec::Task;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        GridWorldState s = walled_room();
        s.agent = {-1, -1};
        s.mission.task = task;
        s.mission.referents.clear();

        switch (task) {
            case Task::GoTo:
            case Task::Pickup: {
                auto refs = distinct_referents(rng, 3);  // target + two distractors
                s.mission.referents = {refs[0]};
                for (const auto& r : refs) place_object(s, r, rng);
                s.mission.mission_text =
                    (task == Task::GoTo ? "go to the " : "pick up the ") + referent_phrase(refs[0]);
                break;
            }
            case Task::PutNext: {
                auto refs = distinct_referents(rng, 3);
                s.mission.referents = {refs[0], refs[1]};
                for (const auto& r : refs) place_object(s, r, rng);
                s.mission.mission_text = "put the " + referent_phrase(refs[0]) + " next to the " +
                                         referent_phrase(refs[1]);
                break;
            }
            case Task::PickUpSeqGoTo: {
                auto refs = distinct_referents(rng, 3);
                s.mission.referents = {refs[0], refs[1]};
                for (const auto& r : refs) place_object(s, r, rng);
                s.mission.mission_text = "pick up the " + referent_phrase(refs[0]) +
                                         ", then go to the " + referent_phrase(refs[1]);
                break;
            }
            case Task::Open: {
                // Two rooms split by a wall at the middle column, joined by
                // one closed door; the agent starts in the left room.
                const int wall_col = s.cols / 2;
                for (int r = 1; r < s.rows - 1; ++r) s.at(r, wall_col).type = Cell::Type::Wall;
                int door_row = rng.range(1, s.rows - 2);
                Cell& door = s.at(door_row, wall_col);
                door.type = Cell::Type::Door;
                door.door_color = kColors[rng.next_below(6)];
                door.door_state = DoorState::Closed;
                Referent ref;
                ref.is_door = true;
                ref.color = door.door_color;
                s.mission.referents = {ref};
                s.mission.mission_text = "open the " + referent_phrase(ref);
                place_agent(s, rng, 1, wall_col - 1);
                break;
            }
        }
        if (task != Task::Open) place_agent(s, rng);
        if (!mission_succeeded(s)) return s;
    }
    throw state_error("grid_spawn failed to produce an unsolved layout");
}

GridObs grid_observe(const GridWorldState& state) {
    GridObs obs;
    obs.heading = state.heading;
    obs.carrying = state.carrying;
    obs.mission_text = state.mission.mission_text;

    const GridPos fwd = heading_delta(state.heading);
    const GridPos right{fwd.col != 0 ? (fwd.col > 0 ? 1 : -1) : 0,
                        fwd.row != 0 ? (fwd.row > 0 ? -1 : 1) : 0};

    constexpr int kView = GridObs::kView;
    const int agent_wr = kView - 1, agent_wc = kView / 2;

    auto world_pos = [&](int wr, int wc) {
        const int f = agent_wr - wr;
        const int r = wc - agent_wc;
        return GridPos{state.agent.row + f * fwd.row + r * right.row,
                       state.agent.col + f * fwd.col + r * right.col};
    };
    auto opaque_at = [&](int wr, int wc) {
        GridPos p = world_pos(wr, wc);
        if (!state.in_bounds(p.row, p.col)) return true;
        return state.at(p.row, p.col).opaque();
    };
    // Straight-line visibility: a cell is seen iff every window cell strictly
    // between it and the agent along the Bresenham line is transparent.
    auto line_clear = [&](int wr, int wc) {
        int x0 = agent_wc, y0 = agent_wr, x1 = wc, y1 = wr;
        int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
        int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
        int err = dx + dy;
        int x = x0, y = y0;
        while (true) {
            if (!(x == x0 && y == y0) && !(x == x1 && y == y1) && opaque_at(y, x)) return false;
            if (x == x1 && y == y1) return true;
            int e2 = 2 * err;
            if (e2 >= dy) { err += dy; x += sx; }
            if (e2 <= dx) { err += dx; y += sy; }
        }
    };

    for (int wr = 0; wr < kView; ++wr) {
        for (int wc = 0; wc < kView; ++wc) {
            GridPos p = world_pos(wr, wc);
            const size_t i = static_cast<size_t>(wr * kView + wc);
            if (!state.in_bounds(p.row, p.col)) {
                obs.visible[i] = false;
                continue;
            }
            if (!line_clear(wr, wc)) {
                obs.visible[i] = false;
                continue;
            }
            obs.visible[i] = true;
            obs.cells[i] = state.at(p.row, p.col);
        }
    }
    return obs;
}

}  // namespace staterep::env
