#include "staterep/encoders/vot.hpp"

#include <cctype>
#include <set>

#include "staterep/core/error.hpp"
#include "staterep/core/strings.hpp"

namespace staterep::encoders {

using env::Cell;
using env::GridPos;

namespace {

constexpr const char* kMapHeader = "Map (Top-Down View):";

// First unused uppercase letter of the word, falling back to the first
// unused letter of the alphabet. 'A' is reserved for the agent up front.
char assign_glyph(const std::string& word, std::set<char>& used) {
    for (char ch : word) {
        char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (up >= 'A' && up <= 'Z' && !used.count(up)) {
            used.insert(up);
            return up;
        }
    }
    for (char up = 'A'; up <= 'Z'; ++up) {
        if (!used.count(up)) {
            used.insert(up);
            return up;
        }
    }
    throw state_error("ran out of map glyphs");
}

std::string capitalize(std::string word) {
    if (!word.empty()) word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    return word;
}

std::string render_rows(const std::vector<std::string>& grid) {
    std::string out;
    for (size_t r = 0; r < grid.size(); ++r) {
        out += "Row" + std::to_string(r + 1) + ":";
        for (char ch : grid[r]) {
            out += ' ';
            out += ch;
        }
        out += "\n";
    }
    return out;
}

}  // namespace

std::string oracle_vot_map(const env::MessengerObs& obs) {
    std::vector<std::string> grid(static_cast<size_t>(obs.rows),
                                  std::string(static_cast<size_t>(obs.cols), '.'));
    std::set<char> used{'A'};
    std::string legend = "Legend:\nA = Agent";
    for (const auto& e : obs.entities) {
        char glyph = assign_glyph(e.base, used);
        grid[static_cast<size_t>(e.pos.row)][static_cast<size_t>(e.pos.col)] = glyph;
        legend += std::string("\n") + glyph + " = " + capitalize(e.base) + " (" +
                  env::to_string(e.role) + "; " + e.synonym + ")";
    }
    grid[static_cast<size_t>(obs.agent.row)][static_cast<size_t>(obs.agent.col)] = 'A';

    return std::string(kMapHeader) + "\n" + render_rows(grid) + legend;
}

std::string oracle_vot_map(const env::GridWorldState& state) {
    std::vector<std::string> grid(static_cast<size_t>(state.rows),
                                  std::string(static_cast<size_t>(state.cols), '.'));
    std::set<char> used{'A'};
    std::string legend = "Legend:\nA = Agent";
    bool any_wall = false;
    for (int r = 0; r < state.rows; ++r) {
        for (int c = 0; c < state.cols; ++c) {
            const Cell& cell = state.at(r, c);
            switch (cell.type) {
                case Cell::Type::Wall:
                    grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = '#';
                    any_wall = true;
                    break;
                case Cell::Type::Object: {
                    char glyph = assign_glyph(env::to_string(cell.object.kind), used);
                    grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = glyph;
                    legend += std::string("\n") + glyph + " = " +
                              env::to_string(cell.object.color) + " " +
                              env::to_string(cell.object.kind);
                    break;
                }
                case Cell::Type::Door: {
                    char glyph = assign_glyph("door", used);
                    grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = glyph;
                    legend += std::string("\n") + glyph + " = " +
                              env::to_string(cell.door_color) + " door (" +
                              env::to_string(cell.door_state) + ")";
                    break;
                }
                case Cell::Type::Empty: break;
            }
        }
    }
    grid[static_cast<size_t>(state.agent.row)][static_cast<size_t>(state.agent.col)] = 'A';
    if (any_wall) legend += "\n# = wall";

    return std::string(kMapHeader) + "\n" + render_rows(grid) + legend;
}

std::string oracle_vot_map(const env::HanoiState& state) {
    std::string out = std::string(kMapHeader) + "\n";
    for (int p = 0; p < 3; ++p) {
        const auto& peg = state.pegs[static_cast<size_t>(p)];
        out += std::string("Rod ") + env::kPegLabels[static_cast<size_t>(p)] + ": [";
        for (size_t i = 0; i < peg.size(); ++i) {
            if (i > 0) out += ", ";
            out += std::to_string(peg[i]);
        }
        out += "]";
        if (!peg.empty()) {
            out += "  (top is " + std::to_string(peg.back()) + ", bottom is " +
                   std::to_string(peg.front()) + ")";
        }
        if (p < 2) out += "\n";
    }
    return out;
}

VotMap parse_vot_map(const std::string& text) {
    auto lines = split_lines(text);
    size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i >= lines.size() || trim(lines[i]) != kMapHeader) {
        throw parse_error("missing \"Map (Top-Down View):\" header");
    }
    ++i;

    VotMap map;
    std::vector<std::string> grid;
    while (i < lines.size()) {
        std::string line = trim(lines[i]);
        std::string expected_prefix = "Row" + std::to_string(grid.size() + 1) + ":";
        if (line.rfind(expected_prefix, 0) != 0) break;
        std::string cells;
        for (const auto& token : whitespace_tokens(line.substr(expected_prefix.size()))) {
            if (token.size() != 1) {
                throw parse_error("map cell token \"" + token + "\" is not a single glyph");
            }
            cells += token[0];
        }
        if (!grid.empty() && cells.size() != grid[0].size()) {
            throw parse_error("ragged map row " + std::to_string(grid.size() + 1));
        }
        grid.push_back(cells);
        ++i;
    }
    if (grid.empty()) throw parse_error("no RowK lines after the map header");
    map.rows = static_cast<int>(grid.size());
    map.cols = static_cast<int>(grid[0].size());

    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i >= lines.size() || trim(lines[i]) != "Legend:") {
        throw parse_error("missing \"Legend:\" block");
    }
    ++i;

    // Positions of letter glyphs; a letter placed twice is ambiguous.
    std::vector<std::pair<char, GridPos>> placed;
    for (int r = 0; r < map.rows; ++r) {
        for (int c = 0; c < map.cols; ++c) {
            char ch = grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                for (const auto& [g, pos] : placed) {
                    if (g == ch) {
                        throw parse_error(std::string("glyph '") + ch +
                                          "' appears more than once on the map");
                    }
                }
                placed.emplace_back(ch, GridPos{r, c});
            }
        }
    }
    auto find_pos = [&placed](char glyph) -> const GridPos* {
        for (const auto& [g, pos] : placed) {
            if (g == glyph) return &pos;
        }
        return nullptr;
    };

    std::set<char> legend_glyphs;
    for (; i < lines.size(); ++i) {
        std::string line = trim(lines[i]);
        if (line.empty()) break;
        size_t eq = line.find(" = ");
        if (eq == std::string::npos || eq != 1) {
            throw parse_error("malformed legend line: \"" + line + "\"");
        }
        char glyph = line[0];
        std::string label = line.substr(eq + 3);
        if (!legend_glyphs.insert(glyph).second) {
            throw parse_error(std::string("duplicate legend glyph '") + glyph + "'");
        }
        if (glyph == '#' || glyph == '.') continue;  // walls/empty are not entities
        const GridPos* pos = find_pos(glyph);
        if (!pos) {
            throw parse_error(std::string("legend glyph '") + glyph + "' not on the map");
        }
        if (glyph == 'A' && label == "Agent") {
            map.has_agent = true;
            map.agent = *pos;
        } else {
            map.entities.push_back(VotEntity{glyph, label, *pos});
        }
    }
    return map;
}

}  // namespace staterep::encoders
