#include "staterep/encoders/hanoi_codec.hpp"

#include <cctype>

#include "staterep/core/error.hpp"

namespace staterep::encoders {

using env::HanoiState;
using env::kPegLabels;

namespace {

std::string disks_csv(const std::vector<int>& peg) {
    std::string out;
    for (size_t i = 0; i < peg.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(peg[i]);
    }
    return out;
}

std::string natural_language(const HanoiState& s) {
    std::string out;
    for (int p = 0; p < 3; ++p) {
        const auto& peg = s.pegs[static_cast<size_t>(p)];
        if (p > 0) out += " ";
        std::string name = std::string("Peg ") + kPegLabels[static_cast<size_t>(p)];
        if (peg.empty()) {
            out += name + " is empty.";
        } else if (peg.size() == 1) {
            out += name + " has disk " + std::to_string(peg[0]) + ".";
        } else if (peg.size() == 2) {
            out += name + " has disk " + std::to_string(peg[0]) + " at the bottom and disk " +
                   std::to_string(peg[1]) + " on top.";
        } else {
            out += name + " has disk " + std::to_string(peg[0]) + " at the bottom";
            for (size_t i = 1; i + 1 < peg.size(); ++i) {
                out += ", disk " + std::to_string(peg[i]);
                if (peg.size() == 3) out += " in the middle";
            }
            out += ", and disk " + std::to_string(peg.back()) + " on top.";
        }
    }
    return out;
}

std::string dict_list(const HanoiState& s) {
    std::string out = "{";
    for (int p = 0; p < 3; ++p) {
        if (p > 0) out += ", ";
        out += "'";
        out += kPegLabels[static_cast<size_t>(p)];
        out += "': [" + disks_csv(s.pegs[static_cast<size_t>(p)]) + "]";
    }
    out += "}";
    return out;
}

std::string matrix(const HanoiState& s) {
    std::string out = "[";
    for (int p = 0; p < 3; ++p) {
        if (p > 0) out += ", ";
        const auto& peg = s.pegs[static_cast<size_t>(p)];
        out += "[";
        for (int slot = 0; slot < s.n_disks; ++slot) {
            if (slot > 0) out += ", ";
            out += slot < static_cast<int>(peg.size())
                       ? std::to_string(peg[static_cast<size_t>(slot)])
                       : "-1";
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::string tagged_list(const HanoiState& s) {
    std::string out;
    for (int p = 0; p < 3; ++p) {
        if (p > 0) out += "\n";
        out += "- ";
        out += kPegLabels[static_cast<size_t>(p)];
        out += ": |bottom, [" + disks_csv(s.pegs[static_cast<size_t>(p)]) + "], top|";
    }
    return out;
}

// Minimal cursor with positioned errors for the structured decoders.
struct Cursor {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at offset " + std::to_string(pos));
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    void expect_str(const std::string& s) {
        skip_ws();
        if (text.compare(pos, s.size(), s) != 0) fail("expected \"" + s + "\"");
        pos += s.size();
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    int read_int() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    }
    std::vector<int> read_int_list() {
        expect('[');
        std::vector<int> values;
        if (!peek_is(']')) {
            values.push_back(read_int());
            while (peek_is(',')) {
                expect(',');
                values.push_back(read_int());
            }
        }
        expect(']');
        return values;
    }
    void expect_end() {
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing text");
    }
};

HanoiState finalize(std::array<std::vector<int>, 3> pegs, const std::string& text) {
    HanoiState s;
    s.pegs = std::move(pegs);
    int total = 0;
    for (const auto& peg : s.pegs) total += static_cast<int>(peg.size());
    s.n_disks = total;
    if (total == 0) throw parse_error("no disks in hanoi text: " + text.substr(0, 40));
    if (!s.valid()) throw parse_error("decoded hanoi state violates stacking invariants");
    return s;
}

HanoiState decode_dict_list(const std::string& text) {
    Cursor c{text};
    c.expect('{');
    std::array<std::vector<int>, 3> pegs;
    for (int p = 0; p < 3; ++p) {
        if (p > 0) c.expect(',');
        c.expect('\'');
        c.expect(kPegLabels[static_cast<size_t>(p)]);
        c.expect('\'');
        c.expect(':');
        pegs[static_cast<size_t>(p)] = c.read_int_list();
    }
    c.expect('}');
    c.expect_end();
    return finalize(std::move(pegs), text);
}

HanoiState decode_matrix(const std::string& text) {
    Cursor c{text};
    c.expect('[');
    std::array<std::vector<int>, 3> rows;
    for (int p = 0; p < 3; ++p) {
        if (p > 0) c.expect(',');
        rows[static_cast<size_t>(p)] = c.read_int_list();
    }
    c.expect(']');
    c.expect_end();

    const size_t width = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != width) throw parse_error("ragged matrix rows");
    }
    std::array<std::vector<int>, 3> pegs;
    for (int p = 0; p < 3; ++p) {
        bool padding = false;
        for (int v : rows[static_cast<size_t>(p)]) {
            if (v == -1) {
                padding = true;
            } else {
                if (padding) throw parse_error("disk after -1 padding in matrix row");
                pegs[static_cast<size_t>(p)].push_back(v);
            }
        }
    }
    HanoiState s = finalize(std::move(pegs), text);
    if (static_cast<size_t>(s.n_disks) != width) {
        throw parse_error("matrix width does not match the disk count");
    }
    return s;
}

HanoiState decode_tagged_list(const std::string& text) {
    Cursor c{text};
    std::array<std::vector<int>, 3> pegs;
    for (int p = 0; p < 3; ++p) {
        c.expect('-');
        c.expect(kPegLabels[static_cast<size_t>(p)]);
        c.expect(':');
        c.expect('|');
        c.expect_str("bottom");
        c.expect(',');
        pegs[static_cast<size_t>(p)] = c.read_int_list();
        c.expect(',');
        c.expect_str("top");
        c.expect('|');
    }
    c.expect_end();
    return finalize(std::move(pegs), text);
}

}  // namespace

std::string encode_hanoi(const HanoiState& state, Structure structure) {
    switch (structure) {
        case Structure::NaturalLanguage: return natural_language(state);
        case Structure::DictList: return dict_list(state);
        case Structure::Matrix: return matrix(state);
        case Structure::TaggedList: return tagged_list(state);
        default:
            throw config_error("structure " + to_string(structure) + " is not a hanoi format");
    }
}

env::HanoiState decode_hanoi(const std::string& text, Structure structure) {
    switch (structure) {
        case Structure::DictList: return decode_dict_list(text);
        case Structure::Matrix: return decode_matrix(text);
        case Structure::TaggedList: return decode_tagged_list(text);
        default:
            throw parse_error("no decoder for structure " + to_string(structure));
    }
}

}  // namespace staterep::encoders
