#pragma once

#include <string>

#include "staterep/encoders/representation.hpp"
#include "staterep/env/hanoi.hpp"

namespace staterep::encoders {

// Byte-exact Hanoi renderings. NaturalLanguage reads
//   "Peg A has disk 2 at the bottom, disk 1 in the middle, and disk 0 on top."
// DictList is {'A': [2, 1, 0], 'B': [], 'C': []}, Matrix pads each peg row
// to n slots with -1, TaggedList emits "- A: |bottom, [2, 1, 0], top|" lines.
std::string encode_hanoi(const env::HanoiState& state, Structure structure);

// Inverse of encode_hanoi for the three structured formats; Parse errors
// carry the byte offset of the first offending character. decode(encode(s))
// is the identity over legal states.
env::HanoiState decode_hanoi(const std::string& text, Structure structure);

}  // namespace staterep::encoders
