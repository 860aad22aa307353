#pragma once

#include <string>
#include <string_view>

#include "staterep/env/types.hpp"

namespace staterep::encoders {

enum class Granularity { LongForm, Summary };

// Observation text formats. Hanoi supports NaturalLanguage, TaggedList,
// Matrix and DictList; Messenger supports NaturalLanguage,
// NaturalLanguagePos, Coordinates and Symbolic; the grid tasks are
// NaturalLanguage only.
enum class Structure {
    NaturalLanguage,
    TaggedList,
    Matrix,
    DictList,
    NaturalLanguagePos,
    Coordinates,
    Symbolic,
};

enum class Grounding { TextOnly, TextPlusImage, TextPlusVoT };

std::string to_string(Granularity g);
std::string to_string(Structure s);
std::string to_string(Grounding g);
Granularity granularity_from_string(std::string_view s);
Structure structure_from_string(std::string_view s);
Grounding grounding_from_string(std::string_view s);

// One point in the representation design space. oracle_summary swaps the
// LLM summariser for the programmatic Hanoi summary; oracle_vot injects the
// programmatic ground-truth map into the VoT prompt.
struct RepresentationSpec {
    Granularity granularity = Granularity::LongForm;
    Structure structure = Structure::NaturalLanguage;
    Grounding grounding = Grounding::TextOnly;
    bool oracle_summary = false;
    bool oracle_vot = false;

    std::string label() const;

    friend bool operator==(const RepresentationSpec&, const RepresentationSpec&) = default;
};

bool structure_valid_for(Structure s, env::Family family);

// Throws Config when the spec is not valid for the environment family
// (structure mismatch, oracle flags without their prerequisites).
void validate_representation(const RepresentationSpec& spec, env::Family family);

struct EncodedObservation {
    std::string text;
    std::vector<unsigned char> image_png;  // non-empty iff grounding == TextPlusImage
    Structure format_label = Structure::NaturalLanguage;
};

}  // namespace staterep::encoders
