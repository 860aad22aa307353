#include "staterep/encoders/representation.hpp"

#include "staterep/core/error.hpp"

namespace staterep::encoders {

std::string to_string(Granularity g) {
    return g == Granularity::LongForm ? "LongForm" : "Summary";
}

std::string to_string(Structure s) {
    switch (s) {
        case Structure::NaturalLanguage: return "NaturalLanguage";
        case Structure::TaggedList: return "TaggedList";
        case Structure::Matrix: return "Matrix";
        case Structure::DictList: return "DictList";
        case Structure::NaturalLanguagePos: return "NaturalLanguagePos";
        case Structure::Coordinates: return "Coordinates";
        case Structure::Symbolic: return "Symbolic";
    }
    return "NaturalLanguage";
}

std::string to_string(Grounding g) {
    switch (g) {
        case Grounding::TextOnly: return "TextOnly";
        case Grounding::TextPlusImage: return "TextPlusImage";
        case Grounding::TextPlusVoT: return "TextPlusVoT";
    }
    return "TextOnly";
}

Granularity granularity_from_string(std::string_view s) {
    if (s == "LongForm") return Granularity::LongForm;
    if (s == "Summary") return Granularity::Summary;
    throw config_error("unknown granularity: " + std::string(s));
}

Structure structure_from_string(std::string_view s) {
    for (Structure v : {Structure::NaturalLanguage, Structure::TaggedList, Structure::Matrix,
                        Structure::DictList, Structure::NaturalLanguagePos, Structure::Coordinates,
                        Structure::Symbolic}) {
        if (to_string(v) == s) return v;
    }
    throw config_error("unknown structure: " + std::string(s));
}

Grounding grounding_from_string(std::string_view s) {
    for (Grounding v : {Grounding::TextOnly, Grounding::TextPlusImage, Grounding::TextPlusVoT}) {
        if (to_string(v) == s) return v;
    }
    throw config_error("unknown grounding: " + std::string(s));
}

std::string RepresentationSpec::label() const {
    std::string out = to_string(granularity) + "-" + to_string(structure) + "-" +
                      to_string(grounding);
    if (oracle_summary) out += "+OracleSummary";
    if (oracle_vot) out += "+OracleVoT";
    return out;
}

bool structure_valid_for(Structure s, env::Family family) {
    switch (family) {
        case env::Family::Hanoi:
            return s == Structure::NaturalLanguage || s == Structure::TaggedList ||
                   s == Structure::Matrix || s == Structure::DictList;
        case env::Family::Messenger:
            return s == Structure::NaturalLanguage || s == Structure::NaturalLanguagePos ||
                   s == Structure::Coordinates || s == Structure::Symbolic;
        case env::Family::Grid:
            return s == Structure::NaturalLanguage;
    }
    return false;
}

void validate_representation(const RepresentationSpec& spec, env::Family family) {
    if (!structure_valid_for(spec.structure, family)) {
        throw config_error("structure " + to_string(spec.structure) +
                           " is not valid for this environment family");
    }
    if (spec.oracle_summary) {
        if (spec.granularity != Granularity::Summary) {
            throw config_error("oracle_summary requires granularity Summary");
        }
        if (family != env::Family::Hanoi) {
            throw config_error("oracle_summary is only available for hanoi");
        }
    }
    if (spec.oracle_vot && spec.grounding != Grounding::TextPlusVoT) {
        throw config_error("oracle_vot requires grounding TextPlusVoT");
    }
}

}  // namespace staterep::encoders
