#ifndef FRE2FA_DOCUMENT_HPP
#define FRE2FA_DOCUMENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fre2fa/fuzzy_automaton.hpp"
#include "fre2fa/glushkov.hpp"
#include "fre2fa/marked.hpp"
#include "fre2fa/oracle.hpp"

namespace fre2fa {

inline constexpr int document_format_version = 1;

struct DocumentTransition {
    State from = 0;
    std::string symbol;
    State to = 0;
    TruthValue weight;

    friend bool operator==(const DocumentTransition&, const DocumentTransition&) = default;
};

struct DocumentFinal {
    State state = 0;
    TruthValue weight;

    friend bool operator==(const DocumentFinal&, const DocumentFinal&) = default;
};

/// Serializable form of a crisp or fuzzy automaton. Weights are exact
/// value strings in JSON. Crisp documents carry weight 1 everywhere, an
/// initial state id, and the phi value of each scalar symbol.
struct AutomatonDocument {
    enum class Kind { Crisp, Fuzzy };

    int format_version = document_format_version;
    StructureKind structure = StructureKind::Goedel;
    Kind kind = Kind::Fuzzy;
    std::vector<std::string> alphabet;
    std::size_t states = 0;
    std::vector<TruthValue> initial; // full vector; crisp documents use the unit at 0
    std::vector<DocumentTransition> transitions;
    std::vector<DocumentFinal> finals;
    std::optional<std::map<State, std::vector<std::size_t>>> labels;
    std::map<std::string, TruthValue> phi;

    friend bool operator==(const AutomatonDocument&, const AutomatonDocument&) = default;
};

AutomatonDocument to_document(const CrispAutomaton& aut, const MarkedExpression& m,
                              StructureKind structure);
AutomatonDocument to_document(const FuzzyAutomaton& fa);

/// Throws DocumentError if the document is not a fuzzy automaton or is
/// inconsistent.
FuzzyAutomaton fuzzy_from_document(const AutomatonDocument& doc);

nlohmann::ordered_json to_json(const AutomatonDocument& doc);
/// Throws DocumentError.
AutomatonDocument document_from_json(const nlohmann::ordered_json& j);

/// Graphviz rendering: initial arrow, double circles for states with a
/// nonzero final weight, edges labelled `symbol/weight`, scalar edges
/// dashed.
std::string to_dot(const AutomatonDocument& doc);

nlohmann::ordered_json to_json(const EquivalenceReport& report);

} // namespace fre2fa

#endif
