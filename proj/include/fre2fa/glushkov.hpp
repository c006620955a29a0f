#ifndef FRE2FA_GLUSHKOV_HPP
#define FRE2FA_GLUSHKOV_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "fre2fa/marked.hpp"

namespace fre2fa {

using PositionSet = std::set<std::size_t>;
using State = std::size_t;

struct PositionSets {
    bool nullable = false;
    PositionSet first;
    PositionSet last;
    /// Indexed by position; entry 0 is unused and stays empty.
    std::vector<PositionSet> follow;
};

PositionSets position_sets(const MarkedExpression& m);

struct Transition {
    State from = 0;
    Symbol symbol;
    State to = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Unweighted NFA over letters and scalar symbols. State 0 is initial.
/// `labels[q]` is the set of positions merged into q, with 0 standing
/// for the initial state.
struct CrispAutomaton {
    std::size_t num_states = 0;
    std::vector<Symbol> alphabet;
    std::vector<Transition> transitions; // sorted, unique
    std::set<State> finals;
    std::vector<PositionSet> labels;

    bool is_final(State q) const { return finals.contains(q); }
    friend bool operator==(const CrispAutomaton&, const CrispAutomaton&) = default;
};

/// Glushkov automaton: states {0} and the n positions; exactly n + 1 states.
CrispAutomaton build_position_automaton(const MarkedExpression& m, const PositionSets& ps);

/// Quotient by: same membership in last, same follow set. The initial
/// state takes follow = first and finality = nullable and may merge.
/// Classes are numbered with the initial class first, then by smallest
/// member position.
CrispAutomaton follow_quotient(const CrispAutomaton& position_automaton, const PositionSets& ps);

} // namespace fre2fa

#endif
