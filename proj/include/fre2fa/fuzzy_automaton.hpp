#ifndef FRE2FA_FUZZY_AUTOMATON_HPP
#define FRE2FA_FUZZY_AUTOMATON_HPP

#include <set>
#include <string_view>
#include <vector>

#include "fre2fa/alphabet.hpp"
#include "fre2fa/glushkov.hpp"
#include "fre2fa/semiring.hpp"

namespace fre2fa {

/// Fuzzy automaton over an integral lattice-ordered monoid: one k x k
/// transition matrix per input symbol, a fuzzy initial vector and a fuzzy
/// final vector.
struct FuzzyAutomaton {
    LatticeStructure structure;
    Alphabet alphabet;
    std::vector<TruthMatrix> delta; // delta[alphabet.index_of(c)]
    TruthVector sigma;
    TruthVector tau;

    std::size_t num_states() const noexcept { return sigma.size(); }
    /// Throws UnknownSymbol.
    const TruthMatrix& transitions(char symbol) const;

    friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&) = default;
};

/// Join over scalar-only paths of the product of their phi values,
/// including the empty path.
struct ScalarClosure {
    TruthMatrix matrix;
};

ScalarClosure scalar_closure(const CrispAutomaton& aut, const MarkedExpression& m,
                             const LatticeStructure& structure, Execution exec = Execution::Serial);

using SymbolWord = std::vector<Symbol>;

/// Subword-minimal words y1...yk a labelling a path i -> j made of
/// scalar-only edges without repeated states, followed by one `a` edge.
/// Brute-force counterpart of scalar_closure.
std::set<SymbolWord> minimal_words(const CrispAutomaton& aut, State i, char a, State j);

/// Scattered-subword (embedding) order: u can be obtained from v by
/// deleting symbols.
bool embeds(const SymbolWord& u, const SymbolWord& v);

/// Eliminates scalar symbols: delta_a = C (x) E_a, tau = C (x) chi_F,
/// sigma = unit vector at state 0.
FuzzyAutomaton fuzzify(const CrispAutomaton& aut, const MarkedExpression& m,
                       const LatticeStructure& structure, Execution exec = Execution::Serial);

/// Degree vector over states after reading `word` from sigma. Throws
/// UnknownSymbol.
TruthVector reach(const FuzzyAutomaton& fa, std::string_view word);

/// Degree to which `word` belongs to the automaton's language.
TruthValue eval_word(const FuzzyAutomaton& fa, std::string_view word);

} // namespace fre2fa

#endif
