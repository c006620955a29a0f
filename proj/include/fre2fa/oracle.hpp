#ifndef FRE2FA_ORACLE_HPP
#define FRE2FA_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fre2fa/lattice.hpp"
#include "fre2fa/regex.hpp"
#include "fre2fa/semiring.hpp"

namespace fre2fa {

/// Compositional degree of `u` in the fuzzy language of `r`, by interval
/// dynamic programming over the substrings of `u`.
TruthValue denote(const FuzzyRegex& r, std::string_view u, const LatticeStructure& structure);

inline constexpr std::size_t default_word_budget = 1'000'000;

/// Reads FRE2FA_BUDGET, falling back to default_word_budget.
std::size_t word_budget_from_environment();

struct Counterexample {
    std::string word;
    TruthValue oracle;
    TruthValue follow;
    TruthValue position;
};

struct EquivalenceReport {
    FuzzyRegex expression;
    StructureKind structure = StructureKind::Goedel;
    std::size_t max_len = 0;
    std::size_t words_checked = 0;
    std::size_t positions = 0;
    std::size_t follow_states = 0;
    std::size_t position_states = 0;
    std::optional<Counterexample> counterexample; // empty: verdict equal

    bool equal() const noexcept { return !counterexample.has_value(); }
};

struct EquivalenceOptions {
    std::size_t budget = default_word_budget;
    Execution exec = Execution::Parallel;
};

/// Builds the follow-route and position-route fuzzy automata for `r` and
/// compares both against `denote` on every word of length <= max_len over
/// `sigma`. The first disagreement in shortlex order is reported. Throws
/// BudgetExceeded.
EquivalenceReport check_equivalence(const FuzzyRegex& r, const Alphabet& sigma,
                                    const LatticeStructure& structure, std::size_t max_len,
                                    const EquivalenceOptions& options = {});
/// Same, over the letters occurring in `r`.
EquivalenceReport check_equivalence(const FuzzyRegex& r, const LatticeStructure& structure,
                                    std::size_t max_len, const EquivalenceOptions& options = {});

} // namespace fre2fa

#endif
