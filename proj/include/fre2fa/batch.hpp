#ifndef FRE2FA_BATCH_HPP
#define FRE2FA_BATCH_HPP

#include <vector>

#include "fre2fa/fuzzy_automaton.hpp"
#include "fre2fa/regex.hpp"
#include "fre2fa/words.hpp"

namespace fre2fa {

// Whole-language kernels: one value per word of a WordIndex, indexed by
// word id. The serial versions call eval_word / denote once per word and
// are the reference; the parallel versions share work between words
// (prefix reach vectors, substring tables) and split each level across
// OpenMP threads.

std::vector<TruthValue> evaluate_words(const FuzzyAutomaton& fa, const WordIndex& words,
                                       Execution exec);

std::vector<TruthValue> denote_words(const FuzzyRegex& r, const LatticeStructure& structure,
                                     const WordIndex& words, Execution exec);

} // namespace fre2fa

#endif
