#ifndef FRE2FA_GENERATOR_HPP
#define FRE2FA_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "fre2fa/regex.hpp"

namespace fre2fa {

struct GeneratorConfig {
    unsigned max_depth = 4;
    unsigned alphabet_size = 2; // letters 'a', 'b', ...
    std::vector<TruthValue> scalar_pool;
};

/// Deterministic random expression for a seed and config. Star and Scale
/// become less likely as the remaining depth shrinks; depth 1 yields a
/// leaf. Throws std::invalid_argument on an invalid config.
FuzzyRegex generate(std::uint64_t seed, const GeneratorConfig& config);

} // namespace fre2fa

#endif
