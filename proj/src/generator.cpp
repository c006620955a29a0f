#include "fre2fa/generator.hpp"

#include <random>
#include <stdexcept>

namespace fre2fa {

namespace {

class Generator {
public:
    Generator(std::uint64_t seed, const GeneratorConfig& config) : rng_(seed), config_(config) {}

    FuzzyRegex expression(unsigned depth)
    {
        if (depth <= 1)
            return leaf();
        // Star and Scale weights decay with the remaining depth.
        const unsigned decaying = depth - 1;
        const unsigned weights[] = {2, 3, 4, decaying, decaying};
        switch (pick_weighted(weights)) {
        case 0: return leaf();
        case 1: {
            FuzzyRegex left = expression(depth - 1);
            return FuzzyRegex::union_of(std::move(left), expression(depth - 1));
        }
        case 2: {
            FuzzyRegex left = expression(depth - 1);
            return FuzzyRegex::concat(std::move(left), expression(depth - 1));
        }
        case 3: return FuzzyRegex::star(expression(depth - 1));
        default: {
            TruthValue scalar = config_.scalar_pool[pick(config_.scalar_pool.size())];
            return FuzzyRegex::scale(std::move(scalar), expression(depth - 1));
        }
        }
    }

private:
    FuzzyRegex leaf()
    {
        const unsigned weights[] = {1, 2, 12};
        switch (pick_weighted(weights)) {
        case 0: return FuzzyRegex::empty();
        case 1: return FuzzyRegex::epsilon();
        default: return FuzzyRegex::symbol(static_cast<char>('a' + pick(config_.alphabet_size)));
        }
    }

    // Plain modulo reduction keeps sequences identical across standard
    // libraries (distribution algorithms are implementation-defined).
    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    template <std::size_t N>
    std::size_t pick_weighted(const unsigned (&weights)[N])
    {
        unsigned total = 0;
        for (unsigned w : weights)
            total += w;
        std::size_t x = pick(total);
        for (std::size_t i = 0; i < N; ++i) {
            if (x < weights[i])
                return i;
            x -= weights[i];
        }
        return N - 1;
    }

    std::mt19937_64 rng_;
    const GeneratorConfig& config_;
};

} // namespace

FuzzyRegex generate(std::uint64_t seed, const GeneratorConfig& config)
{
    if (config.max_depth < 1)
        throw std::invalid_argument("max_depth must be at least 1");
    if (config.alphabet_size < 1 || config.alphabet_size > 26)
        throw std::invalid_argument("alphabet_size must be in 1..26");
    if (config.scalar_pool.empty())
        throw std::invalid_argument("scalar pool is empty");
    for (const auto& v : config.scalar_pool)
        if (v.is_zero() || v.is_one())
            throw std::invalid_argument("scalar pool values must lie strictly between 0 and 1");
    return Generator(seed, config).expression(config.max_depth);
}

} // namespace fre2fa
