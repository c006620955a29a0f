// Serial reference vs OpenMP kernels. Argument 0 = serial, 1 = parallel.

#include <random>

#include <benchmark/benchmark.h>

#include "fre2fa/batch.hpp"
#include "fre2fa/fuzzy_automaton.hpp"
#include "fre2fa/generator.hpp"
#include "fre2fa/glushkov.hpp"
#include "fre2fa/marked.hpp"
#include "fre2fa/semiring.hpp"
#include "fre2fa/words.hpp"

using namespace fre2fa;

namespace {

Execution execution(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

TruthMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    TruthMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 4 == 0)
                m(i, j) = TruthValue::ratio(static_cast<std::int64_t>(1 + rng() % 99), 100);
    return m;
}

const LatticeStructure product(StructureKind::Product);

const FuzzyRegex& sample_regex()
{
    static const FuzzyRegex r = parse("0.2((0.1(ab)*)*+b)(0.5a+0.7(ba)*b)*");
    return r;
}

const FuzzyAutomaton& sample_automaton()
{
    static const FuzzyAutomaton fa = [] {
        const MarkedExpression m = mark(sample_regex(), Alphabet("ab"));
        const PositionSets ps = position_sets(m);
        return fuzzify(follow_quotient(build_position_automaton(m, ps), ps), m, product);
    }();
    return fa;
}

void BM_Multiply(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(1));
    const TruthMatrix a = random_matrix(n, 1);
    const TruthMatrix b = random_matrix(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(product, a, b, execution(state)));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{0, 1}, {16, 48}});

void BM_StarClosure(benchmark::State& state)
{
    const TruthMatrix a = random_matrix(static_cast<std::size_t>(state.range(1)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(star_closure(product, a, execution(state)));
}
BENCHMARK(BM_StarClosure)->ArgsProduct({{0, 1}, {16, 32}});

void BM_EvaluateWords(benchmark::State& state)
{
    const WordIndex words(Alphabet("ab"), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_words(sample_automaton(), words, execution(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_EvaluateWords)->ArgsProduct({{0, 1}, {8, 12}});

void BM_DenoteWords(benchmark::State& state)
{
    const WordIndex words(Alphabet("ab"), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(denote_words(sample_regex(), product, words, execution(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_DenoteWords)->ArgsProduct({{0, 1}, {6, 8}});

} // namespace

BENCHMARK_MAIN();
