#include "doctest.h"

#include <cstdlib>

#include "fre2fa/errors.hpp"
#include "fre2fa/generator.hpp"
#include "fre2fa/oracle.hpp"
#include "support/oracles.hpp"

using namespace fre2fa;

namespace {

TruthValue tv(const char* s) { return parse_truth_value(s); }

const LatticeStructure goedel(StructureKind::Goedel);
const LatticeStructure product(StructureKind::Product);
const FuzzyRegex example = parse("0.2((0.1(ab)*)*+b)");

} // namespace

TEST_CASE("denotation examples")
{
    CHECK(denote(example, "b", goedel) == tv("0.2"));
    CHECK(denote(example, "", goedel) == tv("0.2"));
    CHECK(denote(example, "ab", goedel) == tv("0.1"));
    CHECK(denote(example, "ab", product) == tv("0.02"));
    CHECK(denote(example, "a", goedel) == TruthValue::zero());
    for (const auto& w : testing::all_words("ab", 4))
        CHECK(denote(FuzzyRegex::empty(), w, goedel) == TruthValue::zero());
    CHECK(denote(parse("(0.5a)*"), "", product) == TruthValue::one());
    CHECK(denote(parse("(0.5a)*"), "aaa", product) == tv("0.125"));
    CHECK(denote(parse("0.5a*"), "", product) == tv("0.5"));
    CHECK(denote(parse("0.5a+0.7a"), "a", goedel) == tv("0.7"));
    CHECK(denote(parse("(0.5a + 0.5@eps)(a+@eps)"), "a", product) == tv("0.5"));
}

TEST_CASE("star properties")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const FuzzyRegex r = generate(seed, testing::fuzz_config(3, 2));
        const FuzzyRegex s = FuzzyRegex::star(r);
        CHECK(denote(s, "", product) == TruthValue::one());
        for (const auto& w : testing::all_words("ab", 4))
            for (const auto& st : {goedel, product})
                REQUIRE(denote(r, w, st) <= denote(s, w, st));
    }
}

TEST_CASE("check_equivalence examples")
{
    const EquivalenceReport ex = check_equivalence(example, goedel, 6);
    CHECK(ex.equal());
    CHECK(ex.words_checked == 127);
    CHECK(ex.follow_states == 5);
    CHECK(ex.position_states == 6);
    CHECK(ex.positions == 5);

    const EquivalenceReport empty = check_equivalence(FuzzyRegex::empty(), goedel, 3);
    CHECK(empty.equal());
    CHECK(empty.words_checked == 1);

    const EquivalenceReport a = check_equivalence(FuzzyRegex::symbol('a'), goedel, 2);
    CHECK(a.equal());
    CHECK(a.words_checked == 3);

    CHECK(check_equivalence(example, Alphabet("abc"), product, 4).words_checked == 121);
}

TEST_CASE("budget")
{
    EquivalenceOptions opts;
    opts.budget = 100;
    CHECK_THROWS_AS(check_equivalence(example, goedel, 6, opts), BudgetExceeded);
    opts.budget = 127;
    CHECK(check_equivalence(example, goedel, 6, opts).equal());

    ::unsetenv("FRE2FA_BUDGET");
    CHECK(word_budget_from_environment() == default_word_budget);
    ::setenv("FRE2FA_BUDGET", "42", 1);
    CHECK(word_budget_from_environment() == 42);
    ::setenv("FRE2FA_BUDGET", "lots", 1);
    CHECK_THROWS_AS(word_budget_from_environment(), Error);
    ::unsetenv("FRE2FA_BUDGET");
}

TEST_CASE("empty-word consistency")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const FuzzyRegex r = generate(seed, testing::fuzz_config(5, 2));
        const auto report = check_equivalence(r, Alphabet("ab"), product, 0);
        REQUIRE(report.equal());
        REQUIRE(report.follow_states <= report.position_states);
        REQUIRE(report.position_states == report.positions + 1);
    }
}

TEST_CASE("generator")
{
    const GeneratorConfig config = testing::fuzz_config(4, 2);
    CHECK(generate(42, config) == generate(42, config));
    CHECK(render(generate(42, config)) == "b*(@eps+a)0.7(aa)");

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const FuzzyRegex leaf = generate(seed, testing::fuzz_config(1, 3));
        const auto k = leaf.kind();
        CHECK((k == FuzzyRegex::Kind::Empty || k == FuzzyRegex::Kind::Epsilon || k == FuzzyRegex::Kind::Symbol));
    }

    GeneratorConfig bad = config;
    bad.scalar_pool = {TruthValue::one()};
    CHECK_THROWS_AS(generate(1, bad), std::invalid_argument);
    bad.scalar_pool.clear();
    CHECK_THROWS_AS(generate(1, bad), std::invalid_argument);
    bad = config;
    bad.max_depth = 0;
    CHECK_THROWS_AS(generate(1, bad), std::invalid_argument);
}
