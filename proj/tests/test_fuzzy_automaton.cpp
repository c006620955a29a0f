#include "doctest.h"

#include <algorithm>
#include <random>

#include "fre2fa/errors.hpp"
#include "fre2fa/fuzzy_automaton.hpp"
#include "fre2fa/generator.hpp"
#include "support/oracles.hpp"

using namespace fre2fa;

namespace {

TruthValue tv(const char* s) { return parse_truth_value(s); }

const LatticeStructure goedel(StructureKind::Goedel);
const LatticeStructure product(StructureKind::Product);

struct Built {
    MarkedExpression m;
    PositionSets ps;
    CrispAutomaton pos;
    CrispAutomaton fol;
};

Built build(const FuzzyRegex& r)
{
    Built b{mark(r), {}, {}, {}};
    b.ps = position_sets(b.m);
    b.pos = build_position_automaton(b.m, b.ps);
    b.fol = follow_quotient(b.pos, b.ps);
    return b;
}

const Built example = build(parse("0.2((0.1(ab)*)*+b)"));

TruthValue join_over(const MarkedExpression& m, const LatticeStructure& s, const std::set<SymbolWord>& words)
{
    TruthValue acc;
    for (const auto& w : words)
        acc = s.join(acc, phi_star(m, s, w));
    return acc;
}

} // namespace

TEST_CASE("scalar closure of the worked example")
{
    const TruthMatrix c = scalar_closure(example.fol, example.m, goedel).matrix;
    for (State i = 0; i < 5; ++i)
        for (State j = 0; j < 5; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            TruthValue expected;
            if (i == j)
                expected = TruthValue::one();
            else if (i == 0 && j == 1)
                expected = tv("0.2");
            else if ((i == 0 || i == 1) && j == 2)
                expected = tv("0.1");
            CHECK(c(i, j) == expected);
        }
}

TEST_CASE("scalar closure edge cases")
{
    const Built ab = build(parse("ab*"));
    CHECK(scalar_closure(ab.pos, ab.m, goedel).matrix == TruthMatrix::identity(3));

    const MarkedExpression m = mark(parse("0.3a+0.5a"));
    CrispAutomaton parallel;
    parallel.num_states = 2;
    parallel.transitions = {{0, Symbol::of_scalar(1), 1}, {0, Symbol::of_scalar(3), 1}};
    parallel.labels = {{0}, {1}};
    CHECK(scalar_closure(parallel, m, goedel).matrix(0, 1) == tv("0.5"));
    CHECK(scalar_closure(parallel, m, product).matrix(0, 1) == tv("0.5"));
}

TEST_CASE("closure invariants on generated automata")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Built b = build(generate(seed, testing::fuzz_config(5, 2)));
        for (const auto& s : {goedel, product}) {
            const TruthMatrix c = scalar_closure(b.fol, b.m, s).matrix;
            REQUIRE(c == scalar_closure(b.fol, b.m, s, Execution::Parallel).matrix);
            const std::size_t k = c.rows();
            for (State i = 0; i < k; ++i) {
                REQUIRE(c(i, i) == TruthValue::one());
                for (State j = 0; j < k; ++j)
                    for (State x = 0; x < k; ++x)
                        REQUIRE(s.tensor(c(i, x), c(x, j)) <= c(i, j));
            }
        }
    }
}

TEST_CASE("minimal words of the worked example")
{
    const CrispAutomaton& f = example.fol;
    const SymbolWord lambda_mu_a{Symbol::of_scalar(1), Symbol::of_scalar(2), Symbol::of_letter('a')};
    CHECK(minimal_words(f, 0, 'a', 3) == std::set<SymbolWord>{lambda_mu_a});
    CHECK(minimal_words(f, 1, 'a', 3) == std::set<SymbolWord>{{Symbol::of_scalar(2), Symbol::of_letter('a')}});
    CHECK(minimal_words(f, 2, 'a', 3) == std::set<SymbolWord>{{Symbol::of_letter('a')}});
    CHECK(minimal_words(f, 0, 'b', 4) == std::set<SymbolWord>{{Symbol::of_scalar(1), Symbol::of_letter('b')}});
    CHECK(minimal_words(f, 1, 'b', 4) == std::set<SymbolWord>{{Symbol::of_letter('b')}});
    // The follow sets make class {a3} -> b -> class {mu2, b4} scalar-free.
    CHECK(minimal_words(f, 3, 'b', 2) == std::set<SymbolWord>{{Symbol::of_letter('b')}});
    CHECK(minimal_words(f, 4, 'a', 3).empty());
    CHECK(minimal_words(f, 0, 'a', 4).empty());
}

TEST_CASE("embedding order")
{
    const Symbol x = Symbol::of_scalar(1);
    const Symbol y = Symbol::of_scalar(2);
    const Symbol a = Symbol::of_letter('a');
    CHECK(embeds({}, {x, a}));
    CHECK(embeds({x, a}, {x, y, a}));
    CHECK_FALSE(embeds({y, x}, {x, y}));
    CHECK_FALSE(embeds({x, y, a}, {x, a}));
}

TEST_CASE("superword domination")
{
    // u <= v in the embedding order implies phi*(v) <= phi*(u).
    const MarkedExpression m = mark(parse("0.2(0.5a + 0.7(0.9b)*)"));
    std::vector<Symbol> scalars;
    for (const auto& p : m.positions)
        if (p.symbol.is_scalar())
            scalars.push_back(p.symbol);
    std::mt19937_64 rng(11);
    for (const auto& s : {goedel, product, LatticeStructure(StructureKind::Boolean)}) {
        for (int k = 0; k < 500; ++k) {
            SymbolWord v;
            for (std::size_t len = rng() % 7; len > 0; --len)
                v.push_back(scalars[rng() % scalars.size()]);
            SymbolWord u;
            for (const Symbol& sym : v)
                if (rng() % 2)
                    u.push_back(sym);
            REQUIRE(embeds(u, v));
            REQUIRE(phi_star(m, s, v) <= phi_star(m, s, u));
        }
    }
}

TEST_CASE("fuzzify the worked example")
{
    const FuzzyAutomaton fa = fuzzify(example.fol, example.m, goedel);
    REQUIRE(fa.num_states() == 5);
    CHECK(fa.alphabet == Alphabet("ab"));
    CHECK(fa.sigma == TruthVector{tv("1"), tv("0"), tv("0"), tv("0"), tv("0")});
    CHECK(fa.tau == TruthVector{tv("0.2"), tv("1"), tv("1"), tv("0"), tv("1")});
    const TruthMatrix& da = fa.transitions('a');
    const TruthMatrix& db = fa.transitions('b');
    CHECK(da(0, 3) == tv("0.1"));
    CHECK(da(1, 3) == tv("0.1"));
    CHECK(da(2, 3) == tv("1"));
    CHECK(db(0, 4) == tv("0.2"));
    CHECK(db(1, 4) == tv("1"));
    CHECK(db(3, 2) == tv("1"));
    CHECK_THROWS_AS((void)fa.transitions('c'), UnknownSymbol);

    const FuzzyAutomaton fp = fuzzify(example.pos, example.m, goedel);
    CHECK(fp.num_states() == 6);
}

TEST_CASE("fuzzify without scalars is the crisp automaton")
{
    const Built b = build(parse("(ab+b)*a"));
    const FuzzyAutomaton fa = fuzzify(b.pos, b.m, product);
    for (std::size_t a = 0; a < fa.alphabet.size(); ++a)
        for (State i = 0; i < fa.num_states(); ++i)
            for (State j = 0; j < fa.num_states(); ++j) {
                const bool edge = std::find(b.pos.transitions.begin(), b.pos.transitions.end(),
                                            Transition{i, Symbol::of_letter(fa.alphabet[a]), j}) !=
                                  b.pos.transitions.end();
                REQUIRE(fa.delta[a](i, j) == (edge ? TruthValue::one() : TruthValue::zero()));
            }
    for (State q = 0; q < fa.num_states(); ++q)
        CHECK(fa.tau[q] == (b.pos.is_final(q) ? TruthValue::one() : TruthValue::zero()));
}

TEST_CASE("closure agrees with the join over minimal words")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Built b = build(generate(seed, testing::fuzz_config(5, 3)));
        for (const CrispAutomaton* aut : {&b.pos, &b.fol}) {
            if (aut->num_states > 8)
                continue;
            for (const auto& s : {goedel, product}) {
                const FuzzyAutomaton fa = fuzzify(*aut, b.m, s);
                for (std::size_t a = 0; a < fa.alphabet.size(); ++a)
                    for (State i = 0; i < aut->num_states; ++i)
                        for (State j = 0; j < aut->num_states; ++j)
                            REQUIRE(fa.delta[a](i, j) ==
                                    join_over(b.m, s, minimal_words(*aut, i, fa.alphabet[a], j)));
            }
        }
    }
}

TEST_CASE("example automaton with two states")
{
    FuzzyAutomaton fa{goedel, Alphabet("01"), {TruthMatrix(2, 2), TruthMatrix(2, 2)}, {tv("1"), tv("0")},
                      {tv("0"), tv("1")}};
    fa.delta[1](0, 0) = tv("0.1");
    fa.delta[0](0, 1) = tv("0.2");
    fa.delta[0](1, 1) = tv("0.2");
    CHECK(reach(fa, "") == TruthVector{tv("1"), tv("0")});
    CHECK(reach(fa, "10")[1] == tv("0.1"));
    CHECK(reach(fa, "100")[1] == tv("0.1"));
    CHECK(eval_word(fa, "10") == tv("0.1"));
    CHECK_THROWS_AS(eval_word(fa, "2"), UnknownSymbol);
}

TEST_CASE("evaluation")
{
    const FuzzyAutomaton fa = fuzzify(example.fol, example.m, goedel);
    CHECK(eval_word(fa, "") == tv("0.2"));
    CHECK(eval_word(fa, "b") == tv("0.2"));
    CHECK(eval_word(fa, "ab") == tv("0.1"));

    FuzzyAutomaton dead = fa;
    dead.delta[0] = TruthMatrix(5, 5);
    CHECK(eval_word(dead, "a") == TruthValue::zero());
}

TEST_CASE("matrix evaluation matches the recursive definition")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
        const auto& s = k % 2 ? product : goedel;
        const FuzzyAutomaton fa = testing::random_automaton(rng, s, 1 + rng() % 4, "ab");
        for (const auto& w : testing::all_words("ab", 5))
            REQUIRE(eval_word(fa, w) == testing::language_by_definition(fa, w));
        // Linearity: reading uv is reading u, then v from the reached vector.
        for (const auto& u : testing::all_words("ab", 2))
            for (const auto& v : testing::all_words("ab", 2)) {
                TruthVector r = reach(fa, u);
                for (char c : v)
                    r = multiply(s, r, fa.transitions(c));
                REQUIRE(dot(s, r, fa.tau) == eval_word(fa, u + v));
            }
    }
}
