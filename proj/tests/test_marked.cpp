#include "doctest.h"

#include <vector>

#include "fre2fa/errors.hpp"
#include "fre2fa/generator.hpp"
#include "fre2fa/marked.hpp"
#include "support/oracles.hpp"

using namespace fre2fa;

namespace {

TruthValue tv(const char* s) { return parse_truth_value(s); }

const LatticeStructure goedel(StructureKind::Goedel);
const LatticeStructure product(StructureKind::Product);

} // namespace

TEST_CASE("marking the worked example")
{
    const MarkedExpression m = mark(parse("0.2((0.1(ab)*)*+b)"));
    REQUIRE(m.size() == 5);
    const std::vector<Symbol> symbols{Symbol::of_scalar(1), Symbol::of_scalar(2), Symbol::of_letter('a'),
                                      Symbol::of_letter('b'), Symbol::of_letter('b')};
    const std::vector<TruthValue> phi{tv("0.2"), tv("0.1"), tv("1"), tv("1"), tv("1")};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(m.positions[i].index == i + 1);
        CHECK(m.positions[i].symbol == symbols[i]);
        CHECK(m.positions[i].phi == phi[i]);
    }
    CHECK(m.sigma == Alphabet("ab"));
    CHECK(m.at(2).symbol.name() == "y2");
    CHECK_THROWS_AS(m.at(6), UnknownPosition);
    CHECK_THROWS_AS(m.at(0), UnknownPosition);

    using M = MarkedRegex;
    const M expected = M::concat(
        M::position(1),
        M::union_of(M::star(M::concat(M::position(2), M::star(M::concat(M::position(3), M::position(4))))),
                    M::position(5)));
    CHECK(m.desugared == expected);

    const auto ext = m.extended_alphabet();
    REQUIRE(ext.size() == 4);
    CHECK(ext[0].name() == "a");
    CHECK(ext[1].name() == "b");
    CHECK(ext[2].name() == "y1");
    CHECK(ext[3].name() == "y2");
}

TEST_CASE("marking leaves")
{
    const MarkedExpression a = mark(FuzzyRegex::symbol('a'));
    REQUIRE(a.size() == 1);
    CHECK(a.positions[0].phi == TruthValue::one());
    CHECK(mark(FuzzyRegex::empty()).positions.empty());
    CHECK(mark(FuzzyRegex::epsilon()).positions.empty());
    CHECK(mark(parse("ab"), Alphabet("abc")).sigma == Alphabet("abc"));
    CHECK_THROWS_AS(mark(parse("ab"), Alphabet("a")), UnknownSymbol);
}

TEST_CASE("symbol names")
{
    CHECK(parse_symbol_name("a") == Symbol::of_letter('a'));
    CHECK(parse_symbol_name("y") == Symbol::of_letter('y'));
    CHECK(parse_symbol_name("y12") == Symbol::of_scalar(12));
    CHECK_THROWS_AS(parse_symbol_name("y0"), Error);
    CHECK_THROWS_AS(parse_symbol_name("ab"), Error);
}

TEST_CASE("phi_star")
{
    const MarkedExpression m = mark(parse("0.2((0.1(ab)*)*+b)"));
    const std::vector<std::size_t> lambda_mu_a{1, 2, 3};
    const std::vector<std::size_t> lambda_mu{1, 2};
    CHECK(phi_star(m, goedel, lambda_mu_a) == tv("0.1"));
    CHECK(phi_star(m, goedel, std::vector<std::size_t>{}) == TruthValue::one());
    CHECK(phi_star(m, product, lambda_mu) == tv("0.02"));
    CHECK_THROWS_AS(phi_star(m, goedel, std::vector<std::size_t>{7}), UnknownPosition);

    const std::vector<Symbol> word{Symbol::of_scalar(1), Symbol::of_scalar(2), Symbol::of_letter('a')};
    CHECK(phi_star(m, product, word) == tv("0.02"));
}

TEST_CASE("marking is a bijection and unmark inverts it")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const FuzzyRegex r = generate(seed, testing::fuzz_config(5, 3));
        const MarkedExpression m = mark(r);
        CAPTURE(render(r));
        REQUIRE(unmark(m) == r);

        std::size_t letters = 0;
        std::size_t scalars = 0;
        auto count = [&](const FuzzyRegex& e, auto& self) -> void {
            if (e.kind() == FuzzyRegex::Kind::Symbol)
                ++letters;
            if (e.kind() == FuzzyRegex::Kind::Scale)
                ++scalars;
            if (e.kind() == FuzzyRegex::Kind::Scale || e.kind() == FuzzyRegex::Kind::Star)
                self(e.inner(), self);
            if (e.kind() == FuzzyRegex::Kind::Union || e.kind() == FuzzyRegex::Kind::Concat) {
                self(e.left(), self);
                self(e.right(), self);
            }
        };
        count(r, count);
        REQUIRE(m.size() == letters + scalars);
        for (std::size_t i = 0; i < m.size(); ++i) {
            REQUIRE(m.positions[i].index == i + 1);
            if (m.positions[i].symbol.is_scalar()) {
                REQUIRE(m.positions[i].symbol.scalar_position == i + 1);
                REQUIRE(m.positions[i].phi < TruthValue::one());
            } else {
                REQUIRE(m.positions[i].phi == TruthValue::one());
            }
        }
    }
}
