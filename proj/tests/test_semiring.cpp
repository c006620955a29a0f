#include "doctest.h"

#include <random>

#include "fre2fa/semiring.hpp"
#include "support/oracles.hpp"

using namespace fre2fa;

namespace {

TruthMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    TruthMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = testing::random_sparse_value(rng);
    return m;
}

} // namespace

TEST_CASE("matrix product")
{
    const LatticeStructure goedel(StructureKind::Goedel);
    TruthMatrix a(1, 2);
    TruthMatrix b(2, 1);
    a(0, 0) = parse_truth_value("0.2");
    a(0, 1) = parse_truth_value("0.9");
    b(0, 0) = parse_truth_value("1");
    b(1, 0) = parse_truth_value("0.5");
    CHECK(multiply(goedel, a, b)(0, 0) == parse_truth_value("0.5"));
    CHECK(multiply(LatticeStructure(StructureKind::Product), a, b)(0, 0) == parse_truth_value("0.45"));
    CHECK_THROWS_AS(multiply(goedel, a, a), std::invalid_argument);
}

TEST_CASE("serial and parallel products agree")
{
    std::mt19937_64 rng(3);
    for (const auto kind : {StructureKind::Goedel, StructureKind::Product}) {
        const LatticeStructure s(kind);
        for (std::size_t n : {1u, 3u, 8u, 24u}) {
            const TruthMatrix a = random_matrix(rng, n, n);
            const TruthMatrix b = random_matrix(rng, n, n);
            CHECK(multiply(s, a, b, Execution::Serial) == multiply(s, a, b, Execution::Parallel));
            CHECK(star_closure(s, a, Execution::Serial) == star_closure(s, a, Execution::Parallel));
        }
    }
}

TEST_CASE("closure is the join of all powers")
{
    std::mt19937_64 rng(9);
    for (const auto kind : {StructureKind::Goedel, StructureKind::Product}) {
        const LatticeStructure s(kind);
        for (int k = 0; k < 20; ++k) {
            const std::size_t n = 1 + rng() % 5;
            const TruthMatrix a = random_matrix(rng, n, n);
            // Simple paths have fewer than n edges; longer ones are dominated.
            TruthMatrix expected = TruthMatrix::identity(n);
            TruthMatrix power = TruthMatrix::identity(n);
            for (std::size_t p = 1; p <= n; ++p) {
                power = multiply(s, power, a);
                expected = join(expected, power);
            }
            CHECK(star_closure(s, a) == expected);
        }
    }
}
