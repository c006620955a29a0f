#ifndef FRE2FA_MARKED_HPP
#define FRE2FA_MARKED_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fre2fa/alphabet.hpp"
#include "fre2fa/lattice.hpp"
#include "fre2fa/regex.hpp"

namespace fre2fa {

/// A symbol of the extended alphabet: either a letter of the input
/// alphabet, or the scalar symbol introduced for one scalar occurrence
/// (identified by the position it was assigned during marking).
struct Symbol {
    char letter = 0;
    std::size_t scalar_position = 0;

    static Symbol of_letter(char c) { return Symbol{c, 0}; }
    static Symbol of_scalar(std::size_t position) { return Symbol{0, position}; }

    bool is_scalar() const noexcept { return scalar_position != 0; }
    /// `a` for letters, `y3` for the scalar at position 3.
    std::string name() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    /// Letters first (alphabetically), then scalar symbols by position.
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b)
    {
        if (a.is_scalar() != b.is_scalar())
            return a.is_scalar() ? std::strong_ordering::greater : std::strong_ordering::less;
        if (auto c = a.letter <=> b.letter; c != 0)
            return c;
        return a.scalar_position <=> b.scalar_position;
    }
};

/// Parses Symbol::name output.
Symbol parse_symbol_name(std::string_view name);

struct Position {
    std::size_t index = 0; // 1-based
    Symbol symbol;
    TruthValue phi; // 1 for letters, the scalar value for scalar symbols
};

/// Regular expression over letters and scalar symbols whose leaves are
/// numbered positions. Scale(c, r) of the source becomes Concat(y, r)
/// with y the scalar position.
class MarkedRegex {
public:
    enum class Kind { Empty, Epsilon, Position, Union, Concat, Star };

    MarkedRegex() = default;

    static MarkedRegex empty();
    static MarkedRegex epsilon();
    static MarkedRegex position(std::size_t index);
    static MarkedRegex union_of(MarkedRegex left, MarkedRegex right);
    static MarkedRegex concat(MarkedRegex left, MarkedRegex right);
    static MarkedRegex star(MarkedRegex inner);

    Kind kind() const noexcept { return kind_; }
    std::size_t index() const noexcept { return index_; }
    const MarkedRegex& inner() const { return children_.at(0); }
    const MarkedRegex& left() const { return children_.at(0); }
    const MarkedRegex& right() const { return children_.at(1); }

    friend bool operator==(const MarkedRegex&, const MarkedRegex&) = default;

private:
    MarkedRegex(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Empty;
    std::size_t index_ = 0;
    std::vector<MarkedRegex> children_;
};

/// The desugared, position-numbered expression together with the
/// homomorphism phi from positions to truth values.
struct MarkedExpression {
    MarkedRegex desugared;
    std::vector<Position> positions; // positions[i].index == i + 1
    Alphabet sigma;

    std::size_t size() const noexcept { return positions.size(); }
    /// Throws UnknownPosition.
    const Position& at(std::size_t index) const;
    /// Letters plus one scalar symbol per scalar occurrence, sorted.
    std::vector<Symbol> extended_alphabet() const;
};

/// Marks with the alphabet taken from the letters of `r`.
MarkedExpression mark(const FuzzyRegex& r);
/// Marks with a declared alphabet (a superset of the letters of `r`).
MarkedExpression mark(const FuzzyRegex& r, const Alphabet& sigma);

/// Inverse of mark.
FuzzyRegex unmark(const MarkedExpression& m);

/// Monoid product of phi along a word of positions; identity for the
/// empty word. Throws UnknownPosition.
TruthValue phi_star(const MarkedExpression& m, const LatticeStructure& structure,
                    std::span<const std::size_t> word);

/// Same, over a word of extended-alphabet symbols (letters contribute 1).
TruthValue phi_star(const MarkedExpression& m, const LatticeStructure& structure,
                    std::span<const Symbol> word);

} // namespace fre2fa

#endif
