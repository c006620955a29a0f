#ifndef FRE2FA_REGEX_HPP
#define FRE2FA_REGEX_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fre2fa/alphabet.hpp"
#include "fre2fa/truth_value.hpp"

namespace fre2fa {

/// Fuzzy regular expression over a letter alphabet, with scalar
/// multiplication by truth values. Immutable value type; equality is
/// structural.
class FuzzyRegex {
public:
    enum class Kind { Empty, Epsilon, Symbol, Scale, Union, Concat, Star };

    /// The empty-language expression.
    FuzzyRegex() = default;

    static FuzzyRegex empty();
    static FuzzyRegex epsilon();
    static FuzzyRegex symbol(char letter);
    static FuzzyRegex scale(TruthValue scalar, FuzzyRegex inner);
    static FuzzyRegex union_of(FuzzyRegex left, FuzzyRegex right);
    static FuzzyRegex concat(FuzzyRegex left, FuzzyRegex right);
    static FuzzyRegex star(FuzzyRegex inner);

    Kind kind() const noexcept { return kind_; }
    char letter() const noexcept { return letter_; }
    const TruthValue& scalar() const noexcept { return scalar_; }

    /// Operand of Scale and Star, left operand of Union and Concat.
    const FuzzyRegex& inner() const { return children_.at(0); }
    const FuzzyRegex& left() const { return children_.at(0); }
    const FuzzyRegex& right() const { return children_.at(1); }

    /// Letters occurring in the expression.
    Alphabet letters() const;
    /// Number of AST nodes.
    std::size_t size() const;

    friend bool operator==(const FuzzyRegex&, const FuzzyRegex&) = default;

private:
    FuzzyRegex(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Empty;
    char letter_ = 0;
    TruthValue scalar_;
    std::vector<FuzzyRegex> children_;
};

// Grammar (whitespace ignored):
//
//   union  := concat ('+' concat)*
//   concat := factor+
//   factor := NUMBER factor | base '*'*
//   base   := LETTER | '@eps' | '@null' | '(' union ')'
//
// Union and concatenation associate to the left.

/// Parses against a declared alphabet; throws SyntaxError, UnknownSymbol,
/// MalformedNumber or TooManyDigits.
FuzzyRegex parse(std::string_view text, const Alphabet& sigma);
/// Parses with the alphabet taken to be every lowercase letter.
FuzzyRegex parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(render(r)) == r.
std::string render(const FuzzyRegex& r);

/// Nested prefix notation, e.g. `scale(1/5, union(star(sym(a)), sym(b)))`.
std::string dump(const FuzzyRegex& r);

} // namespace fre2fa

#endif
