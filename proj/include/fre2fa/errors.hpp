#ifndef FRE2FA_ERRORS_HPP
#define FRE2FA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fre2fa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text is not a decimal truth value in [0, 1].
class MalformedNumber : public Error {
public:
    using Error::Error;
};

/// Decimal truth value with more than six fraction digits.
class TooManyDigits : public Error {
public:
    using Error::Error;
};

/// Expression text does not conform to the grammar. `position` is a
/// zero-based byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// A letter (in an expression or a word) outside the declared alphabet.
class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(char symbol);
    char symbol() const noexcept { return symbol_; }

private:
    char symbol_;
};

class UnknownPosition : public Error {
public:
    explicit UnknownPosition(std::size_t position);
};

/// Word enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t required, std::size_t budget);
};

class StructureNotIntegral : public Error {
public:
    using Error::Error;
};

/// Malformed automaton document (JSON import).
class DocumentError : public Error {
public:
    using Error::Error;
};

} // namespace fre2fa

#endif
