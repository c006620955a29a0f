#include "fre2fa/errors.hpp"

namespace fre2fa {

namespace {

std::string syntax_message(std::size_t position, const std::vector<std::string>& expected,
                           const std::string& found)
{
    std::string msg = "syntax error at offset " + std::to_string(position) + ": found " + found;
    if (!expected.empty()) {
        msg += ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0)
                msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
    }
    return msg;
}

} // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error(syntax_message(position, expected, found)), position_(position), expected_(std::move(expected))
{
}

UnknownSymbol::UnknownSymbol(char symbol)
    : Error(std::string("symbol '") + symbol + "' is not in the alphabet"), symbol_(symbol)
{
}

UnknownPosition::UnknownPosition(std::size_t position)
    : Error("no position " + std::to_string(position) + " in marked expression")
{
}

BudgetExceeded::BudgetExceeded(std::size_t required, std::size_t budget)
    : Error("word enumeration needs " + std::to_string(required) + " words, budget is " +
            std::to_string(budget))
{
}

} // namespace fre2fa
