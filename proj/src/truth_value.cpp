#include "fre2fa/truth_value.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "fre2fa/errors.hpp"

namespace fre2fa {

namespace {

constexpr std::size_t max_fraction_digits = 6;

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// "ddd" or "ddd.ddd" to a rational; caller validates the shape.
mpq_class decimal_to_rational(std::string_view integral, std::string_view fraction)
{
    mpz_class denominator = 1;
    for (std::size_t i = 0; i < fraction.size(); ++i)
        denominator *= 10;
    mpq_class q(mpz_class(std::string(integral) + std::string(fraction), 10), denominator);
    q.canonicalize();
    return q;
}

} // namespace

TruthValue::TruthValue(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
    if (sgn(value_) < 0 || cmp(value_, 1) > 0)
        throw MalformedNumber("truth value " + value_.get_str() + " outside [0, 1]");
}

TruthValue TruthValue::ratio(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw MalformedNumber("zero denominator");
    return TruthValue(mpq_class(mpz_class(std::to_string(numerator), 10), mpz_class(std::to_string(denominator), 10)));
}

TruthValue TruthValue::one()
{
    TruthValue v;
    v.value_ = 1;
    return v;
}

std::string TruthValue::to_ratio_string() const
{
    return value_.get_str();
}

std::string TruthValue::to_string() const
{
    mpz_class den = value_.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return to_ratio_string();

    const unsigned digits = std::max(twos, fives);
    if (digits == 0)
        return value_.get_num().get_str();

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const mpz_class scaled = value_.get_num() * (scale / value_.get_den());
    std::string s = scaled.get_str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, 1, '.');
    return s;
}

TruthValue parse_truth_value(std::string_view text)
{
    if (text == "0")
        return TruthValue::zero();
    if (text == "1")
        return TruthValue::one();
    if (text.size() < 3 || text.substr(0, 2) != "0." || !all_digits(text.substr(2)))
        throw MalformedNumber("malformed truth value '" + std::string(text) + "'");
    const std::string_view fraction = text.substr(2);
    if (fraction.size() > max_fraction_digits)
        throw TooManyDigits("truth value '" + std::string(text) + "' has more than " +
                            std::to_string(max_fraction_digits) + " fraction digits");
    return TruthValue(decimal_to_rational("0", fraction));
}

TruthValue parse_exact_value(std::string_view text)
{
    const auto bad = [&] { return MalformedNumber("malformed exact value '" + std::string(text) + "'"); };
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw bad();
        const mpz_class d(std::string{den}, 10);
        if (d == 0)
            throw bad();
        return TruthValue(mpq_class(mpz_class(std::string{num}, 10), d));
    }
    const auto dot = text.find('.');
    const auto integral = text.substr(0, dot);
    const auto fraction = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!all_digits(integral) || (dot != std::string_view::npos && !all_digits(fraction)))
        throw bad();
    return TruthValue(decimal_to_rational(integral, fraction));
}

std::ostream& operator<<(std::ostream& os, const TruthValue& v)
{
    return os << v.to_string();
}

} // namespace fre2fa
