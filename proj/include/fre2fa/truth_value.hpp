#ifndef FRE2FA_TRUTH_VALUE_HPP
#define FRE2FA_TRUTH_VALUE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fre2fa {

/// An exact rational degree of membership in [0, 1], kept in lowest terms.
/// Equality is structural on the canonical fraction.
class TruthValue {
public:
    TruthValue() = default;

    /// Throws MalformedNumber unless 0 <= value <= 1.
    explicit TruthValue(mpq_class value);
    static TruthValue ratio(std::int64_t numerator, std::int64_t denominator);

    static TruthValue zero() { return TruthValue(); }
    static TruthValue one();

    const mpq_class& rational() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return cmp(value_, 1) == 0; }

    /// Shortest exact decimal when one exists (denominator of the form
    /// 2^a 5^b), otherwise `p/q`.
    std::string to_string() const;
    /// Always `p/q` (or `0`, `1`).
    std::string to_ratio_string() const;

    friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// Parses the expression-grammar form: `0`, `1`, or `0.` followed by one
/// to six digits. Throws MalformedNumber or TooManyDigits.
TruthValue parse_truth_value(std::string_view text);

/// Parses any rendering produced by TruthValue::to_string or
/// to_ratio_string (arbitrary-length decimals and `p/q`). Used when
/// re-importing documents.
TruthValue parse_exact_value(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TruthValue& v);

} // namespace fre2fa

#endif
