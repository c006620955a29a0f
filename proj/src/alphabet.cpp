#include "fre2fa/alphabet.hpp"

#include <algorithm>

namespace fre2fa {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols)
{
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

std::optional<std::size_t> Alphabet::index_of(char c) const noexcept
{
    const auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c)
        return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

} // namespace fre2fa
