#ifndef FRE2FA_ALPHABET_HPP
#define FRE2FA_ALPHABET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace fre2fa {

/// Finite ordered set of single-character input symbols. Kept sorted and
/// duplicate-free; `index_of` gives the symbol's rank, which is also the
/// digit used by word enumeration.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    bool contains(char c) const noexcept { return symbols_.find(c) != std::string::npos; }
    std::optional<std::size_t> index_of(char c) const noexcept;
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    char operator[](std::size_t i) const { return symbols_[i]; }
    const std::string& symbols() const noexcept { return symbols_; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

} // namespace fre2fa

#endif
