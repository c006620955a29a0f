#ifndef FRE2FA_WORDS_HPP
#define FRE2FA_WORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fre2fa/alphabet.hpp"

namespace fre2fa {

/// Number of words of length <= max_len over an alphabet of `base`
/// symbols, saturating at SIZE_MAX.
std::size_t count_words(std::size_t base, std::size_t max_len);

/// Dense numbering of all words of length <= max_len: shortlex order,
/// id 0 is the empty word, then length-1 words in alphabet order, etc.
class WordIndex {
public:
    WordIndex(Alphabet sigma, std::size_t max_len);

    const Alphabet& alphabet() const noexcept { return sigma_; }
    std::size_t max_len() const noexcept { return max_len_; }
    std::size_t size() const noexcept { return offsets_.back(); }

    /// First id of words with the given length; offset(max_len + 1) == size().
    std::size_t offset(std::size_t length) const { return offsets_.at(length); }
    std::size_t length_of(std::size_t id) const;

    std::string word(std::size_t id) const;
    /// Id of a word over the alphabet (length <= max_len).
    std::size_t id_of(std::string_view w) const;

    /// Id of the word with its last symbol removed (id must be nonzero),
    /// and that last symbol's alphabet rank.
    std::size_t parent(std::size_t id) const;
    std::size_t last_symbol(std::size_t id) const;

private:
    Alphabet sigma_;
    std::size_t max_len_;
    std::vector<std::size_t> offsets_;
};

} // namespace fre2fa

#endif
