#include "fre2fa/words.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fre2fa/errors.hpp"

namespace fre2fa {

std::size_t count_words(std::size_t base, std::size_t max_len)
{
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    std::size_t level = 1;
    for (std::size_t l = 0; l <= max_len; ++l) {
        if (total > cap - level)
            return cap;
        total += level;
        if (base != 0 && level > cap / base)
            level = cap;
        else
            level *= base;
        if (level == 0)
            break;
    }
    return total;
}

WordIndex::WordIndex(Alphabet sigma, std::size_t max_len) : sigma_(std::move(sigma)), max_len_(max_len)
{
    if (count_words(sigma_.size(), max_len) == std::numeric_limits<std::size_t>::max())
        throw std::length_error("word index too large");
    offsets_.push_back(0);
    std::size_t level = 1;
    for (std::size_t l = 0; l <= max_len; ++l) {
        offsets_.push_back(offsets_.back() + level);
        level *= sigma_.size();
    }
}

std::size_t WordIndex::length_of(std::size_t id) const
{
    if (id >= size())
        throw std::out_of_range("word id out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string WordIndex::word(std::size_t id) const
{
    const std::size_t len = length_of(id);
    std::size_t rank = id - offsets_[len];
    std::string w(len, '\0');
    for (std::size_t i = len; i-- > 0;) {
        w[i] = sigma_[rank % sigma_.size()];
        rank /= sigma_.size();
    }
    return w;
}

std::size_t WordIndex::id_of(std::string_view w) const
{
    if (w.size() > max_len_)
        throw std::out_of_range("word longer than index bound");
    std::size_t rank = 0;
    for (char c : w) {
        const auto d = sigma_.index_of(c);
        if (!d)
            throw UnknownSymbol(c);
        rank = rank * sigma_.size() + *d;
    }
    return offsets_[w.size()] + rank;
}

std::size_t WordIndex::parent(std::size_t id) const
{
    const std::size_t len = length_of(id);
    if (len == 0)
        throw std::invalid_argument("the empty word has no parent");
    return offsets_[len - 1] + (id - offsets_[len]) / sigma_.size();
}

std::size_t WordIndex::last_symbol(std::size_t id) const
{
    const std::size_t len = length_of(id);
    if (len == 0)
        throw std::invalid_argument("the empty word has no last symbol");
    return (id - offsets_[len]) % sigma_.size();
}

} // namespace fre2fa
