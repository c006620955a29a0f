#include "fre2fa/batch.hpp"

#include <cstdint>

#include "fre2fa/oracle.hpp"

namespace fre2fa {

namespace {

using Table = std::vector<TruthValue>;

std::vector<TruthValue> evaluate_serial(const FuzzyAutomaton& fa, const WordIndex& words)
{
    std::vector<TruthValue> out(words.size());
    for (std::size_t id = 0; id < words.size(); ++id)
        out[id] = eval_word(fa, words.word(id));
    return out;
}

// Level-synchronous: the reach vector of each word is its parent's reach
// vector times one transition matrix.
std::vector<TruthValue> evaluate_parallel(const FuzzyAutomaton& fa, const WordIndex& words)
{
    std::vector<TruthValue> out(words.size());
    std::vector<TruthVector> previous{fa.sigma};
    out[0] = dot(fa.structure, fa.sigma, fa.tau);
    for (std::size_t len = 1; len <= words.max_len() && !words.alphabet().empty(); ++len) {
        const std::size_t first = words.offset(len);
        const auto count = static_cast<std::int64_t>(words.offset(len + 1) - first);
        const std::size_t parent_base = words.offset(len - 1);
        std::vector<TruthVector> current(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < count; ++k) {
            const std::size_t id = first + static_cast<std::size_t>(k);
            const TruthVector& from = previous[words.parent(id) - parent_base];
            current[static_cast<std::size_t>(k)] = multiply(fa.structure, from, fa.delta[words.last_symbol(id)]);
            out[id] = dot(fa.structure, current[static_cast<std::size_t>(k)], fa.tau);
        }
        previous = std::move(current);
    }
    return out;
}

// Alphabet ranks of the symbols of a word, most significant first.
std::vector<std::size_t> digits_of(const WordIndex& words, std::size_t id)
{
    const std::size_t len = words.length_of(id);
    const std::size_t base = words.alphabet().size();
    std::vector<std::size_t> d(len);
    std::size_t rank = id - words.offset(len);
    for (std::size_t i = len; i-- > 0;) {
        d[i] = rank % base;
        rank /= base;
    }
    return d;
}

std::size_t substring_id(const WordIndex& words, const std::vector<std::size_t>& digits, std::size_t i,
                         std::size_t j)
{
    std::size_t rank = 0;
    for (std::size_t k = i; k < j; ++k)
        rank = rank * words.alphabet().size() + digits[k];
    return words.offset(j - i) + rank;
}

template <typename Fn>
Table tabulate(const WordIndex& words, Fn fn)
{
    Table t(words.size());
    const auto n = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t id = 0; id < n; ++id)
        t[static_cast<std::size_t>(id)] = fn(static_cast<std::size_t>(id));
    return t;
}

// Degree of every word for one node, from the children's tables.
// Children's tables are released as soon as the parent is built.
Table denote_node(const FuzzyRegex& r, const LatticeStructure& s, const WordIndex& words)
{
    using K = FuzzyRegex::Kind;
    switch (r.kind()) {
    case K::Empty: return Table(words.size());
    case K::Epsilon: {
        Table t(words.size());
        t[0] = s.identity();
        return t;
    }
    case K::Symbol: {
        Table t(words.size());
        if (words.max_len() >= 1 && words.alphabet().contains(r.letter()))
            t[words.id_of(std::string(1, r.letter()))] = s.identity();
        return t;
    }
    case K::Scale: {
        const Table inner = denote_node(r.inner(), s, words);
        return tabulate(words, [&](std::size_t id) { return s.tensor(r.scalar(), inner[id]); });
    }
    case K::Union: {
        const Table a = denote_node(r.left(), s, words);
        const Table b = denote_node(r.right(), s, words);
        return tabulate(words, [&](std::size_t id) { return s.join(a[id], b[id]); });
    }
    case K::Concat: {
        const Table a = denote_node(r.left(), s, words);
        const Table b = denote_node(r.right(), s, words);
        return tabulate(words, [&](std::size_t id) {
            const auto d = digits_of(words, id);
            TruthValue acc;
            for (std::size_t k = 0; k <= d.size(); ++k) {
                const TruthValue& x = a[substring_id(words, d, 0, k)];
                if (x.is_zero())
                    continue;
                acc = s.join(acc, s.tensor(x, b[substring_id(words, d, k, d.size())]));
            }
            return acc;
        });
    }
    case K::Star: {
        const Table a = denote_node(r.inner(), s, words);
        return tabulate(words, [&](std::size_t id) {
            const auto d = digits_of(words, id);
            std::vector<TruthValue> best(d.size() + 1);
            best[0] = s.identity();
            for (std::size_t j = 1; j <= d.size(); ++j)
                for (std::size_t i = 0; i < j; ++i)
                    if (!best[i].is_zero())
                        best[j] = s.join(best[j], s.tensor(best[i], a[substring_id(words, d, i, j)]));
            return best[d.size()];
        });
    }
    }
    return Table(words.size());
}

} // namespace

std::vector<TruthValue> evaluate_words(const FuzzyAutomaton& fa, const WordIndex& words, Execution exec)
{
    return exec == Execution::Parallel ? evaluate_parallel(fa, words) : evaluate_serial(fa, words);
}

std::vector<TruthValue> denote_words(const FuzzyRegex& r, const LatticeStructure& structure,
                                     const WordIndex& words, Execution exec)
{
    if (exec == Execution::Parallel)
        return denote_node(r, structure, words);
    std::vector<TruthValue> out(words.size());
    for (std::size_t id = 0; id < words.size(); ++id)
        out[id] = denote(r, words.word(id), structure);
    return out;
}

} // namespace fre2fa
