#include "fre2fa/oracle.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "fre2fa/batch.hpp"
#include "fre2fa/errors.hpp"
#include "fre2fa/fuzzy_automaton.hpp"
#include "fre2fa/glushkov.hpp"
#include "fre2fa/marked.hpp"
#include "fre2fa/words.hpp"

namespace fre2fa {

namespace {

// Degrees of every substring u[i, j), stored at i * (len + 1) + j.
class SubstringTable {
public:
    explicit SubstringTable(std::size_t len) : len_(len), cells_((len + 1) * (len + 1)) {}

    TruthValue& operator()(std::size_t i, std::size_t j) { return cells_[i * (len_ + 1) + j]; }
    const TruthValue& operator()(std::size_t i, std::size_t j) const { return cells_[i * (len_ + 1) + j]; }

private:
    std::size_t len_;
    std::vector<TruthValue> cells_;
};

SubstringTable denote_table(const FuzzyRegex& r, std::string_view u, const LatticeStructure& s)
{
    using K = FuzzyRegex::Kind;
    const std::size_t n = u.size();
    SubstringTable t(n);
    switch (r.kind()) {
    case K::Empty: break;
    case K::Epsilon:
        for (std::size_t i = 0; i <= n; ++i)
            t(i, i) = s.identity();
        break;
    case K::Symbol:
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] == r.letter())
                t(i, i + 1) = s.identity();
        break;
    case K::Scale: {
        const SubstringTable inner = denote_table(r.inner(), u, s);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                t(i, j) = s.tensor(r.scalar(), inner(i, j));
        break;
    }
    case K::Union: {
        const SubstringTable a = denote_table(r.left(), u, s);
        const SubstringTable b = denote_table(r.right(), u, s);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                t(i, j) = s.join(a(i, j), b(i, j));
        break;
    }
    case K::Concat: {
        const SubstringTable a = denote_table(r.left(), u, s);
        const SubstringTable b = denote_table(r.right(), u, s);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                for (std::size_t k = i; k <= j; ++k)
                    t(i, j) = s.join(t(i, j), s.tensor(a(i, k), b(k, j)));
        break;
    }
    case K::Star: {
        // Nonempty factors only: an empty factor contributes a value <= e
        // and never raises the join in an integral structure.
        const SubstringTable a = denote_table(r.inner(), u, s);
        for (std::size_t i = n + 1; i-- > 0;) {
            t(i, i) = s.identity();
            for (std::size_t j = i + 1; j <= n; ++j)
                for (std::size_t k = i + 1; k <= j; ++k)
                    t(i, j) = s.join(t(i, j), s.tensor(a(i, k), t(k, j)));
        }
        break;
    }
    }
    return t;
}

} // namespace

TruthValue denote(const FuzzyRegex& r, std::string_view u, const LatticeStructure& structure)
{
    return denote_table(r, u, structure)(0, u.size());
}

std::size_t word_budget_from_environment()
{
    const char* text = std::getenv("FRE2FA_BUDGET");
    if (text == nullptr || *text == '\0')
        return default_word_budget;
    const std::string s(text);
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw Error("FRE2FA_BUDGET must be a nonnegative integer, got '" + s + "'");
    try {
        return static_cast<std::size_t>(std::stoull(s));
    } catch (const std::out_of_range&) {
        throw Error("FRE2FA_BUDGET out of range: '" + s + "'");
    }
}

EquivalenceReport check_equivalence(const FuzzyRegex& r, const Alphabet& sigma,
                                    const LatticeStructure& structure, std::size_t max_len,
                                    const EquivalenceOptions& options)
{
    const std::size_t required = count_words(sigma.size(), max_len);
    if (required > options.budget)
        throw BudgetExceeded(required, options.budget);

    const MarkedExpression m = mark(r, sigma);
    const PositionSets ps = position_sets(m);
    const CrispAutomaton pos = build_position_automaton(m, ps);
    const CrispAutomaton fol = follow_quotient(pos, ps);
    const FuzzyAutomaton fa_pos = fuzzify(pos, m, structure, options.exec);
    const FuzzyAutomaton fa_fol = fuzzify(fol, m, structure, options.exec);

    const WordIndex words(sigma, max_len);
    const auto expected = denote_words(r, structure, words, options.exec);
    const auto via_follow = evaluate_words(fa_fol, words, options.exec);
    const auto via_position = evaluate_words(fa_pos, words, options.exec);

    EquivalenceReport report;
    report.expression = r;
    report.structure = structure.kind();
    report.max_len = max_len;
    report.words_checked = words.size();
    report.positions = m.size();
    report.follow_states = fol.num_states;
    report.position_states = pos.num_states;
    for (std::size_t id = 0; id < words.size(); ++id) {
        if (expected[id] != via_follow[id] || expected[id] != via_position[id]) {
            report.counterexample = Counterexample{words.word(id), expected[id], via_follow[id], via_position[id]};
            break;
        }
    }
    return report;
}

EquivalenceReport check_equivalence(const FuzzyRegex& r, const LatticeStructure& structure,
                                    std::size_t max_len, const EquivalenceOptions& options)
{
    return check_equivalence(r, r.letters(), structure, max_len, options);
}

} // namespace fre2fa
