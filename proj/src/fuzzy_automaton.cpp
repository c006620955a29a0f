#include "fre2fa/fuzzy_automaton.hpp"

#include <algorithm>

#include "fre2fa/errors.hpp"

namespace fre2fa {

const TruthMatrix& FuzzyAutomaton::transitions(char symbol) const
{
    const auto idx = alphabet.index_of(symbol);
    if (!idx)
        throw UnknownSymbol(symbol);
    return delta.at(*idx);
}

ScalarClosure scalar_closure(const CrispAutomaton& aut, const MarkedExpression& m,
                             const LatticeStructure& structure, Execution exec)
{
    TruthMatrix step(aut.num_states, aut.num_states);
    for (const auto& t : aut.transitions)
        if (t.symbol.is_scalar())
            step(t.from, t.to) = join(step(t.from, t.to), m.at(t.symbol.scalar_position).phi);
    return {star_closure(structure, step, exec)};
}

bool embeds(const SymbolWord& u, const SymbolWord& v)
{
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size() && k < u.size(); ++i)
        if (v[i] == u[k])
            ++k;
    return k == u.size();
}

std::set<SymbolWord> minimal_words(const CrispAutomaton& aut, State i, char a, State j)
{
    std::vector<std::vector<const Transition*>> out_edges(aut.num_states);
    for (const auto& t : aut.transitions)
        out_edges.at(t.from).push_back(&t);

    std::set<SymbolWord> words;
    std::vector<bool> on_path(aut.num_states, false);
    SymbolWord prefix;
    auto walk = [&](State x, auto& self) -> void {
        on_path[x] = true;
        for (const Transition* t : out_edges[x]) {
            if (!t->symbol.is_scalar()) {
                if (t->symbol.letter == a && t->to == j) {
                    SymbolWord w = prefix;
                    w.push_back(t->symbol);
                    words.insert(std::move(w));
                }
            } else if (!on_path[t->to]) {
                prefix.push_back(t->symbol);
                self(t->to, self);
                prefix.pop_back();
            }
        }
        on_path[x] = false;
    };
    walk(i, walk);

    std::set<SymbolWord> minimal;
    for (const auto& w : words) {
        const bool dominated = std::any_of(words.begin(), words.end(), [&](const SymbolWord& u) {
            return u != w && embeds(u, w);
        });
        if (!dominated)
            minimal.insert(w);
    }
    return minimal;
}

FuzzyAutomaton fuzzify(const CrispAutomaton& aut, const MarkedExpression& m,
                       const LatticeStructure& structure, Execution exec)
{
    if (!structure.is_integral())
        throw StructureNotIntegral("scalar elimination requires an integral structure");

    const std::size_t k = aut.num_states;
    const TruthMatrix closure = scalar_closure(aut, m, structure, exec).matrix;

    FuzzyAutomaton fa{structure, m.sigma, {}, TruthVector(k), TruthVector(k)};
    for (char c : m.sigma) {
        TruthMatrix edges(k, k);
        for (const auto& t : aut.transitions)
            if (!t.symbol.is_scalar() && t.symbol.letter == c)
                edges(t.from, t.to) = structure.identity();
        fa.delta.push_back(multiply(structure, closure, edges, exec));
    }

    TruthVector finals(k);
    for (State q : aut.finals)
        finals[q] = structure.identity();
    fa.tau = multiply(structure, closure, finals);
    if (k > 0)
        fa.sigma[0] = structure.identity();
    return fa;
}

TruthVector reach(const FuzzyAutomaton& fa, std::string_view word)
{
    TruthVector v = fa.sigma;
    for (char c : word)
        v = multiply(fa.structure, v, fa.transitions(c));
    return v;
}

TruthValue eval_word(const FuzzyAutomaton& fa, std::string_view word)
{
    return dot(fa.structure, reach(fa, word), fa.tau);
}

} // namespace fre2fa
