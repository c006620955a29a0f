#include "fre2fa/glushkov.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fre2fa {

namespace {

struct LocalSets {
    bool nullable = false;
    PositionSet first;
    PositionSet last;
};

LocalSets compute(const MarkedRegex& r, std::vector<PositionSet>& follow)
{
    using K = MarkedRegex::Kind;
    switch (r.kind()) {
    case K::Empty: return {};
    case K::Epsilon: return {true, {}, {}};
    case K::Position: return {false, {r.index()}, {r.index()}};
    case K::Union: {
        LocalSets s = compute(r.left(), follow);
        LocalSets t = compute(r.right(), follow);
        s.nullable = s.nullable || t.nullable;
        s.first.merge(t.first);
        s.last.merge(t.last);
        return s;
    }
    case K::Concat: {
        LocalSets s = compute(r.left(), follow);
        LocalSets t = compute(r.right(), follow);
        for (std::size_t i : s.last)
            follow[i].insert(t.first.begin(), t.first.end());
        LocalSets out;
        out.nullable = s.nullable && t.nullable;
        out.first = s.first;
        if (s.nullable)
            out.first.insert(t.first.begin(), t.first.end());
        out.last = t.last;
        if (t.nullable)
            out.last.insert(s.last.begin(), s.last.end());
        return out;
    }
    case K::Star: {
        LocalSets s = compute(r.inner(), follow);
        for (std::size_t i : s.last)
            follow[i].insert(s.first.begin(), s.first.end());
        s.nullable = true;
        return s;
    }
    }
    return {};
}

void sort_unique(std::vector<Transition>& ts)
{
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

} // namespace

PositionSets position_sets(const MarkedExpression& m)
{
    PositionSets ps;
    ps.follow.assign(m.size() + 1, {});
    LocalSets top = compute(m.desugared, ps.follow);
    ps.nullable = top.nullable;
    ps.first = std::move(top.first);
    ps.last = std::move(top.last);
    return ps;
}

CrispAutomaton build_position_automaton(const MarkedExpression& m, const PositionSets& ps)
{
    CrispAutomaton aut;
    aut.num_states = m.size() + 1;
    aut.alphabet = m.extended_alphabet();
    for (std::size_t j : ps.first)
        aut.transitions.push_back({0, m.at(j).symbol, j});
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j : ps.follow[i])
            aut.transitions.push_back({i, m.at(j).symbol, j});
    sort_unique(aut.transitions);
    aut.finals = ps.last;
    if (ps.nullable)
        aut.finals.insert(0);
    aut.labels.resize(aut.num_states);
    for (State q = 0; q < aut.num_states; ++q)
        aut.labels[q] = {q};
    return aut;
}

CrispAutomaton follow_quotient(const CrispAutomaton& position_automaton, const PositionSets& ps)
{
    const std::size_t n = position_automaton.num_states;

    // Class key: (final?, follow set); the initial state uses first(r).
    std::map<std::pair<bool, PositionSet>, std::vector<State>> classes;
    for (State q = 0; q < n; ++q) {
        const PositionSet& fol = q == 0 ? ps.first : ps.follow[q];
        classes[{position_automaton.is_final(q), fol}].push_back(q);
    }

    // Members are collected in increasing order, so front() is the smallest;
    // sorting by it puts the initial class first.
    std::vector<std::vector<State>> ordered;
    for (auto& [key, members] : classes)
        ordered.push_back(std::move(members));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<State> class_of(n);
    for (State c = 0; c < ordered.size(); ++c)
        for (State q : ordered[c])
            class_of[q] = c;

    CrispAutomaton out;
    out.num_states = ordered.size();
    out.alphabet = position_automaton.alphabet;
    for (const auto& t : position_automaton.transitions)
        out.transitions.push_back({class_of[t.from], t.symbol, class_of[t.to]});
    sort_unique(out.transitions);
    for (State q : position_automaton.finals)
        out.finals.insert(class_of[q]);
    out.labels.resize(out.num_states);
    for (State q = 0; q < n; ++q)
        for (std::size_t p : position_automaton.labels[q])
            out.labels[class_of[q]].insert(p);
    return out;
}

} // namespace fre2fa
