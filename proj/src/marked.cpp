#include "fre2fa/marked.hpp"

#include <algorithm>

#include "fre2fa/errors.hpp"

namespace fre2fa {

std::string Symbol::name() const
{
    return is_scalar() ? "y" + std::to_string(scalar_position) : std::string(1, letter);
}

Symbol parse_symbol_name(std::string_view name)
{
    if (name.size() == 1)
        return Symbol::of_letter(name[0]);
    if (name.size() >= 2 && name[0] == 'y' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        const auto pos = std::stoull(std::string(name.substr(1)));
        if (pos > 0)
            return Symbol::of_scalar(pos);
    }
    throw Error("malformed symbol name '" + std::string(name) + "'");
}

MarkedRegex MarkedRegex::empty() { return MarkedRegex(Kind::Empty); }

MarkedRegex MarkedRegex::epsilon() { return MarkedRegex(Kind::Epsilon); }

MarkedRegex MarkedRegex::position(std::size_t index)
{
    MarkedRegex r(Kind::Position);
    r.index_ = index;
    return r;
}

MarkedRegex MarkedRegex::union_of(MarkedRegex left, MarkedRegex right)
{
    MarkedRegex r(Kind::Union);
    r.children_.push_back(std::move(left));
    r.children_.push_back(std::move(right));
    return r;
}

MarkedRegex MarkedRegex::concat(MarkedRegex left, MarkedRegex right)
{
    MarkedRegex r(Kind::Concat);
    r.children_.push_back(std::move(left));
    r.children_.push_back(std::move(right));
    return r;
}

MarkedRegex MarkedRegex::star(MarkedRegex inner)
{
    MarkedRegex r(Kind::Star);
    r.children_.push_back(std::move(inner));
    return r;
}

const Position& MarkedExpression::at(std::size_t index) const
{
    if (index == 0 || index > positions.size())
        throw UnknownPosition(index);
    return positions[index - 1];
}

std::vector<Symbol> MarkedExpression::extended_alphabet() const
{
    std::vector<Symbol> out;
    for (char c : sigma)
        out.push_back(Symbol::of_letter(c));
    for (const auto& p : positions)
        if (p.symbol.is_scalar())
            out.push_back(p.symbol);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

MarkedRegex mark_node(const FuzzyRegex& r, std::vector<Position>& positions)
{
    using K = FuzzyRegex::Kind;
    const auto next = [&positions] { return positions.size() + 1; };
    switch (r.kind()) {
    case K::Empty: return MarkedRegex::empty();
    case K::Epsilon: return MarkedRegex::epsilon();
    case K::Symbol: {
        const std::size_t i = next();
        positions.push_back({i, Symbol::of_letter(r.letter()), TruthValue::one()});
        return MarkedRegex::position(i);
    }
    case K::Scale: {
        const std::size_t i = next();
        positions.push_back({i, Symbol::of_scalar(i), r.scalar()});
        return MarkedRegex::concat(MarkedRegex::position(i), mark_node(r.inner(), positions));
    }
    case K::Union: {
        auto left = mark_node(r.left(), positions);
        return MarkedRegex::union_of(std::move(left), mark_node(r.right(), positions));
    }
    case K::Concat: {
        auto left = mark_node(r.left(), positions);
        return MarkedRegex::concat(std::move(left), mark_node(r.right(), positions));
    }
    case K::Star: return MarkedRegex::star(mark_node(r.inner(), positions));
    }
    return MarkedRegex::empty();
}

FuzzyRegex unmark_node(const MarkedRegex& r, const MarkedExpression& m)
{
    using K = MarkedRegex::Kind;
    switch (r.kind()) {
    case K::Empty: return FuzzyRegex::empty();
    case K::Epsilon: return FuzzyRegex::epsilon();
    case K::Position: {
        const auto& p = m.at(r.index());
        if (p.symbol.is_scalar())
            throw Error("scalar position outside a scale node");
        return FuzzyRegex::symbol(p.symbol.letter);
    }
    case K::Union: return FuzzyRegex::union_of(unmark_node(r.left(), m), unmark_node(r.right(), m));
    case K::Concat:
        // Scalar positions only ever occur as the left operand of the
        // concatenation they were desugared into.
        if (r.left().kind() == K::Position && m.at(r.left().index()).symbol.is_scalar())
            return FuzzyRegex::scale(m.at(r.left().index()).phi, unmark_node(r.right(), m));
        return FuzzyRegex::concat(unmark_node(r.left(), m), unmark_node(r.right(), m));
    case K::Star: return FuzzyRegex::star(unmark_node(r.inner(), m));
    }
    return FuzzyRegex::empty();
}

} // namespace

MarkedExpression mark(const FuzzyRegex& r)
{
    return mark(r, r.letters());
}

MarkedExpression mark(const FuzzyRegex& r, const Alphabet& sigma)
{
    MarkedExpression m;
    m.desugared = mark_node(r, m.positions);
    m.sigma = sigma;
    for (const auto& p : m.positions)
        if (!p.symbol.is_scalar() && !sigma.contains(p.symbol.letter))
            throw UnknownSymbol(p.symbol.letter);
    return m;
}

FuzzyRegex unmark(const MarkedExpression& m)
{
    return unmark_node(m.desugared, m);
}

TruthValue phi_star(const MarkedExpression& m, const LatticeStructure& structure,
                    std::span<const std::size_t> word)
{
    TruthValue v = structure.identity();
    for (std::size_t p : word)
        v = structure.tensor(v, m.at(p).phi);
    return v;
}

TruthValue phi_star(const MarkedExpression& m, const LatticeStructure& structure,
                    std::span<const Symbol> word)
{
    TruthValue v = structure.identity();
    for (const Symbol& s : word)
        if (s.is_scalar())
            v = structure.tensor(v, m.at(s.scalar_position).phi);
    return v;
}

} // namespace fre2fa
