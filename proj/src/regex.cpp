#include "fre2fa/regex.hpp"

#include <cctype>

#include "fre2fa/errors.hpp"

namespace fre2fa {

FuzzyRegex FuzzyRegex::empty() { return FuzzyRegex(Kind::Empty); }

FuzzyRegex FuzzyRegex::epsilon() { return FuzzyRegex(Kind::Epsilon); }

FuzzyRegex FuzzyRegex::symbol(char letter)
{
    FuzzyRegex r(Kind::Symbol);
    r.letter_ = letter;
    return r;
}

FuzzyRegex FuzzyRegex::scale(TruthValue scalar, FuzzyRegex inner)
{
    FuzzyRegex r(Kind::Scale);
    r.scalar_ = std::move(scalar);
    r.children_.push_back(std::move(inner));
    return r;
}

FuzzyRegex FuzzyRegex::union_of(FuzzyRegex left, FuzzyRegex right)
{
    FuzzyRegex r(Kind::Union);
    r.children_.push_back(std::move(left));
    r.children_.push_back(std::move(right));
    return r;
}

FuzzyRegex FuzzyRegex::concat(FuzzyRegex left, FuzzyRegex right)
{
    FuzzyRegex r(Kind::Concat);
    r.children_.push_back(std::move(left));
    r.children_.push_back(std::move(right));
    return r;
}

FuzzyRegex FuzzyRegex::star(FuzzyRegex inner)
{
    FuzzyRegex r(Kind::Star);
    r.children_.push_back(std::move(inner));
    return r;
}

Alphabet FuzzyRegex::letters() const
{
    std::string out;
    auto collect = [&out](const FuzzyRegex& r, auto& self) -> void {
        if (r.kind_ == Kind::Symbol)
            out.push_back(r.letter_);
        for (const auto& c : r.children_)
            self(c, self);
    };
    collect(*this, collect);
    return Alphabet(out);
}

std::size_t FuzzyRegex::size() const
{
    std::size_t n = 1;
    for (const auto& c : children_)
        n += c.size();
    return n;
}

namespace {

enum class Tok { Letter, Number, Plus, Star, LParen, RParen, Eps, Null, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

const std::vector<std::string> factor_start = {"letter", "number", "'@eps'", "'@null'", "'('"};

std::string describe(const Token& t)
{
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& sigma) : text_(text), sigma_(sigma) { advance(); }

    FuzzyRegex parse_all()
    {
        FuzzyRegex r = parse_union();
        if (tok_.kind != Tok::End)
            fail({"'+'", "letter", "number", "'@eps'", "'@null'", "'('", "end of input"});
        return r;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw SyntaxError(tok_.offset, std::move(expected), describe(tok_));
    }

    void advance()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ == text_.size()) {
            tok_ = {Tok::End, start, ""};
            return;
        }
        const char c = text_[pos_];
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            tok_ = {Tok::Letter, start, std::string(1, c)};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            tok_ = {Tok::Number, start, std::string(text_.substr(start, pos_ - start))};
            return;
        }
        if (c == '@') {
            for (const auto& [word, kind] : {std::pair{std::string_view("@eps"), Tok::Eps},
                                             std::pair{std::string_view("@null"), Tok::Null}}) {
                if (text_.substr(pos_, word.size()) == word) {
                    pos_ += word.size();
                    tok_ = {kind, start, std::string(word)};
                    return;
                }
            }
        }
        ++pos_;
        switch (c) {
        case '+': tok_ = {Tok::Plus, start, "+"}; return;
        case '*': tok_ = {Tok::Star, start, "*"}; return;
        case '(': tok_ = {Tok::LParen, start, "("}; return;
        case ')': tok_ = {Tok::RParen, start, ")"}; return;
        default: break;
        }
        throw SyntaxError(start, {"letter", "number", "'+'", "'*'", "'('", "')'", "'@eps'", "'@null'"},
                          "'" + std::string(1, c) + "'");
    }

    bool at_factor_start() const
    {
        switch (tok_.kind) {
        case Tok::Letter:
        case Tok::Number:
        case Tok::LParen:
        case Tok::Eps:
        case Tok::Null: return true;
        default: return false;
        }
    }

    FuzzyRegex parse_union()
    {
        FuzzyRegex r = parse_concat();
        while (tok_.kind == Tok::Plus) {
            advance();
            r = FuzzyRegex::union_of(std::move(r), parse_concat());
        }
        return r;
    }

    FuzzyRegex parse_concat()
    {
        FuzzyRegex r = parse_factor();
        while (at_factor_start())
            r = FuzzyRegex::concat(std::move(r), parse_factor());
        return r;
    }

    FuzzyRegex parse_factor()
    {
        if (tok_.kind == Tok::Number) {
            TruthValue scalar = parse_truth_value(tok_.text);
            advance();
            return FuzzyRegex::scale(std::move(scalar), parse_factor());
        }
        FuzzyRegex r = parse_base();
        while (tok_.kind == Tok::Star) {
            advance();
            r = FuzzyRegex::star(std::move(r));
        }
        return r;
    }

    FuzzyRegex parse_base()
    {
        switch (tok_.kind) {
        case Tok::Letter: {
            const char c = tok_.text[0];
            if (!sigma_.contains(c))
                throw UnknownSymbol(c);
            advance();
            return FuzzyRegex::symbol(c);
        }
        case Tok::Eps: advance(); return FuzzyRegex::epsilon();
        case Tok::Null: advance(); return FuzzyRegex::empty();
        case Tok::LParen: {
            advance();
            FuzzyRegex r = parse_union();
            if (tok_.kind != Tok::RParen)
                fail({"'+'", "')'"});
            advance();
            return r;
        }
        default: fail(factor_start);
        }
    }

    std::string_view text_;
    const Alphabet& sigma_;
    std::size_t pos_ = 0;
    Token tok_{Tok::End, 0, ""};
};

using K = FuzzyRegex::Kind;

std::string render_union(const FuzzyRegex& r);

std::string render_base(const FuzzyRegex& r)
{
    switch (r.kind()) {
    case K::Star: return render_base(r.inner()) + "*";
    case K::Symbol: return std::string(1, r.letter());
    case K::Epsilon: return "@eps";
    case K::Empty: return "@null";
    default: return "(" + render_union(r) + ")";
    }
}

std::string render_factor(const FuzzyRegex& r)
{
    if (r.kind() != K::Scale)
        return render_base(r);
    // Adjacent numbers need a separator: "0.2 0.3a".
    const char* sep = r.inner().kind() == K::Scale ? " " : "";
    return r.scalar().to_string() + sep + render_factor(r.inner());
}

std::string render_concat(const FuzzyRegex& r)
{
    if (r.kind() != K::Concat)
        return render_factor(r);
    return render_concat(r.left()) + render_factor(r.right());
}

std::string render_union(const FuzzyRegex& r)
{
    if (r.kind() != K::Union)
        return render_concat(r);
    return render_union(r.left()) + "+" + render_concat(r.right());
}

} // namespace

FuzzyRegex parse(std::string_view text, const Alphabet& sigma)
{
    return Parser(text, sigma).parse_all();
}

FuzzyRegex parse(std::string_view text)
{
    static const Alphabet lowercase("abcdefghijklmnopqrstuvwxyz");
    return parse(text, lowercase);
}

std::string render(const FuzzyRegex& r)
{
    return render_union(r);
}

std::string dump(const FuzzyRegex& r)
{
    switch (r.kind()) {
    case K::Empty: return "empty";
    case K::Epsilon: return "eps";
    case K::Symbol: return std::string("sym(") + r.letter() + ")";
    case K::Scale: return "scale(" + r.scalar().to_ratio_string() + ", " + dump(r.inner()) + ")";
    case K::Union: return "union(" + dump(r.left()) + ", " + dump(r.right()) + ")";
    case K::Concat: return "concat(" + dump(r.left()) + ", " + dump(r.right()) + ")";
    case K::Star: return "star(" + dump(r.inner()) + ")";
    }
    return {};
}

} // namespace fre2fa
