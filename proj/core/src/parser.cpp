#include "padcell/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "padcell/errors.hpp"

namespace padcell {

namespace {

enum class Tok {
    End,
    Int,
    Ident,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Plus,
    Minus,
    Mul,
    Slash,
    Assign, // "="
    Lt,
    Le,
    Gt,
    Ge,
};

struct Token {
    Tok kind;
    std::string text; // identifier or integer digits
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text, int l, int c) {
        out.push_back(Token{k, std::move(text), l, c});
    };
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        int l = line, c = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            push(Tok::Int, s.substr(i, j - i), l, c);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            push(Tok::Ident, s.substr(i, j - i), l, c);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto two = [&](char second) { return i + 1 < s.size() && s[i + 1] == second; };
        switch (ch) {
            case '(': push(Tok::LParen, "(", l, c); break;
            case ')': push(Tok::RParen, ")", l, c); break;
            case '[': push(Tok::LBracket, "[", l, c); break;
            case ']': push(Tok::RBracket, "]", l, c); break;
            case ',': push(Tok::Comma, ",", l, c); break;
            case '.': push(Tok::Dot, ".", l, c); break;
            case '+': push(Tok::Plus, "+", l, c); break;
            case '-': push(Tok::Minus, "-", l, c); break;
            case '*': push(Tok::Mul, "*", l, c); break;
            case '/': push(Tok::Slash, "/", l, c); break;
            case '=': push(Tok::Assign, "=", l, c); break;
            case '<':
                if (two('=')) {
                    push(Tok::Le, "<=", l, c);
                    ++i;
                    ++col;
                } else {
                    push(Tok::Lt, "<", l, c);
                }
                break;
            case '>':
                if (two('=')) {
                    push(Tok::Ge, ">=", l, c);
                    ++i;
                    ++col;
                } else {
                    push(Tok::Gt, ">", l, c);
                }
                break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
        }
        ++i;
        ++col;
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

bool is_keyword(const std::string& s) {
    return s == "or" || s == "and" || s == "not" || s == "exists" || s == "ord" ||
           s == "star" || s == "divg" || s == "div" || s == "Pn" || s == "Qnm";
}

using Parsed = std::variant<Term, Formula>;

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Parsed parse_any() {
        Parsed v = or_expr();
        expect_end();
        return v;
    }

    Formula parse_formula() {
        Parsed v = or_expr();
        expect_end();
        if (auto* f = std::get_if<Formula>(&v)) return *f;
        fail("expected a formula, found a bare term", 0);
    }

    Term parse_term_only() {
        Term t = term();
        expect_end();
        return t;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() { return toks_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_ident(const char* name) const {
        return peek().kind == Tok::Ident && peek().text == name;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        throw SyntaxError(msg, t.line, t.col);
    }

    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        return advance();
    }

    void expect_end() {
        if (!at(Tok::End)) fail("unexpected trailing input");
    }

    // ---- formulas -------------------------------------------------------

    Parsed or_expr() {
        Parsed v = and_expr();
        while (at_ident("or")) {
            Formula lhs = as_formula(v, "'or' connects formulas");
            advance();
            Formula rhs = as_formula(and_expr(), "'or' connects formulas");
            v = f_or(lhs, rhs);
        }
        return v;
    }

    Parsed and_expr() {
        Parsed v = lit();
        while (at_ident("and")) {
            Formula lhs = as_formula(v, "'and' connects formulas");
            advance();
            Formula rhs = as_formula(lit(), "'and' connects formulas");
            v = f_and(lhs, rhs);
        }
        return v;
    }

    Formula as_formula(const Parsed& v, const char* why) {
        if (auto* f = std::get_if<Formula>(&v)) return *f;
        fail(why);
    }

    Parsed lit() {
        if (at_ident("not")) {
            advance();
            return f_not(as_formula(lit(), "'not' applies to a formula"));
        }
        if (at_ident("exists")) {
            advance();
            const Token& v = expect(Tok::Ident, "a variable after 'exists'");
            if (is_keyword(v.text))
                throw SyntaxError("'" + v.text + "' is reserved", v.line, v.col);
            expect(Tok::Dot, "'.' after the bound variable");
            Formula body = as_formula(or_expr(), "'exists' needs a formula body");
            return f_exists(v.text, body);
        }
        if (at_ident("ord")) return ord_atom();
        if (at_ident("Pn")) return coset_atom(false);
        if (at_ident("Qnm")) return coset_atom(true);
        if (at_ident("div")) {
            advance();
            expect(Tok::LParen, "'(' after div");
            Term a = term();
            expect(Tok::Comma, "',' in div");
            Term b = term();
            expect(Tok::RParen, "')' after div");
            return maybe_eq(f_wrap_div(a, b));
        }
        if (at(Tok::LParen)) {
            advance();
            Parsed inner = or_expr();
            expect(Tok::RParen, "')'");
            if (auto* f = std::get_if<Formula>(&inner)) return *f;
            Term t = paren_suffix(std::get<Term>(inner));
            return maybe_eq_term(sum_rest(t));
        }
        return maybe_eq_term(term());
    }

    static Parsed f_wrap_div(Term a, Term b) { return Parsed{f_ord(a, CmpOp::Lt, b)}; }

    Parsed maybe_eq(Parsed v) {
        if (auto* t = std::get_if<Term>(&v)) return maybe_eq_term(*t);
        return v;
    }

    Parsed maybe_eq_term(Term t) {
        if (at(Tok::Assign)) {
            advance();
            return Parsed{f_eq(t, term())};
        }
        return Parsed{t};
    }

    Parsed ord_atom() {
        advance();
        expect(Tok::LParen, "'(' after ord");
        Term lhs = term();
        expect(Tok::RParen, "')'");
        CmpOp op;
        switch (peek().kind) {
            case Tok::Lt: op = CmpOp::Lt; break;
            case Tok::Le: op = CmpOp::Le; break;
            case Tok::Assign: op = CmpOp::Eq; break;
            case Tok::Ge: op = CmpOp::Ge; break;
            case Tok::Gt: op = CmpOp::Gt; break;
            default: fail("expected a comparison after ord(...)");
        }
        advance();
        if (!at_ident("ord")) fail("expected ord(...) on the right of the comparison");
        advance();
        expect(Tok::LParen, "'(' after ord");
        Term rhs = term();
        expect(Tok::RParen, "')'");
        return Parsed{f_ord(lhs, op, rhs)};
    }

    long bracket_long(const char* what, bool allow_negative) {
        bool neg = false;
        if (allow_negative && at(Tok::Minus)) {
            advance();
            neg = true;
        }
        const Token& t = expect(Tok::Int, what);
        Int v(t.text);
        if (v > Int(1000000)) throw SyntaxError("index out of range", t.line, t.col);
        long out = v.convert_to<long>();
        return neg ? -out : out;
    }

    Parsed coset_atom(bool qnm) {
        const Token& kw = advance();
        expect(Tok::LBracket, "'['");
        long n = bracket_long("a group index", false);
        if (n < 1) throw SyntaxError("group index must be positive", kw.line, kw.col);
        int m = 1;
        if (qnm) {
            expect(Tok::Comma, "',' between group indices");
            long mv = bracket_long("a depth index", false);
            if (mv < 1) throw SyntaxError("depth index must be positive", kw.line, kw.col);
            m = static_cast<int>(mv);
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::LParen, "'('");
        Term first = term();
        Rat lambda(1);
        Term arg = first;
        if (at(Tok::Comma)) {
            const Token& comma = peek();
            advance();
            const auto* c = std::get_if<TConst>(&first->node);
            if (!c)
                throw SyntaxError("coset scale must be a rational constant", comma.line,
                                  comma.col);
            if (rat_is_zero(c->value))
                throw SyntaxError("coset scale must be nonzero", comma.line, comma.col);
            lambda = c->value;
            arg = term();
        }
        expect(Tok::RParen, "')'");
        CosetSpec spec = qnm ? CosetSpec::qnm(n, m) : CosetSpec::pn(n);
        return Parsed{f_coset(arg, lambda, spec)};
    }

    // ---- terms ----------------------------------------------------------

    Term term() { return sum_rest(factor()); }

    Term sum_rest(Term t) {
        for (;;) {
            if (at(Tok::Plus)) {
                advance();
                t = t_add(t, factor());
            } else if (at(Tok::Minus)) {
                advance();
                t = t_sub(t, factor());
            } else {
                return t;
            }
        }
    }

    Rat rational() {
        const Token& n = expect(Tok::Int, "a number");
        Int num(n.text);
        if (at(Tok::Slash) && peek(1).kind == Tok::Int) {
            advance();
            const Token& d = advance();
            Int den(d.text);
            if (den == 0) throw SyntaxError("zero denominator", d.line, d.col);
            return Rat(num, den);
        }
        return Rat(num);
    }

    Term factor() {
        if (at(Tok::Minus)) {
            advance();
            return t_neg(factor());
        }
        if (at(Tok::Int)) {
            Rat r = rational();
            if (at(Tok::Mul)) {
                advance();
                return t_scalar(r, factor());
            }
            return t_const(r);
        }
        if (at(Tok::LParen)) {
            advance();
            Term t = term();
            expect(Tok::RParen, "')'");
            return paren_suffix(t);
        }
        if (at_ident("star")) {
            advance();
            expect(Tok::LParen, "'(' after star");
            Term a = term();
            expect(Tok::Comma, "',' in star");
            Term b = term();
            expect(Tok::RParen, "')' after star");
            return t_star(a, b);
        }
        if (at_ident("divg")) {
            advance();
            expect(Tok::LBracket, "'[' after divg");
            long gamma = bracket_long("a cutoff", true);
            expect(Tok::RBracket, "']'");
            expect(Tok::LParen, "'('");
            Term a = term();
            expect(Tok::Comma, "',' in divg");
            Term b = term();
            expect(Tok::RParen, "')' after divg");
            return t_divg(gamma, a, b);
        }
        if (at(Tok::Ident)) {
            const Token& t = peek();
            if (is_keyword(t.text))
                throw SyntaxError("'" + t.text + "' cannot start a term", t.line, t.col);
            advance();
            return t_var(t.text);
        }
        fail("expected a term");
    }

    // After "(" term ")": a following "*" means the group was a rational
    // coefficient, as in (1/3)*x.
    Term paren_suffix(Term inner) {
        if (!at(Tok::Mul)) return inner;
        const Token& star = peek();
        const auto* c = std::get_if<TConst>(&inner->node);
        if (!c)
            throw SyntaxError("only a rational coefficient can multiply a term", star.line,
                              star.col);
        advance();
        return t_scalar(c->value, factor());
    }
};

} // namespace

Term parse_term(const std::string& text) { return Parser(text).parse_term_only(); }

Formula parse_formula(const std::string& text) { return Parser(text).parse_formula(); }

std::variant<Term, Formula> parse_any(const std::string& text) {
    return Parser(text).parse_any();
}

} // namespace padcell
