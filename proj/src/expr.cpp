#include "tsurf/expr.hpp"

#include <cctype>
#include <vector>

namespace tsurf {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

struct Lexer {
    explicit Lexer(const std::string& s) : src(s) { advance(); }

    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;
    Token cur{Tok::End, "", 1, 1};

    void bump(char c) {
        ++pos;
        if (c == '\n') { ++line; col = 1; } else ++col;
    }

    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            bump(src[pos]);
        int l = line, c = col;
        if (pos >= src.size()) { cur = {Tok::End, "", l, c}; return; }
        char ch = src[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                num += src[pos];
                bump(src[pos]);
            }
            cur = {Tok::Number, num, l, c};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string id;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                id += src[pos];
                bump(src[pos]);
            }
            cur = {Tok::Ident, id, l, c};
            return;
        }
        Tok k;
        switch (ch) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
        bump(ch);
        cur = {k, std::string(1, ch), l, c};
    }
};

struct Parser {
    Parser(const std::string& s, const VarSet& vars) : lex(s), vars(vars) {}

    Lexer lex;
    const VarSet& vars;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lex.cur.line, lex.cur.col); }

    void expect(Tok k, const char* what) {
        if (lex.cur.kind != k) fail(std::string("expected ") + what);
        lex.advance();
    }

    // expr := ('+'|'-')? term (('+'|'-') term)*
    MPoly expr() {
        bool neg = false;
        if (lex.cur.kind == Tok::Plus) lex.advance();
        else if (lex.cur.kind == Tok::Minus) { neg = true; lex.advance(); }
        MPoly acc = term();
        if (neg) acc = -acc;
        while (lex.cur.kind == Tok::Plus || lex.cur.kind == Tok::Minus) {
            bool sub = lex.cur.kind == Tok::Minus;
            lex.advance();
            MPoly t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    // term := factor ('*' factor)*
    MPoly term() {
        MPoly acc = factor();
        while (lex.cur.kind == Tok::Star) {
            lex.advance();
            acc = acc * factor();
        }
        return acc;
    }

    // factor := base ('^' nat)?
    MPoly factor() {
        MPoly b = base();
        if (lex.cur.kind == Tok::Caret) {
            lex.advance();
            if (lex.cur.kind == Tok::Minus) fail("negative exponent");
            if (lex.cur.kind != Tok::Number) fail("expected nonnegative integer exponent");
            long e = std::stol(lex.cur.text);
            lex.advance();
            b = b.pow(e);
        }
        return b;
    }

    // base := number ('/' number)? | ident | '(' expr ')'
    MPoly base() {
        Token t = lex.cur;
        switch (t.kind) {
            case Tok::Number: {
                lex.advance();
                Int n(t.text);
                if (lex.cur.kind == Tok::Slash) {
                    // rational literal only when a digit follows
                    size_t save_pos = lex.pos;
                    int save_line = lex.line, save_col = lex.col;
                    Token save_cur = lex.cur;
                    lex.advance();
                    if (lex.cur.kind == Tok::Number) {
                        Int d(lex.cur.text);
                        lex.advance();
                        if (d == 0) throw ParseError("zero denominator in rational literal", t.line, t.col);
                        Rat r(n, d);
                        r.canonicalize();
                        return MPoly::constant(vars, r);
                    }
                    // '/' belongs to an enclosing rational expression
                    lex.pos = save_pos;
                    lex.line = save_line;
                    lex.col = save_col;
                    lex.cur = save_cur;
                }
                return MPoly::constant(vars, Rat(n));
            }
            case Tok::Ident: {
                auto idx = vars.index_of(t.text);
                if (!idx) throw ParseError("unknown variable name '" + t.text + "'", t.line, t.col);
                lex.advance();
                return MPoly::variable(vars, *idx);
            }
            case Tok::LParen: {
                lex.advance();
                MPoly inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                fail("expected number, variable, or '('");
        }
    }
};

} // namespace

MPoly parse_poly(const std::string& text, const VarSet& vars) {
    Parser p(text, vars);
    MPoly r = p.expr();
    if (p.lex.cur.kind == Tok::Slash)
        p.fail("'/' outside a rational literal is not valid in a polynomial");
    if (p.lex.cur.kind != Tok::End) p.fail("trailing input");
    return r;
}

RatFn parse_ratexpr(const std::string& text, const VarSet& vars) {
    Parser p(text, vars);
    MPoly num = p.expr();
    if (p.lex.cur.kind == Tok::Slash) {
        p.lex.advance();
        MPoly den = p.expr();
        if (p.lex.cur.kind != Tok::End) p.fail("trailing input");
        if (den.is_zero()) p.fail("denominator is identically zero");
        return RatFn(num, den);
    }
    if (p.lex.cur.kind != Tok::End) p.fail("trailing input");
    return RatFn(num);
}

std::array<RatFn, 3> parse_param_triple(const std::string& text, const std::string& param) {
    VarSet vs = VarSet::single(param);
    // split on top-level commas (parentheses are the only nesting)
    std::vector<std::string> parts;
    int depth = 0;
    std::string curp;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(curp);
            curp.clear();
        } else {
            curp += c;
        }
    }
    parts.push_back(curp);
    if (parts.size() != 3)
        throw ParseError("expected three comma-separated coordinates, got " +
                             std::to_string(parts.size()),
                         1, 1);
    std::array<RatFn, 3> out{RatFn(MPoly(vs)), RatFn(MPoly(vs)), RatFn(MPoly(vs))};
    for (int i = 0; i < 3; ++i) out[i] = parse_ratexpr(parts[i], vs);
    return out;
}

} // namespace tsurf
