#include "sstk/parse.hpp"

#include <cctype>

namespace sstk {

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws()
    {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(i) + " in \"" + s + "\"");
    }
    std::string ident()
    {
        skip_ws();
        size_t j = i;
        while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }
    Int integer()
    {
        skip_ws();
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw ParseError("expected digits at position " + std::to_string(i));
        Int v(s.substr(i, j - i));
        i = j;
        return v;
    }
};

struct Parser {
    Lexer lx;
    const std::set<std::string>* radical_ok;

    SymExpr expr()
    {
        SymExpr v = term();
        for (;;) {
            if (lx.accept('+'))
                v += term();
            else if (lx.accept('-'))
                v -= term();
            else
                return v;
        }
    }

    SymExpr term()
    {
        SymExpr v = unary();
        for (;;) {
            if (lx.accept('*'))
                v *= unary();
            else if (lx.accept('/'))
                v = v / unary();
            else
                return v;
        }
    }

    SymExpr unary()
    {
        if (lx.accept('-')) return -unary();
        return power();
    }

    // exponent as doubled value (exp2)
    int exponent2()
    {
        bool paren = lx.accept('(');
        bool neg = lx.accept('-');
        Int num = lx.integer();
        Int den = 1;
        if (paren && lx.accept('/')) den = lx.integer();
        if (paren) lx.expect(')');
        if (den != 1 && den != 2)
            throw ParseError("exponent denominator must be 1 or 2");
        Int e2 = num * (den == 1 ? 2 : 1);
        if (e2 > 1000) throw ParseError("exponent too large");
        int v = e2.convert_to<int>();
        return neg ? -v : v;
    }

    SymExpr power()
    {
        char c = lx.peek();
        if (c == '(') {
            lx.expect('(');
            SymExpr v = expr();
            lx.expect(')');
            if (lx.accept('^')) return apply_pow(v, exponent2(), /*is_var=*/false, "");
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            Rat v(lx.integer());
            if (lx.accept('^')) return apply_pow(SymExpr(v), exponent2(), false, "");
            return SymExpr(v);
        }
        if (std::isalpha((unsigned char)c) || c == '_' || c == '@') {
            std::string name;
            if (c == '@') {
                ++lx.i;
                name = "@" + lx.ident();
            } else {
                name = lx.ident();
            }
            if (name.empty()) throw ParseError("empty identifier");
            if (lx.accept('^')) {
                int e2 = exponent2();
                if (e2 % 2 != 0 && radical_ok && !radical_ok->count(name))
                    throw ParseError("half-integer exponent on variable '" + name +
                                     "' which is not flagged radial-positive");
                if (e2 >= 0) return SymExpr::variable(name, e2);
                return SymExpr(Polynomial(Rat(1)), Polynomial::variable(name, -e2));
            }
            return SymExpr::variable(name);
        }
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                         std::to_string(lx.i));
    }

    SymExpr apply_pow(const SymExpr& base, int e2, bool, const std::string&)
    {
        if (e2 % 2 == 0) return base.pow_int(e2 / 2);
        auto s = base.sqrt_exact();
        if (!s)
            throw ParseError("half-integer power of a non-square expression");
        return s->pow_int(e2);
    }
};

} // namespace

SymExpr parse_expr(const std::string& text, const std::set<std::string>* radical_ok)
{
    Parser p{Lexer{text}, radical_ok};
    SymExpr v = p.expr();
    if (!p.lx.eof())
        throw ParseError("trailing input at position " + std::to_string(p.lx.i) + " in \"" +
                         text + "\"");
    return v;
}

} // namespace sstk
