#include "sstk/symexpr.hpp"

#include <cmath>
#include <sstream>

namespace sstk {

SymExpr::SymExpr(const Polynomial& num, const Polynomial& den) : num_(num), den_(den)
{
    if (den_.is_zero()) throw DomainError("SymExpr: zero denominator");
    canonicalize();
}

void SymExpr::canonicalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial(Rat(1));
        return;
    }
    // Common monomial factor of numerator and denominator.
    Monomial g = num_.monomial_gcd().gcd(den_.monomial_gcd());
    if (!g.is_one()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
    // Exact division when available.
    if (!den_.is_constant()) {
        if (auto q = num_.divided_exactly(den_)) {
            num_ = *q;
            den_ = Polynomial(Rat(1));
        } else if (auto q2 = den_.divided_exactly(num_)) {
            // num/den = 1/(den/num)
            den_ = *q2;
            num_ = Polynomial(Rat(1));
        }
    }
    // Denominator primitive with positive leading coefficient.
    Rat c = den_.content_signed();
    if (c != 1) {
        den_ = den_.times(Rat(1) / c);
        num_ = num_.times(Rat(1) / c);
    }
}

std::optional<Rat> SymExpr::as_constant() const
{
    auto n = num_.as_constant();
    auto d = den_.as_constant();
    if (n && d) return *n / *d;
    return std::nullopt;
}

SymExpr SymExpr::operator+(const SymExpr& o) const
{
    if (den_ == o.den_) return SymExpr(num_ + o.num_, den_);
    return SymExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SymExpr SymExpr::operator-(const SymExpr& o) const
{
    if (den_ == o.den_) return SymExpr(num_ - o.num_, den_);
    return SymExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SymExpr SymExpr::operator*(const SymExpr& o) const
{
    return SymExpr(num_ * o.num_, den_ * o.den_);
}

SymExpr SymExpr::operator/(const SymExpr& o) const
{
    if (o.is_zero()) throw DomainError("division by zero expression");
    return SymExpr(num_ * o.den_, den_ * o.num_);
}

SymExpr SymExpr::operator-() const
{
    SymExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

SymExpr SymExpr::pow_int(int k) const
{
    if (k < 0) {
        if (is_zero()) throw DomainError("zero to a negative power");
        return SymExpr(den_.pow(-k), num_.pow(-k));
    }
    return SymExpr(num_.pow(k), den_.pow(k));
}

std::optional<SymExpr> SymExpr::sqrt_exact() const
{
    auto sn = num_.sqrt_exact();
    if (!sn) return std::nullopt;
    auto sd = den_.sqrt_exact();
    if (!sd) return std::nullopt;
    return SymExpr(*sn, *sd);
}

SymExpr poly_derivative(const Polynomial& p, const std::string& var)
{
    SymExpr acc;
    for (const auto& [m, c] : p.terms()) {
        int e2 = m.exp2(var);
        if (e2 == 0) continue;
        Rat factor = c * Rat(e2, 2);
        Monomial rest = m.without(var);
        int ne2 = e2 - 2;
        if (ne2 >= 0) {
            acc += SymExpr(Polynomial(rest.times(Monomial::variable(var, ne2)), factor));
        } else {
            acc += SymExpr(Polynomial(rest, factor),
                           Polynomial::variable(var, -ne2));
        }
    }
    return acc;
}

SymExpr SymExpr::derivative(const std::string& var) const
{
    if (!depends_on(var)) return SymExpr();
    SymExpr dn = poly_derivative(num_, var);
    if (!den_.depends_on(var)) return dn / SymExpr(den_);
    SymExpr dd = poly_derivative(den_, var);
    return (dn * SymExpr(den_) - SymExpr(num_) * dd) / SymExpr(den_ * den_);
}

SymExpr poly_substitute(const Polynomial& p, const std::string& var, const SymExpr& repl)
{
    SymExpr acc;
    std::optional<SymExpr> sqrt_repl;
    for (const auto& [m, c] : p.terms()) {
        int e2 = m.exp2(var);
        SymExpr term(Polynomial(m.without(var), c));
        if (e2 != 0) {
            if (e2 % 2 == 0) {
                term *= repl.pow_int(e2 / 2);
            } else {
                if (!sqrt_repl) {
                    auto s = repl.sqrt_exact();
                    if (!s)
                        throw SubstitutionError(
                            "substituting " + var +
                            ": replacement has no exact square root but a half "
                            "power is present");
                    sqrt_repl = *s;
                }
                term *= sqrt_repl->pow_int(e2);
            }
        }
        acc += term;
    }
    return acc;
}

SymExpr SymExpr::substitute(const std::string& var, const SymExpr& repl) const
{
    if (!depends_on(var)) return *this;
    SymExpr n = poly_substitute(num_, var, repl);
    SymExpr d = poly_substitute(den_, var, repl);
    return n / d;
}

SymExpr SymExpr::substitute_simultaneous(const std::map<std::string, SymExpr>& repl) const
{
    // Two passes through fresh names so replacements cannot capture each other.
    SymExpr cur = *this;
    std::vector<std::pair<std::string, const SymExpr*>> temps;
    int k = 0;
    for (const auto& [v, e] : repl) {
        if (!cur.depends_on(v)) continue;
        std::string tmp = "@tmp" + std::to_string(k++);
        cur = cur.substitute(v, SymExpr::variable(tmp));
        temps.emplace_back(tmp, &e);
    }
    for (const auto& [tmp, e] : temps) cur = cur.substitute(tmp, *e);
    return cur;
}

static Polynomial reduce_radical_poly(const Polynomial& p, const std::string& radical,
                                      const Polynomial& square)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int e2 = m.exp2(radical);
        int k = e2 / 2; // integer exponent of the radical symbol
        if (e2 % 2 != 0) throw DomainError("reduce_radical: fractional power of " + radical);
        Polynomial term(m.without(radical), c);
        if (k % 2 != 0) term = term * Polynomial::variable(radical);
        out = out + term * square.pow(k / 2);
    }
    return out;
}

SymExpr SymExpr::reduce_radical(const std::string& radical, const Polynomial& square) const
{
    return SymExpr(reduce_radical_poly(num_, radical, square),
                   reduce_radical_poly(den_, radical, square));
}

bool SymExpr::equals(const SymExpr& o) const
{
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::optional<Rat> SymExpr::constant_multiple_of(const SymExpr& o) const
{
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return std::nullopt;
    SymExpr q = *this / o;
    auto c = q.as_constant();
    if (c && *c != 0) return c;
    return std::nullopt;
}

SymExpr SymExpr::reduced_with(const std::vector<Polynomial>& candidates) const
{
    Polynomial n = num_, d = den_;
    for (const auto& f : candidates) {
        if (f.is_constant()) continue;
        for (;;) {
            auto qn = n.divided_exactly(f);
            if (!qn) break;
            auto qd = d.divided_exactly(f);
            if (!qd) break;
            n = *qn;
            d = *qd;
        }
    }
    return SymExpr(n, d);
}

double SymExpr::eval(const std::map<std::string, double>& env) const
{
    double d = den_.eval(env);
    if (d == 0.0) throw PoleError("evaluation at a pole");
    return num_.eval(env) / d;
}

Rat SymExpr::eval_exact(const std::map<std::string, Rat>& env) const
{
    Rat d = den_.eval_exact(env);
    if (d == 0) throw PoleError("evaluation at a pole");
    return num_.eval_exact(env) / d;
}

std::set<std::string> SymExpr::vars() const
{
    std::set<std::string> s = num_.vars();
    for (const auto& v : den_.vars()) s.insert(v);
    return s;
}

std::string SymExpr::str() const
{
    if (den_.is_constant()) {
        Rat d = *den_.as_constant();
        if (d == 1) return num_.str();
        // Denominator content is positive here; print as num/const.
        std::string n = num_.str();
        bool paren = num_.term_count() > 1;
        std::ostringstream os;
        if (paren)
            os << "(" << n << ")";
        else
            os << n;
        os << "/" << rat_str(d);
        return os.str();
    }
    std::ostringstream os;
    bool np = num_.term_count() > 1;
    if (np)
        os << "(" << num_.str() << ")";
    else
        os << num_.str();
    os << "/";
    // A bare denominator must re-parse as a whole: a single power like x^3 is
    // safe, anything else ("x*y", "2*x", sums) needs parentheses.
    bool dp = den_.term_count() > 1 || den_.leading().second != 1 ||
              den_.leading().first.factors().size() > 1;
    if (dp)
        os << "(" << den_.str() << ")";
    else
        os << den_.str();
    return os.str();
}

} // namespace sstk
