#include "sstk/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace sstk {

bool Polynomial::is_constant() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

std::optional<Rat> Polynomial::as_constant() const
{
    if (t_.empty()) return Rat(0);
    if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
    return std::nullopt;
}

void Polynomial::add_term(const Monomial& m, const Rat& c)
{
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::times(const Rat& c) const
{
    Polynomial r;
    if (c == 0) return r;
    r.t_ = t_;
    for (auto& [m, k] : r.t_) k *= c;
    return r;
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial acc(Rat(1));
    Polynomial base = *this;
    for (int i = k; i > 0; i >>= 1) {
        if (i & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

std::pair<Monomial, Rat> Polynomial::leading() const
{
    if (t_.empty()) throw DomainError("leading term of zero polynomial");
    auto it = t_.rbegin();
    return {it->first, it->second};
}

Rat Polynomial::content_signed() const
{
    if (t_.empty()) return Rat(0);
    Int gn = 0, ld = 1;
    for (const auto& [m, c] : t_) {
        gn = boost::multiprecision::gcd(gn, boost::multiprecision::numerator(c) < 0
                                                ? Int(-boost::multiprecision::numerator(c))
                                                : boost::multiprecision::numerator(c));
        ld = boost::multiprecision::lcm(ld, boost::multiprecision::denominator(c));
    }
    Rat content(gn, ld);
    if (leading().second < 0) content = -content;
    return content;
}

Monomial Polynomial::monomial_gcd() const
{
    if (t_.empty()) return Monomial();
    auto it = t_.begin();
    Monomial g = it->first;
    for (++it; it != t_.end(); ++it) {
        g = g.gcd(it->first);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const
{
    Polynomial r;
    for (const auto& [mm, c] : t_) {
        auto q = mm.divided_by(m);
        if (!q) throw DomainError("divided_by_monomial: monomial does not divide");
        r.add_term(*q, c);
    }
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const
{
    Polynomial r;
    for (const auto& [mm, c] : t_) r.add_term(mm.times(m), c);
    return r;
}

std::optional<Polynomial> Polynomial::divided_exactly(const Polynomial& d) const
{
    if (d.is_zero()) return std::nullopt;
    Polynomial rem = *this;
    Polynomial quo;
    auto [dm, dc] = d.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        auto qm = rm.divided_by(dm);
        if (!qm) return std::nullopt;
        Rat qc = rc / dc;
        Polynomial t(*qm, qc);
        quo = quo + t;
        rem = rem - t * d;
    }
    return quo;
}

std::optional<Polynomial> Polynomial::sqrt_exact() const
{
    if (is_zero()) return Polynomial();
    auto [lm, lc] = leading();
    auto sc = rat_sqrt(lc);
    if (!sc) return std::nullopt;
    auto sm = lm.sqrt();
    if (!sm) return std::nullopt;
    Polynomial s(*sm, *sc);
    // Long square root: peel terms off P - s^2 from the top.
    int guard = 4 * (int)t_.size() * ((int)t_.size() + 4) + 64;
    while (guard-- > 0) {
        Polynomial rem = *this - s * s;
        if (rem.is_zero()) return s;
        auto [rm, rc] = rem.leading();
        auto tm = rm.divided_by(*sm);
        if (!tm) return std::nullopt;
        s.add_term(*tm, rc / (2 * *sc));
    }
    return std::nullopt;
}

int Polynomial::min_exp2(const std::string& var) const
{
    int mn = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int e = m.exp2(var);
        if (first || e < mn) mn = e;
        first = false;
        if (mn == 0) break;
    }
    return mn;
}

int Polynomial::max_exp2(const std::string& var) const
{
    int mx = 0;
    for (const auto& [m, c] : t_) mx = std::max(mx, m.exp2(var));
    return mx;
}

bool Polynomial::depends_on(const std::string& var) const
{
    for (const auto& [m, c] : t_)
        if (m.depends_on(var)) return true;
    return false;
}

std::set<std::string> Polynomial::vars() const
{
    std::set<std::string> s;
    for (const auto& [m, c] : t_) m.collect_vars(s);
    return s;
}

bool Polynomial::has_fractional() const
{
    for (const auto& [m, c] : t_)
        if (m.has_fractional()) return true;
    return false;
}

double Polynomial::eval(const std::map<std::string, double>& env) const
{
    double v = 0.0;
    for (const auto& [m, c] : t_) v += rat_double(c) * m.eval(env);
    return v;
}

Rat Polynomial::eval_exact(const std::map<std::string, Rat>& env) const
{
    Rat v(0);
    for (const auto& [m, c] : t_) v += c * m.eval_exact(env);
    return v;
}

std::string Polynomial::str() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat c = it->second;
        const Monomial& m = it->first;
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << m.str();
        } else {
            os << rat_str(a) << "*" << m.str();
        }
    }
    return os.str();
}

} // namespace sstk
