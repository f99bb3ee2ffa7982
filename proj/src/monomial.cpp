#include "sstk/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sstk {

Monomial Monomial::variable(const std::string& name, int exp2)
{
    Monomial m;
    if (exp2 != 0) m.f_.emplace_back(name, exp2);
    return m;
}

int Monomial::exp2(const std::string& name) const
{
    auto it = std::lower_bound(f_.begin(), f_.end(), name,
                               [](const auto& p, const std::string& n) { return p.first < n; });
    if (it != f_.end() && it->first == name) return it->second;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const
{
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            r.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            r.f_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.f_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const
{
    Monomial r;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            r.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            return std::nullopt; // o has a variable we lack
        } else {
            int e = a->second - b->second;
            if (e < 0) return std::nullopt;
            if (e != 0) r.f_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const
{
    Monomial r;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            int e = std::min(a->second, b->second);
            if (e != 0) r.f_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::pow(int k) const
{
    Monomial r;
    if (k == 0) return r;
    r.f_ = f_;
    for (auto& p : r.f_) p.second *= k;
    return r;
}

std::optional<Monomial> Monomial::sqrt() const
{
    Monomial r;
    r.f_ = f_;
    for (auto& p : r.f_) {
        if (p.second % 2 != 0) return std::nullopt; // would need a quarter power
        p.second /= 2;
    }
    return r;
}

Monomial Monomial::without(const std::string& name) const
{
    Monomial r;
    for (const auto& p : f_)
        if (p.first != name) r.f_.push_back(p);
    return r;
}

int Monomial::total_exp2() const
{
    int t = 0;
    for (const auto& p : f_) t += p.second;
    return t;
}

bool Monomial::has_fractional() const
{
    for (const auto& p : f_)
        if (p.second % 2 != 0) return true;
    return false;
}

void Monomial::collect_vars(std::set<std::string>& out) const
{
    for (const auto& p : f_) out.insert(p.first);
}

double Monomial::eval(const std::map<std::string, double>& env) const
{
    double v = 1.0;
    for (const auto& p : f_) {
        auto it = env.find(p.first);
        if (it == env.end()) throw DomainError("eval: no value for variable " + p.first);
        double x = it->second;
        if (p.second % 2 == 0) {
            int k = p.second / 2;
            double acc = 1.0, base = x;
            for (int i = std::abs(k); i > 0; i >>= 1) {
                if (i & 1) acc *= base;
                base *= base;
            }
            v *= (k >= 0) ? acc : 1.0 / acc;
        } else {
            if (x < 0)
                throw DomainError("eval: negative value for radical variable " + p.first);
            v *= std::pow(x, 0.5 * p.second);
        }
    }
    return v;
}

Rat Monomial::eval_exact(const std::map<std::string, Rat>& env) const
{
    Rat v(1);
    for (const auto& p : f_) {
        if (p.second % 2 != 0)
            throw DomainError("eval_exact: fractional exponent on " + p.first);
        auto it = env.find(p.first);
        if (it == env.end()) throw DomainError("eval_exact: no value for variable " + p.first);
        v *= rat_pow(it->second, p.second / 2);
    }
    return v;
}

std::string Monomial::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& p : f_) {
        if (!first) os << "*";
        first = false;
        os << p.first;
        if (p.second == 2) continue;
        if (p.second % 2 == 0)
            os << "^" << p.second / 2;
        else
            os << "^(" << p.second << "/2)";
    }
    return os.str();
}

int Monomial::cmp(const Monomial& a, const Monomial& b)
{
    int ta = a.total_exp2(), tb = b.total_exp2();
    if (ta != tb) return ta < tb ? -1 : 1;
    auto i = a.f_.begin();
    auto j = b.f_.begin();
    while (i != a.f_.end() || j != b.f_.end()) {
        // Missing variable counts as exponent 0; variables walked in name order.
        if (j == b.f_.end() || (i != a.f_.end() && i->first < j->first)) return 1;
        if (i == a.f_.end() || j->first < i->first) return -1;
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;
}

} // namespace sstk
