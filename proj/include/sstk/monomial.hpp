#ifndef SSTK_MONOMIAL_HPP
#define SSTK_MONOMIAL_HPP

#include "sstk/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sstk {

// A product of variable powers.  Exponents are stored doubled (exp2), so
// x^(1/2) has exp2 = 1 and x^3 has exp2 = 6.  Half-integer exponents are the
// bookkeeping device for radicals on positive quantities: working with exp2
// is the same as working with integer orders in rho, where rho^2 = x.
// Stored exponents are strictly positive; quotients live in SymExpr.
class Monomial {
public:
    using Factors = std::vector<std::pair<std::string, int>>; // sorted by name

    Monomial() = default;
    static Monomial variable(const std::string& name, int exp2 = 2);

    bool is_one() const { return f_.empty(); }
    int exp2(const std::string& name) const;
    const Factors& factors() const { return f_; }

    Monomial times(const Monomial& o) const;
    std::optional<Monomial> divided_by(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    Monomial pow(int k) const; // k >= 0
    std::optional<Monomial> sqrt() const;

    // Drops one variable entirely; used for substitution.
    Monomial without(const std::string& name) const;

    int total_exp2() const;
    bool has_fractional() const;
    void collect_vars(std::set<std::string>& out) const;
    bool depends_on(const std::string& name) const { return exp2(name) != 0; }

    double eval(const std::map<std::string, double>& env) const;
    Rat eval_exact(const std::map<std::string, Rat>& env) const;

    std::string str() const;

    // Graded lexicographic order: total degree first, then variable-wise
    // comparison over the sorted name union.  Deterministic by construction.
    static int cmp(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return f_ == o.f_; }

private:
    Factors f_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return Monomial::cmp(a, b) < 0;
    }
};

} // namespace sstk

#endif
