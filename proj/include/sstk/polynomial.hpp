#ifndef SSTK_POLYNOMIAL_HPP
#define SSTK_POLYNOMIAL_HPP

#include "sstk/monomial.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace sstk {

// Multivariate polynomial over Q with monomials that may carry half-integer
// exponents.  No zero coefficients are stored; term order is graded lex, so
// serialization is deterministic.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rat, MonomialLess>;

    Polynomial() = default; // zero
    explicit Polynomial(const Rat& c) { add_term(Monomial(), c); }
    explicit Polynomial(long c) { add_term(Monomial(), Rat(c)); }
    Polynomial(const Monomial& m, const Rat& c) { add_term(m, c); }
    static Polynomial variable(const std::string& name, int exp2 = 2)
    {
        return Polynomial(Monomial::variable(name, exp2), Rat(1));
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t_.size() == 1; }
    std::optional<Rat> as_constant() const;
    size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial times(const Rat& c) const;
    Polynomial pow(int k) const; // k >= 0

    std::pair<Monomial, Rat> leading() const; // largest term; poly must be nonzero

    // gcd of all coefficients, carrying the sign of the leading coefficient.
    Rat content_signed() const;
    Monomial monomial_gcd() const;
    Polynomial divided_by_monomial(const Monomial& m) const; // must divide each term
    Polynomial times_monomial(const Monomial& m) const;

    std::optional<Polynomial> divided_exactly(const Polynomial& d) const;
    std::optional<Polynomial> sqrt_exact() const;

    int min_exp2(const std::string& var) const; // min over terms, 0 if var absent somewhere
    int max_exp2(const std::string& var) const;
    bool depends_on(const std::string& var) const;
    std::set<std::string> vars() const;
    bool has_fractional() const;

    double eval(const std::map<std::string, double>& env) const;
    Rat eval_exact(const std::map<std::string, Rat>& env) const;

    std::string str() const;

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

private:
    Terms t_;
};

} // namespace sstk

#endif
