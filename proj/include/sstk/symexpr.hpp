#ifndef SSTK_SYMEXPR_HPP
#define SSTK_SYMEXPR_HPP

#include "sstk/polynomial.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sstk {

// Exact rational function num/den.  Canonical form keeps the denominator
// primitive with positive leading coefficient, cancels common monomial
// factors and the full num/den division when it happens to be exact.
// Equality is semantic: a/b == c/d iff a*d - c*b is the zero polynomial.
class SymExpr {
public:
    SymExpr() : num_(), den_(Rat(1)) {}
    SymExpr(const Rat& c) : num_(c), den_(Rat(1)) {}
    SymExpr(long c) : num_(Rat(c)), den_(Rat(1)) {}
    explicit SymExpr(const Polynomial& p) : num_(p), den_(Rat(1)) {}
    SymExpr(const Polynomial& num, const Polynomial& den);
    static SymExpr variable(const std::string& name, int exp2 = 2)
    {
        return SymExpr(Polynomial::variable(name, exp2));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::optional<Rat> as_constant() const;

    SymExpr operator+(const SymExpr& o) const;
    SymExpr operator-(const SymExpr& o) const;
    SymExpr operator*(const SymExpr& o) const;
    SymExpr operator/(const SymExpr& o) const; // throws DomainError on zero divisor
    SymExpr operator-() const;
    SymExpr& operator+=(const SymExpr& o) { return *this = *this + o; }
    SymExpr& operator-=(const SymExpr& o) { return *this = *this - o; }
    SymExpr& operator*=(const SymExpr& o) { return *this = *this * o; }
    SymExpr pow_int(int k) const;

    std::optional<SymExpr> sqrt_exact() const;

    // Partial derivative; half powers differentiate as d x^(k/2) = (k/2) x^(k/2-1).
    SymExpr derivative(const std::string& var) const;

    // Exact composition.  A replacement hit by a half-integer power must have
    // an exact square root in the ring, otherwise SubstitutionError.
    SymExpr substitute(const std::string& var, const SymExpr& repl) const;
    SymExpr substitute_simultaneous(const std::map<std::string, SymExpr>& repl) const;

    // Rewrites even powers of `radical` through radical^2 = square, leaving at
    // most first powers.  Imposes the defining relation of a sqrt symbol, so a
    // zero function reduces to the zero expression.
    SymExpr reduce_radical(const std::string& radical, const Polynomial& square) const;

    bool equals(const SymExpr& o) const;
    std::optional<Rat> constant_multiple_of(const SymExpr& o) const;

    // Cancels every common factor from a candidate list (with multiplicity).
    SymExpr reduced_with(const std::vector<Polynomial>& candidates) const;

    double eval(const std::map<std::string, double>& env) const;
    Rat eval_exact(const std::map<std::string, Rat>& env) const;

    std::set<std::string> vars() const;
    bool depends_on(const std::string& var) const
    {
        return num_.depends_on(var) || den_.depends_on(var);
    }

    std::string str() const;

    bool operator==(const SymExpr& o) const { return equals(o); }

private:
    void canonicalize();
    Polynomial num_, den_;
};

// Derivative of a bare polynomial; the result is rational when a term holds
// x^(1/2) (its derivative brings in x^(-1/2)).
SymExpr poly_derivative(const Polynomial& p, const std::string& var);

SymExpr poly_substitute(const Polynomial& p, const std::string& var, const SymExpr& repl);

} // namespace sstk

#endif
