#ifndef SSTK_DIFF_FORM_HPP
#define SSTK_DIFF_FORM_HPP

#include "sstk/chart.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace sstk {

// Differential k-form with SymExpr coefficients on the elementary wedge
// monomials of a chart.  Index tuples are kept strictly increasing, which is
// the canonical antisymmetric representation; no zero coefficients stored.
class DiffForm {
public:
    using Coeffs = std::map<std::vector<int>, SymExpr>;

    DiffForm() = default;
    DiffForm(Chart chart, int degree);

    static DiffForm scalar(const Chart& c, const SymExpr& f); // degree 0
    // Sum dx_i ^ dx_{i+n} over the first half of the coordinates.
    static DiffForm canonical(const Chart& c);

    const Chart& chart() const { return chart_; }
    int degree() const { return deg_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // Adds c * dx_{idx[0]} ^ ... (indices in any order, sign handled here).
    void add_term(std::vector<int> idx, const SymExpr& c);
    const SymExpr* coeff(const std::vector<int>& idx) const;

    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm times(const SymExpr& f) const;

    DiffForm wedge(const DiffForm& o) const;
    DiffForm ext_deriv() const;

    // Coefficient of omega^n against dvol for a 2-form on a 2n-chart; the
    // canonical form gives n! under this normalization.  Computed as
    // n! * Pf(Omega) by sparse Pfaffian expansion with memoization.
    SymExpr top_power_coeff() const;

    // Antisymmetric coefficient matrix evaluated at a point (degree 2).
    Eigen::MatrixXd eval_matrix(const std::map<std::string, double>& env) const;

    bool equals(const DiffForm& o) const;
    // The single rational c with *this == c * o, if it exists.
    std::optional<Rat> constant_multiple_of(const DiffForm& o) const;

    std::string str() const;

private:
    Chart chart_;
    int deg_ = 0;
    Coeffs c_;
};

} // namespace sstk

#endif
