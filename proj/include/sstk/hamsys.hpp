#ifndef SSTK_HAMSYS_HPP
#define SSTK_HAMSYS_HPP

#include "sstk/diff_form.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>

namespace sstk {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// A scalar on a chart, compiled for numeric evaluation.  Symbolic observables
// get exact gradients through the chart chain rule; numeric ones use a
// supplied gradient or central finite differences with step 1e-6 * scale.
class Observable {
public:
    Observable() = default;

    static Observable symbolic(std::string name, const Chart& chart, const SymExpr& expr,
                               std::map<std::string, double> params = {});
    static Observable numeric(std::string name, int dim,
                              std::function<double(const Vec&, double)> fn,
                              std::function<Vec(const Vec&, double)> grad = nullptr,
                              bool time_dependent = false);

    const std::string& name() const { return name_; }
    bool valid() const { return sym_.has_value() || fn_ != nullptr; }
    bool time_dependent() const { return time_dependent_; }
    bool symbolic_form() const { return sym_.has_value(); }
    const std::optional<SymExpr>& expr() const { return sym_; }

    double value(const Vec& x, double t = 0.0) const;
    Vec gradient(const Vec& x, double t = 0.0) const;

private:
    std::string name_;
    Chart chart_;
    std::map<std::string, double> params_;
    std::optional<SymExpr> sym_;
    std::vector<SymExpr> grads_;
    std::function<double(const Vec&, double)> fn_;
    std::function<Vec(const Vec&, double)> grad_fn_;
    bool time_dependent_ = false;
    int dim_ = 0;

    std::map<std::string, double> env(const Vec& x) const;
};

struct PoissonInfo {
    double det = 0.0;
    double cond = 0.0;
    bool degenerate = false;
    bool ill_conditioned = false;
};

struct HamiltonianSystem {
    std::string name;
    Chart chart;
    std::map<std::string, double> params;

    std::optional<DiffForm> structure; // degree-2 form, inverted pointwise
    std::function<Mat(const Vec&)> poisson_fn; // or an explicit Poisson matrix

    Observable hamiltonian;
    std::vector<Observable> integrals;
    std::optional<Observable> time_factor;   // dt = f dtau; scales the field
    std::optional<Observable> phys_time_rate; // physical-time rate when it differs
    std::optional<Observable> guard; // integration stops near {guard = 0}

    // Optional split gradients for the fixed-step leapfrog baseline
    // (canonical charts with H = T(p) + V(q) only).
    std::function<Vec(const Vec&)> grad_T, grad_V;

    bool time_dependent() const { return hamiltonian.time_dependent(); }
};

// Pointwise Poisson matrix Pi with {f,g} = grad(f)^T Pi grad(g).  For a
// structure form with matrix Omega this is the inverse transpose of Omega
// (equivalently -Omega^{-1}), which reproduces Hamilton's equations
// qdot = dH/dp, pdot = -dH/dq on the canonical form.  Throws DomainError at
// degenerate points; fills diagnostics when `info` is given.
Mat poisson_matrix(const HamiltonianSystem& sys, const Vec& x, PoissonInfo* info = nullptr);
Mat poisson_matrix(const DiffForm& omega, const std::map<std::string, double>& params,
                   const Vec& x, PoissonInfo* info = nullptr);

// X_H = time_factor * Pi * dH at (x, t).
Vec ham_field(const HamiltonianSystem& sys, const Vec& x, double t);

double poisson_bracket(const HamiltonianSystem& sys, const Observable& f, const Observable& g,
                       const Vec& x, double t = 0.0);

// Same system with the vector field multiplied by a positive factor; orbits
// are unchanged as unparametrized curves, and physical time is tracked with
// rate `factor`.
HamiltonianSystem reparametrize(const HamiltonianSystem& sys, const Observable& factor);

} // namespace sstk

#endif
