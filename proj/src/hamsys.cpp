#include "sstk/hamsys.hpp"

#include <cmath>

namespace sstk {

Observable Observable::symbolic(std::string name, const Chart& chart, const SymExpr& expr,
                                std::map<std::string, double> params)
{
    Observable o;
    o.name_ = std::move(name);
    o.chart_ = chart;
    o.params_ = std::move(params);
    o.sym_ = expr;
    o.dim_ = chart.dim();
    o.grads_.reserve(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) o.grads_.push_back(chart.d_coord(expr, i));
    return o;
}

Observable Observable::numeric(std::string name, int dim,
                               std::function<double(const Vec&, double)> fn,
                               std::function<Vec(const Vec&, double)> grad, bool time_dependent)
{
    Observable o;
    o.name_ = std::move(name);
    o.dim_ = dim;
    o.fn_ = std::move(fn);
    o.grad_fn_ = std::move(grad);
    o.time_dependent_ = time_dependent;
    return o;
}

std::map<std::string, double> Observable::env(const Vec& x) const
{
    std::map<std::string, double> e;
    for (int i = 0; i < dim_; ++i) e[chart_.var(i).name] = x[i];
    for (const auto& [k, v] : params_) e.emplace(k, v);
    chart_.complete_env(e);
    return e;
}

double Observable::value(const Vec& x, double t) const
{
    if (sym_) return sym_->eval(env(x));
    if (!fn_) throw DomainError("observable '" + name_ + "' has no value function");
    return fn_(x, t);
}

Vec Observable::gradient(const Vec& x, double t) const
{
    if (sym_) {
        auto e = env(x);
        Vec g(dim_);
        for (int i = 0; i < dim_; ++i) g[i] = grads_[i].eval(e);
        return g;
    }
    if (grad_fn_) return grad_fn_(x, t);
    if (!fn_) throw DomainError("observable '" + name_ + "' has no gradient");
    // central differences, step 1e-6 per-component scale
    Vec g(x.size());
    Vec xp = x, xm = x;
    for (int i = 0; i < x.size(); ++i) {
        double h = 1e-6 * std::max(1.0, std::abs(x[i]));
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        g[i] = (fn_(xp, t) - fn_(xm, t)) / (2 * h);
        xp[i] = xm[i] = x[i];
    }
    return g;
}

Mat poisson_matrix(const DiffForm& omega, const std::map<std::string, double>& params,
                   const Vec& x, PoissonInfo* info)
{
    const Chart& chart = omega.chart();
    std::map<std::string, double> env;
    for (int i = 0; i < chart.dim(); ++i) env[chart.var(i).name] = x[i];
    for (const auto& [k, v] : params) env.emplace(k, v);
    Mat O = omega.eval_matrix(env);

    Eigen::JacobiSVD<Mat> svd(O);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    PoissonInfo pi;
    pi.det = O.determinant();
    pi.cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    pi.degenerate = !(smin > 1e-12 * std::max(smax, 1e-300));
    pi.ill_conditioned = pi.cond > 1e12;
    if (info) *info = pi;
    if (pi.degenerate)
        throw DomainError("structure form is degenerate at the requested point (on Z)");
    // {f,g} = grad f . Pi grad g with Pi^T Omega = I.
    return O.transpose().inverse();
}

Mat poisson_matrix(const HamiltonianSystem& sys, const Vec& x, PoissonInfo* info)
{
    if (sys.poisson_fn) {
        Mat P = sys.poisson_fn(x);
        if (info) {
            info->det = P.determinant();
            info->cond = 0;
            info->degenerate = false;
            info->ill_conditioned = false;
        }
        return P;
    }
    if (!sys.structure) throw DomainError("system has neither a structure form nor a Poisson matrix");
    return poisson_matrix(*sys.structure, sys.params, x, info);
}

Vec ham_field(const HamiltonianSystem& sys, const Vec& x, double t)
{
    Mat P = poisson_matrix(sys, x);
    Vec g = sys.hamiltonian.gradient(x, t);
    Vec f = P * g;
    if (sys.time_factor) {
        double tf = sys.time_factor->value(x, t);
        if (!(tf > 0)) throw DomainError("time factor is not positive at the evaluated point");
        f *= tf;
    }
    return f;
}

double poisson_bracket(const HamiltonianSystem& sys, const Observable& f, const Observable& g,
                       const Vec& x, double t)
{
    Mat P = poisson_matrix(sys, x);
    return f.gradient(x, t).dot(P * g.gradient(x, t));
}

HamiltonianSystem reparametrize(const HamiltonianSystem& sys, const Observable& factor)
{
    HamiltonianSystem out = sys;
    if (!sys.time_factor) {
        out.time_factor = factor;
    } else {
        Observable prev = *sys.time_factor;
        Observable f = factor;
        out.time_factor = Observable::numeric(
            prev.name() + "*" + f.name(), sys.chart.dim(),
            [prev, f](const Vec& x, double t) { return prev.value(x, t) * f.value(x, t); });
    }
    out.phys_time_rate = out.time_factor;
    return out;
}

} // namespace sstk
