#include "sstk/chart.hpp"

#include <cmath>

namespace sstk {

Chart::Chart(std::string name, std::vector<VarSpec> vars, std::vector<SqrtSym> derived,
             std::set<std::string> positive_params)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      derived_(std::move(derived)),
      positive_params_(std::move(positive_params))
{
    std::set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v.name).second)
            throw ChartError("chart " + name_ + ": duplicate variable " + v.name);
    for (const auto& d : derived_)
        if (!seen.insert(d.name).second)
            throw ChartError("chart " + name_ + ": derived symbol shadows " + d.name);
}

std::optional<int> Chart::index(const std::string& name) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return (int)i;
    return std::nullopt;
}

const SqrtSym* Chart::find_derived(const std::string& name) const
{
    for (const auto& d : derived_)
        if (d.name == name) return &d;
    return nullptr;
}

std::set<std::string> Chart::radical_ok() const
{
    std::set<std::string> s = positive_params_;
    for (const auto& v : vars_)
        if (v.radial) s.insert(v.name);
    for (const auto& d : derived_) s.insert(d.name);
    return s;
}

SymExpr Chart::d_coord(const SymExpr& f, int i) const
{
    const std::string& v = vars_.at(i).name;
    SymExpr df = f.derivative(v);
    for (const auto& d : derived_) {
        if (!f.depends_on(d.name)) continue;
        SymExpr dsq = poly_derivative(d.square, v);
        if (dsq.is_zero()) continue;
        // d(sym)/dv = (d square/dv) / (2 sym)
        SymExpr chain = dsq / (SymExpr(2) * SymExpr::variable(d.name));
        df += f.derivative(d.name) * chain;
    }
    return df;
}

void Chart::complete_env(std::map<std::string, double>& env) const
{
    for (const auto& d : derived_) {
        double sq = d.square.eval(env);
        if (sq < 0)
            throw DomainError("chart " + name_ + ": " + d.name +
                              "^2 evaluates negative at the given point");
        env[d.name] = std::sqrt(sq);
    }
}

void Chart::validate_coeff(const SymExpr& e) const
{
    auto ok = radical_ok();
    for (const auto& v : vars_) {
        if (v.angular && e.depends_on(v.name))
            throw ChartError("chart " + name_ + ": coefficient depends on angular variable " +
                             v.name);
    }
    auto check_poly = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            for (const auto& [name, e2] : m.factors())
                if (e2 % 2 != 0 && !ok.count(name))
                    throw ChartError("chart " + name_ + ": half-integer power on '" + name +
                                     "' which is not flagged positive");
        }
    };
    check_poly(e.num());
    check_poly(e.den());
}

bool Chart::operator==(const Chart& o) const
{
    return name_ == o.name_ && vars_ == o.vars_ && derived_ == o.derived_ &&
           positive_params_ == o.positive_params_;
}

Chart make_chart(const std::string& name, const std::vector<std::string>& vars)
{
    std::vector<VarSpec> vs;
    vs.reserve(vars.size());
    for (const auto& v : vars) vs.push_back({v});
    return Chart(name, vs);
}

} // namespace sstk
