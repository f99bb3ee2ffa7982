#include "sstk/coordinate_map.hpp"

namespace sstk {

CoordinateMap::CoordinateMap(std::string name, Chart source, Chart target,
                             std::vector<MapComponent> components)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      comps_(std::move(components))
{
    if ((int)comps_.size() != target_.dim())
        throw ChartError("map " + name_ + ": expression count != target dimension");
}

CoordinateMap CoordinateMap::identity(const Chart& c)
{
    std::vector<MapComponent> comps;
    for (const auto& v : c.vars()) comps.push_back(MapComponent::of(SymExpr::variable(v.name)));
    return CoordinateMap("identity", c, c, std::move(comps));
}

std::map<int, SymExpr> CoordinateMap::component_differential(int j) const
{
    std::map<int, SymExpr> d;
    const MapComponent& mc = comps_.at(j);
    if (mc.opaque()) {
        for (const auto& [var, c] : mc.opaque_diff) {
            auto idx = source_.index(var);
            if (!idx) throw ChartError("opaque differential uses unknown variable " + var);
            if (!c.is_zero()) d[*idx] = c;
        }
        return d;
    }
    for (int i = 0; i < source_.dim(); ++i) {
        SymExpr di = source_.d_coord(*mc.expr, i);
        if (!di.is_zero()) d[i] = di;
    }
    return d;
}

std::vector<std::vector<SymExpr>> CoordinateMap::jacobian() const
{
    std::vector<std::vector<SymExpr>> J(target_.dim(),
                                        std::vector<SymExpr>(source_.dim(), SymExpr()));
    for (int j = 0; j < target_.dim(); ++j)
        for (const auto& [i, c] : component_differential(j)) J[j][i] = c;
    return J;
}

namespace {

// Replaces target-chart sqrt symbols appearing in a coefficient by their
// definitions, so the coefficient is expressed in plain target coordinates
// before substitution.  Only even powers can be expanded rationally.
SymExpr expand_target_derived(const SymExpr& c, const Chart& target)
{
    SymExpr cur = c;
    for (const auto& d : target.derived()) {
        if (!cur.depends_on(d.name)) continue;
        cur = cur.reduce_radical(d.name, d.square);
        if (cur.depends_on(d.name))
            throw ChartError("pullback: coefficient has an odd power of sqrt symbol " + d.name +
                             " which cannot be expressed in the target coordinates");
    }
    return cur;
}

} // namespace

DiffForm CoordinateMap::pullback(const DiffForm& a) const
{
    if (!(a.chart() == target_))
        throw ChartError("pullback: form lives on chart " + a.chart().name() +
                         ", expected " + target_.name());

    // Substitution table target var -> source expression.
    std::map<std::string, SymExpr> table;
    for (int j = 0; j < target_.dim(); ++j)
        if (!comps_[j].opaque()) table[target_.var(j).name] = *comps_[j].expr;

    std::vector<std::map<int, SymExpr>> dphi(target_.dim());
    for (int j = 0; j < target_.dim(); ++j) dphi[j] = component_differential(j);

    DiffForm out(source_, a.degree());
    for (const auto& [idx, c] : a.coeffs()) {
        SymExpr cexp = expand_target_derived(c, target_);
        for (const auto& v : cexp.vars()) {
            if (target_.index(v) && !table.count(v))
                throw ChartError("pullback: coefficient depends on " + v +
                                 " whose map component is opaque");
        }
        SymExpr csub = cexp.substitute_simultaneous(table);
        if (csub.is_zero()) continue;
        // Wedge together the pulled-back differentials of the factor indices.
        DiffForm acc = DiffForm::scalar(source_, csub);
        for (int j : idx) {
            DiffForm one(source_, 1);
            for (const auto& [i, coef] : dphi[j]) one.add_term({i}, coef);
            acc = acc.wedge(one);
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero()) out = out + acc;
    }
    return out;
}

std::vector<double> CoordinateMap::apply(const std::vector<double>& source_point) const
{
    if ((int)source_point.size() != source_.dim())
        throw ChartError("apply: point dimension mismatch");
    std::map<std::string, double> env;
    for (int i = 0; i < source_.dim(); ++i) env[source_.var(i).name] = source_point[i];
    source_.complete_env(env);
    std::vector<double> out(target_.dim());
    for (int j = 0; j < target_.dim(); ++j) {
        if (comps_[j].opaque())
            throw ChartError("apply: component " + target_.var(j).name + " is opaque");
        out[j] = comps_[j].expr->eval(env);
    }
    return out;
}

bool CoordinateMap::verify_inverse() const
{
    if (!inverse_) return false;
    try {
        CoordinateMap round = compose(*this, *inverse_); // target -> target
        for (int j = 0; j < target_.dim(); ++j) {
            if (round.components()[j].opaque()) return false;
            if (!round.components()[j].expr->equals(SymExpr::variable(target_.var(j).name)))
                return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

CoordinateMap compose(const CoordinateMap& phi, const CoordinateMap& psi)
{
    if (!(psi.target() == phi.source()))
        throw ChartError("compose: target of inner map is " + psi.target().name() +
                         ", expected " + phi.source().name());

    std::map<std::string, SymExpr> table;
    for (int j = 0; j < psi.target().dim(); ++j)
        if (!psi.components()[j].opaque())
            table[psi.target().var(j).name] = *psi.components()[j].expr;

    auto jac_psi = psi.jacobian();

    std::vector<MapComponent> comps;
    for (int j = 0; j < phi.target().dim(); ++j) {
        const MapComponent& mc = phi.components()[j];
        if (!mc.opaque()) {
            // A bare pass-through of an opaque inner component stays opaque.
            const SymExpr& e = *mc.expr;
            bool passthrough = false;
            for (int k = 0; k < psi.target().dim(); ++k) {
                const std::string& bn = psi.target().var(k).name;
                if (psi.components()[k].opaque() && e.depends_on(bn)) {
                    if (e.equals(SymExpr::variable(bn))) {
                        comps.push_back(psi.components()[k]);
                        passthrough = true;
                        break;
                    }
                    throw ChartError("compose: component depends on opaque variable " + bn);
                }
            }
            if (passthrough) continue;
            comps.push_back(MapComponent::of(e.substitute_simultaneous(table)));
            continue;
        }
        // Opaque outer component: transport its differential through psi.
        std::map<std::string, SymExpr> d;
        for (const auto& [var, coef] : mc.opaque_diff) {
            auto bidx = phi.source().index(var);
            if (!bidx) throw ChartError("compose: unknown variable in opaque differential");
            SymExpr csub = coef.substitute_simultaneous(table);
            for (int i = 0; i < psi.source().dim(); ++i) {
                const SymExpr& jentry = jac_psi[*bidx][i];
                if (jentry.is_zero()) continue;
                const std::string& sname = psi.source().var(i).name;
                SymExpr add = csub * jentry;
                auto it = d.find(sname);
                if (it == d.end())
                    d[sname] = add;
                else
                    it->second += add;
            }
        }
        for (auto it = d.begin(); it != d.end();)
            it = it->second.is_zero() ? d.erase(it) : std::next(it);
        comps.push_back(MapComponent::opaque_with_diff(std::move(d)));
    }
    return CoordinateMap(phi.name() + "." + psi.name(), psi.source(), phi.target(),
                         std::move(comps));
}

} // namespace sstk
