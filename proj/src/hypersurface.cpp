#include "sstk/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sstk {

namespace {

int poly_multiplicity(const Polynomial& p, const Polynomial& h)
{
    if (p.is_zero()) return 0;
    int k = 0;
    Polynomial cur = p;
    for (;;) {
        auto q = cur.divided_exactly(h);
        if (!q) return k;
        cur = *q;
        ++k;
        if (k > 64) throw DomainError("order_along: runaway multiplicity");
    }
}

} // namespace

Rat order_along(const SymExpr& c, const HypersurfaceSpec& hs,
                const std::map<std::string, double>& params)
{
    if (c.is_zero()) throw NonPrincipalVanishing("order_along: expression is identically zero");
    const Polynomial& h = hs.h;
    Rat ord;
    if (h.is_monomial() && h.leading().first.factors().size() == 1) {
        // {v = 0}: read the order off the exponents, so half-integer orders on
        // flagged variables come out exactly (this is the rho^2 = v bookkeeping:
        // exp2 is the order in rho, and we halve it).
        const auto& [var, e2] = h.leading().first.factors()[0];
        if (e2 != 2) throw DomainError("order_along: hypersurface must be reduced (v, not v^k)");
        ord = Rat(c.num().min_exp2(var) - c.den().min_exp2(var), 2);
    } else {
        ord = Rat(poly_multiplicity(c.num(), h) - poly_multiplicity(c.den(), h));
    }
    if (ord != 0) return ord;

    // h divides neither side; order 0 unless c actually dies on the samples.
    bool all_vanish = !hs.samples.empty();
    for (const auto& s : hs.samples) {
        std::map<std::string, double> env = s;
        for (const auto& [k, v] : params) env.emplace(k, v);
        try {
            if (std::abs(c.eval(env)) > 1e-9) {
                all_vanish = false;
                break;
            }
        } catch (const Error&) {
            all_vanish = false;
            break;
        }
    }
    if (all_vanish)
        throw NonPrincipalVanishing("c vanishes on {" + hs.label +
                                    " = 0} but trial division finds no factor");
    return Rat(0);
}

HypersurfaceSpec make_surface(const Chart& chart, const Polynomial& h, const std::string& label,
                              const std::map<std::string, double>& params, unsigned seed,
                              int nsamples)
{
    HypersurfaceSpec hs{h, label, {}, false, false};
    std::mt19937 rng(seed ^ std::hash<std::string>{}(label));
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    std::uniform_real_distribution<double> pos(0.4, 1.6);

    auto hvars = h.vars();
    auto random_env = [&]() {
        std::map<std::string, double> env;
        for (const auto& v : chart.vars()) {
            double x = v.radial ? pos(rng) : unif(rng);
            if (std::abs(x) < 0.1) x = 0.25; // keep away from accidental zeros
            env[v.name] = x;
        }
        return env;
    };

    // Solve h = 0 for one variable when it enters linearly or quadratically.
    std::string lin, quad;
    for (const auto& v : hvars) {
        if (!chart.is_coord(v)) continue;
        int mx = h.max_exp2(v);
        if (mx == 2 && lin.empty()) lin = v;
        if (mx == 4 && quad.empty()) quad = v;
    }

    bool quad_pure = true; // no linear term in `quad`
    if (!quad.empty())
        for (const auto& [m, coef] : h.terms()) {
            (void)coef;
            if (m.exp2(quad) == 2) quad_pure = false;
        }

    int attempts = 0;
    while ((int)hs.samples.size() < nsamples && attempts < 60) {
        ++attempts;
        auto env = random_env();
        for (const auto& [k, v] : params) env[k] = v;
        chart.complete_env(env);
        bool placed = false;
        if (!lin.empty()) {
            // h = A v + B
            SymExpr A = poly_derivative(h, lin);
            if (!A.depends_on(lin)) {
                double a = A.eval(env);
                if (std::abs(a) > 1e-8) {
                    env[lin] = 0.0;
                    double b = h.eval(env);
                    env[lin] = -b / a;
                    placed = true;
                }
            }
        }
        if (!placed && !quad.empty() && quad_pure) {
            // h = A v^2 + C
            SymExpr dh = poly_derivative(h, quad); // 2 A v
            SymExpr A = dh / (SymExpr(2) * SymExpr::variable(quad));
            if (!A.depends_on(quad)) {
                double a = A.eval(env);
                env[quad] = 0.0;
                double cc = h.eval(env);
                if (std::abs(a) > 1e-8 && -cc / a > 0) {
                    env[quad] = std::sqrt(-cc / a);
                    placed = true;
                }
            }
        }
        if (!placed) {
            // Surface through the joint zero of its variables.
            for (const auto& v : hvars)
                if (chart.is_coord(v)) env[v] = 0.0;
            placed = std::abs(h.eval(env)) < 1e-12;
        }
        if (!placed) continue;
        if (std::abs(h.eval(env)) > 1e-10) continue;
        std::map<std::string, double> sample;
        for (const auto& v : chart.vars()) sample[v.name] = env[v.name];
        hs.samples.push_back(std::move(sample));
    }
    return hs;
}

std::vector<HypersurfaceSpec> detect_hypersurfaces(const SymExpr& c, const Chart& chart,
                                                   const std::map<std::string, double>& params,
                                                   unsigned seed)
{
    std::vector<Polynomial> cands;
    std::vector<std::string> cvars;
    for (const auto& v : c.vars())
        if (chart.is_coord(v)) cvars.push_back(v);
    std::sort(cvars.begin(), cvars.end());

    for (const auto& v : cvars) cands.push_back(Polynomial::variable(v));

    auto add = [&](const Polynomial& p) { cands.push_back(p); };
    for (size_t i = 0; i < cvars.size(); ++i) {
        for (size_t j = i + 1; j < cvars.size(); ++j) {
            Polynomial a = Polynomial::variable(cvars[i]);
            Polynomial b = Polynomial::variable(cvars[j]);
            Polynomial a2 = a * a, b2 = b * b;
            add(a - b);
            add(a + b);
            add(a2 + b2);
            add(a2 - b);
            add(a2 + b);
            add(a - b2);
            add(a + b2);
        }
    }
    for (size_t i = 0; i < cvars.size(); ++i)
        for (size_t j = i + 1; j < cvars.size(); ++j)
            for (size_t k = j + 1; k < cvars.size(); ++k) {
                Polynomial a2 = Polynomial::variable(cvars[i]).pow(2);
                Polynomial b2 = Polynomial::variable(cvars[j]).pow(2);
                Polynomial c2 = Polynomial::variable(cvars[k]).pow(2);
                add(a2 - b2 - c2);
                add(b2 - a2 - c2);
                add(c2 - a2 - b2);
                add(a2 + b2 + c2);
            }

    std::vector<HypersurfaceSpec> out;
    for (const auto& h : cands) {
        bool divides = false;
        if (h.is_monomial()) {
            const auto& var = h.leading().first.factors()[0].first;
            divides = c.num().min_exp2(var) > 0 || c.den().min_exp2(var) > 0;
        } else {
            divides = c.num().divided_exactly(h).has_value() ||
                      c.den().divided_exactly(h).has_value();
        }
        if (!divides) continue;
        auto hs = make_surface(chart, h, SymExpr(h).str(), params, seed);
        if (!h.is_monomial() && h.leading().first.total_exp2() >= 4) hs.needs_confirmation = true;
        out.push_back(std::move(hs));
    }
    return out;
}

double log_log_slope(const SymExpr& c, const Chart& chart, const std::string& var,
                     std::map<std::string, double> base, double from, double to, int npts)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < npts; ++i) {
        double t = (double)i / (npts - 1);
        double v = from * std::pow(to / from, t);
        base[var] = v;
        std::map<std::string, double> env = base;
        chart.complete_env(env);
        double val = std::abs(c.eval(env));
        if (val == 0) throw DomainError("log_log_slope: exact zero sample");
        double x = std::log(v), y = std::log(val);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = npts;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace sstk
