#include "sstk/classify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace sstk {

std::string verdict_name(Verdict v, const Rat& m)
{
    switch (v) {
    case Verdict::Symplectic: return "symplectic";
    case Verdict::BM: return "b^" + rat_str(m);
    case Verdict::MFolded: return rat_str(m) + "-folded";
    case Verdict::MixedDirac: return "mixed-dirac";
    case Verdict::DegenerateNontransverse: return "degenerate-nontransverse";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

Rat order_in_poly(const Polynomial& p, const Polynomial& h)
{
    if (p.is_zero()) return Rat(0);
    if (h.is_monomial() && h.leading().first.factors().size() == 1) {
        const auto& [var, e2] = h.leading().first.factors()[0];
        (void)e2;
        return Rat(p.min_exp2(var), 2);
    }
    int k = 0;
    Polynomial cur = p;
    while (true) {
        auto q = cur.divided_exactly(h);
        if (!q) break;
        cur = *q;
        if (++k > 64) break;
    }
    return Rat(k);
}

Rat order_in_expr(const SymExpr& e, const Polynomial& h)
{
    return order_in_poly(e.num(), h) - order_in_poly(e.den(), h);
}

// c with the h-factor of the given order removed.
SymExpr rescale_off(const SymExpr& c, const Polynomial& h, const Rat& ord)
{
    if (h.is_monomial() && h.leading().first.factors().size() == 1) {
        const auto& var = h.leading().first.factors()[0].first;
        int e2 = (int)(2 * ord.convert_to<double>());
        if (e2 >= 0) return c / SymExpr::variable(var, e2);
        return c * SymExpr::variable(var, -e2);
    }
    int k = (int)ord.convert_to<double>();
    if (k >= 0) return c / SymExpr(h).pow_int(k);
    return c * SymExpr(h).pow_int(-k);
}

bool same_surface(const Polynomial& a, const Polynomial& b)
{
    return SymExpr(a).equals(SymExpr(b)) || SymExpr(a).equals(-SymExpr(b));
}

} // namespace

SingularityReport classify(const DiffForm& omega, const ClassifyOptions& opt)
{
    const Chart& chart = omega.chart();
    if (omega.degree() != 2) throw ChartError("classify: input must be a 2-form");
    if (chart.dim() % 2 != 0) throw ChartError("classify: chart dimension must be even");

    SingularityReport rep;
    rep.closed = omega.ext_deriv().is_zero();
    if (!rep.closed) rep.warnings.push_back("form is not closed; verdict refers to the pointwise rank only");

    SymExpr c = omega.top_power_coeff();
    rep.top_coeff = c;
    if (c.is_zero()) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("top power vanishes identically; the form is degenerate everywhere");
        return rep;
    }

    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    std::uniform_real_distribution<double> pos(0.4, 1.6);
    auto random_env = [&]() {
        std::map<std::string, double> env;
        for (const auto& v : chart.vars()) env[v.name] = v.radial ? pos(rng) : unif(rng);
        for (const auto& [k, v] : opt.params) env[k] = v;
        chart.complete_env(env);
        return env;
    };
    auto eval_or_nan = [&](const SymExpr& e, std::map<std::string, double> env) {
        for (const auto& [k, v] : opt.params) env.emplace(k, v);
        chart.complete_env(env);
        try {
            return e.eval(env);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    // Candidate surfaces: divisors of the top coefficient, user input and,
    // for the Dirac analysis, poles and zeros of the raw coefficients.
    std::vector<HypersurfaceSpec> cands = detect_hypersurfaces(c, chart, opt.params, opt.seed);
    for (const auto& u : opt.user_surfaces) cands.push_back(u);

    bool coeff_poles_exist = false;
    if (opt.coefficient_analysis) {
        std::vector<HypersurfaceSpec> pole_cands;
        for (const auto& [idx, coef] : omega.coeffs()) {
            (void)idx;
            if (coef.den().is_constant()) continue;
            for (auto& hs : detect_hypersurfaces(SymExpr(Polynomial(Rat(1)), coef.den()), chart,
                                                 opt.params, opt.seed))
                pole_cands.push_back(std::move(hs));
        }
        for (auto& hs : pole_cands) {
            coeff_poles_exist = true;
            cands.push_back(std::move(hs));
        }
        if (coeff_poles_exist) {
            // Zero scan of the coefficients (only meaningful in Dirac mode).
            for (const auto& [idx, coef] : omega.coeffs()) {
                (void)idx;
                if (coef.num().is_constant()) continue;
                for (auto& hs :
                     detect_hypersurfaces(SymExpr(coef.num()), chart, opt.params, opt.seed))
                    cands.push_back(std::move(hs));
            }
        }
    }

    // Deduplicate by the defining polynomial.
    std::vector<HypersurfaceSpec> uniq;
    for (auto& hs : cands) {
        bool dup = false;
        for (const auto& u : uniq)
            if (same_surface(u.h, hs.h)) dup = true;
        if (!dup) uniq.push_back(std::move(hs));
    }

    double gref = 0.0;
    {
        auto env = random_env();
        for (int i = 0; i < chart.dim(); ++i) {
            double gi = eval_or_nan(chart.d_coord(c, i), env);
            if (std::isfinite(gi)) gref += gi * gi;
        }
        gref = std::sqrt(gref);
    }

    std::vector<std::map<std::string, double>> criticals;

    for (auto& hs : uniq) {
        SurfaceFinding f{hs, Rat(0), Rat(0), Rat(0), true, true, true, {}};
        try {
            f.order = order_along(c, hs, opt.params);
        } catch (const NonPrincipalVanishing& e) {
            f.notes.push_back(std::string("non-principal vanishing: ") + e.what());
            rep.warnings.push_back("surface " + hs.label + ": " + e.what());
        }
        for (const auto& [idx, coef] : omega.coeffs()) {
            (void)idx;
            Rat o = order_in_expr(coef, hs.h);
            if (o < f.coeff_pole_order) f.coeff_pole_order = o;
            if (o > f.coeff_zero_order) f.coeff_zero_order = o;
        }

        if (f.order > 0) {
            // Fold candidate.
            if (f.order == 1) {
                for (const auto& s : hs.samples) {
                    double g2 = 0;
                    std::map<std::string, double> env = s;
                    for (const auto& [k, v] : opt.params) env.emplace(k, v);
                    chart.complete_env(env);
                    bool ok = true;
                    for (int i = 0; i < chart.dim(); ++i) {
                        double gi;
                        try {
                            gi = chart.d_coord(c, i).eval(env);
                        } catch (const Error&) {
                            ok = false;
                            break;
                        }
                        g2 += gi * gi;
                    }
                    if (!ok) continue;
                    if (std::sqrt(g2) <= 1e-6 * std::max(1.0, gref)) {
                        f.transverse = false;
                        criticals.push_back(s);
                    }
                }
            }
            SymExpr g = rescale_off(c, hs.h, f.order);
            for (const auto& s : hs.samples) {
                double gv = eval_or_nan(g, s);
                if (std::isfinite(gv) && std::abs(gv) <= opt.tol) f.rescaled_nonzero = false;
            }
            if (f.order.convert_to<double>() != std::floor(f.order.convert_to<double>()))
                f.notes.push_back("fractional order via radial variable");
        } else if (f.order < 0) {
            // Pole: certify the b^m shape when the order is an integer.
            double od = -f.order.convert_to<double>();
            if (od == std::floor(od)) {
                int m = (int)od;
                for (const auto& [idx, coef] : omega.coeffs()) {
                    (void)idx;
                    SymExpr cleared = coef * SymExpr(hs.h).pow_int(m);
                    if (order_in_poly(cleared.den(), hs.h) > 0) f.bm_pole_free = false;
                }
                SymExpr g = rescale_off(c, hs.h, f.order);
                for (const auto& s : hs.samples) {
                    double gv = eval_or_nan(g, s);
                    if (std::isfinite(gv) && std::abs(gv) <= opt.tol) f.rescaled_nonzero = false;
                }
            } else {
                f.notes.push_back("fractional pole order via radial variable");
            }
        }
        if (f.order == 0 && f.coeff_pole_order == 0 && f.coeff_zero_order == 0) continue;
        if (f.order == 0 && f.coeff_pole_order == 0 && !coeff_poles_exist) continue;
        rep.surfaces.push_back(std::move(f));
    }

    // Critical points of c on {c = 0}: where several zero surfaces meet.
    {
        auto env = random_env();
        for (const auto& v : c.vars())
            if (chart.is_coord(v)) env[v] = 0.0;
        chart.complete_env(env);
        double cv = eval_or_nan(c, env);
        if (std::isfinite(cv) && std::abs(cv) <= opt.tol) {
            double g2 = 0;
            bool ok = true;
            for (int i = 0; i < chart.dim(); ++i) {
                double gi = eval_or_nan(chart.d_coord(c, i), env);
                if (!std::isfinite(gi)) {
                    ok = false;
                    break;
                }
                g2 += gi * gi;
            }
            int through = 0;
            for (const auto& f : rep.surfaces)
                if (f.order > 0 && std::abs(eval_or_nan(SymExpr(f.surface.h), env)) < 1e-10)
                    ++through;
            if (ok && std::sqrt(g2) <= 1e-6 * std::max(1.0, gref) && through >= 2) {
                std::map<std::string, double> point;
                for (const auto& v : chart.vars()) point[v.name] = env[v.name];
                criticals.push_back(point);
            }
        }
    }

    bool has_zero = false, has_pole = false, has_dirac_pole = false, has_dirac_zero = false;
    for (const auto& f : rep.surfaces) {
        if (f.order > 0) has_zero = true;
        if (f.order < 0) has_pole = true;
        if (f.order == 0 && f.coeff_pole_order < 0) has_dirac_pole = true;
        if (f.order == 0 && f.coeff_pole_order == 0 && f.coeff_zero_order > 0)
            has_dirac_zero = true;
    }

    if ((has_pole || has_dirac_pole) && (has_zero || has_dirac_zero)) {
        rep.verdict = Verdict::MixedDirac;
        if (has_dirac_pole)
            rep.notes.push_back(
                "poles live in the coefficients while the top power stays regular; "
                "the structure extends as a Dirac structure");
        if (!criticals.empty())
            rep.morse = morse_signature(c, chart, criticals.front(), opt.params);
        return rep;
    }

    if (!criticals.empty()) {
        rep.verdict = Verdict::DegenerateNontransverse;
        rep.morse = morse_signature(c, chart, criticals.front(), opt.params);
        if (rep.morse->degenerate)
            rep.notes.push_back("Hessian of the top coefficient is degenerate at the critical point");
        return rep;
    }

    if (has_zero && !has_pole) {
        Rat m(0);
        int zero_surfaces = 0;
        bool resc = true;
        for (const auto& f : rep.surfaces)
            if (f.order > 0) {
                ++zero_surfaces;
                if (f.order > m) m = f.order;
                resc = resc && f.rescaled_nonzero;
            }
        rep.verdict = Verdict::MFolded;
        rep.m = m;
        if (zero_surfaces > 1)
            rep.notes.push_back("multiple folding hypersurfaces; m refers to the largest order");
        if (!resc) {
            rep.verdict = Verdict::Inconclusive;
            rep.notes.push_back("rescaled coefficient vanishes at a witness point");
        }
        return rep;
    }

    if (has_pole && !has_zero) {
        const SurfaceFinding* pole = nullptr;
        int npole = 0;
        for (const auto& f : rep.surfaces)
            if (f.order < 0) {
                ++npole;
                pole = &f;
            }
        double od = -pole->order.convert_to<double>();
        if (npole == 1 && od == std::floor(od) && pole->bm_pole_free && pole->rescaled_nonzero) {
            rep.verdict = Verdict::BM;
            rep.m = -pole->order;
        } else {
            rep.verdict = Verdict::Inconclusive;
            rep.notes.push_back(npole > 1 ? "several pole hypersurfaces"
                                          : "pole certification failed");
        }
        return rep;
    }

    if (rep.surfaces.empty()) {
        bool nonzero = true;
        for (int k = 0; k < 12; ++k) {
            double v = eval_or_nan(c, random_env());
            if (!std::isfinite(v) || std::abs(v) <= opt.tol) nonzero = false;
        }
        if (nonzero) {
            rep.verdict = Verdict::Symplectic;
            if (c.as_constant())
                rep.notes.push_back("top coefficient is the constant " + rat_str(*c.as_constant()));
            return rep;
        }
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("top coefficient vanishes at sampled points but no divisor was found");
        return rep;
    }

    rep.verdict = Verdict::Inconclusive;
    return rep;
}

} // namespace sstk
