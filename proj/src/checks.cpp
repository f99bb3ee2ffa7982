#include "sstk/checks.hpp"

#include "sstk/integrate.hpp"
#include "sstk/parse.hpp"
#include "sstk/drift.hpp"
#include "sstk/report_io.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace sstk {

CheckResult check_against_golden(const CatalogEntry& entry, const SingularityReport& golden)
{
    CheckResult r;
    r.name = entry.name + ": classification";
    if (!entry.form) {
        r.pass = false;
        r.actual = "entry carries no 2-form";
        return r;
    }
    ClassifyOptions opt;
    opt.params = entry.classify_params;
    opt.user_surfaces = entry.extra_surfaces;
    SingularityReport rep = classify(*entry.form, opt);
    std::string why;
    r.pass = reports_equivalent(rep, golden, &why);
    r.expected = golden.verdict_string();
    r.actual = rep.verdict_string() + (r.pass ? "" : " (" + why + ")");
    return r;
}

namespace {

CheckResult bool_check(const std::string& name, bool ok, const std::string& detail = "")
{
    return {name, ok, "pass", ok ? "pass" : ("fail " + detail)};
}

void golden_checks(const Catalog& cat, std::vector<CheckResult>& out,
                   const std::string& only_entry)
{
    std::vector<std::string> names = {"kepler-planar",  "levi-civita",
                                      "ks",             "mcgehee-collapse",
                                      "r3bp-mcgehee",   "two-fixed-center",
                                      "projective-two-center", "darboux-b",
                                      "darboux-bm:4",   "darboux-folded:2"};
    for (const auto& n : names) {
        if (!only_entry.empty() && n.substr(0, only_entry.size()) != only_entry) continue;
        CatalogEntry e = cat.entry(n);
        if (!e.golden) continue;
        CheckResult r = check_against_golden(e, *e.golden);
        r.name = n + ": golden classification";
        out.push_back(std::move(r));
    }
}

void invariant_checks(const Catalog& cat, std::vector<CheckResult>& out, unsigned seed)
{
    // Jacobi map is canonical and inverts.
    {
        CoordinateMap j = cat.jacobi_map();
        DiffForm can_t = DiffForm::canonical(j.target());
        DiffForm can_s = DiffForm::canonical(j.source());
        out.push_back(bool_check("jacobi: pullback of the canonical form is canonical",
                                 j.pullback(can_t).equals(can_s)));
        out.push_back(bool_check("jacobi: declared inverse verifies", j.verify_inverse()));
    }
    // Symplectic Levi-Civita variant is canonical.
    {
        CoordinateMap lcs = cat.levi_civita_symplectic_map();
        out.push_back(bool_check(
            "levi-civita symplectic variant: pullback is canonical",
            lcs.pullback(DiffForm::canonical(lcs.target())).equals(DiffForm::canonical(lcs.source()))));
    }
    // The polar chart change is canonical.
    {
        CoordinateMap cp = cat.cart_to_polar_map();
        DiffForm polar_can(cp.target(), 2);
        polar_can.add_term({0, 2}, SymExpr(1)); // dr^dy
        polar_can.add_term({1, 3}, SymExpr(1)); // dalpha^dG
        out.push_back(bool_check("cart-to-polar: dr^dy + dalpha^dG pulls back canonically",
                                 cp.pullback(polar_can).equals(DiffForm::canonical(cp.source()))));
        DiffForm aG(cp.target(), 2);
        aG.add_term({1, 3}, SymExpr(1));
        DiffForm pulled = cp.pullback(aG);
        DiffForm expect(cp.source(), 2);
        expect.add_term({0, 3}, SymExpr(1)); // dX^dPY
        expect.add_term({1, 2}, SymExpr(-1));
        out.push_back(bool_check("cart-to-polar: dalpha^dG pulls back to d(X PY - Y PX)",
                                 pulled.equals(expect) && pulled.ext_deriv().is_zero()));
    }
    // x-chart to polar reproduces the b^3 structure; alpha, G untouched.
    {
        CoordinateMap xp = cat.xchart_to_polar_map();
        DiffForm polar_can(xp.target(), 2);
        polar_can.add_term({0, 2}, SymExpr(1));
        polar_can.add_term({1, 3}, SymExpr(1));
        DiffForm pb = xp.pullback(polar_can);
        DiffForm expect(xp.source(), 2);
        expect.add_term({0, 2}, parse_expr("-4/x^3"));
        expect.add_term({1, 3}, SymExpr(1));
        out.push_back(bool_check("xchart-to-polar: b^3 structure reproduced", pb.equals(expect)));

        DiffForm aG(xp.target(), 2);
        aG.add_term({1, 3}, SymExpr(1));
        DiffForm aG_src(xp.source(), 2);
        aG_src.add_term({1, 3}, SymExpr(1));
        out.push_back(bool_check("xchart-to-polar: dalpha^dG untouched",
                                 xp.pullback(aG).equals(aG_src)));
    }
    // order_along multiplicativity on the candidate list.
    {
        std::mt19937 rng(seed);
        Chart c = make_chart("oc", {"x", "y"});
        bool ok = true;
        std::vector<Polynomial> hs{Polynomial::variable("x"),
                                   parse_expr("x - y").num(),
                                   parse_expr("x + y").num()};
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int iter = 0; iter < 20 && ok; ++iter) {
            Polynomial p;
            p.add_term(Monomial::variable("x", 2 * (iter % 3)), Rat(1 + (iter % 4)));
            p.add_term(Monomial::variable("y"), Rat(coef(rng)));
            p.add_term(Monomial(), Rat(1));
            for (const auto& h : hs) {
                HypersurfaceSpec hsur = make_surface(c, h, "h", {}, seed);
                Rat o1 = order_along(SymExpr(p), hsur);
                Rat o2 = order_along(SymExpr(p * h), hsur);
                if (o2 != o1 + 1) ok = false;
            }
        }
        out.push_back(bool_check("order_along(c*h, h) = order_along(c, h) + 1", ok));
    }
    // Canonical form classifies as symplectic in dimensions 2..10.
    {
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            std::vector<std::string> names;
            for (int i = 0; i < 2 * n; ++i) names.push_back("x" + std::to_string(i));
            SingularityReport rep = classify(DiffForm::canonical(make_chart("c", names)));
            ok = ok && rep.verdict == Verdict::Symplectic;
        }
        out.push_back(bool_check("canonical form is symplectic in dim 2..10", ok));
    }
    // Verdicts are scale invariant.
    {
        CatalogEntry e = cat.entry("darboux-bm:3");
        DiffForm scaled = e.form->times(SymExpr(Rat(7, 3)));
        ClassifyOptions opt;
        SingularityReport rep = classify(scaled, opt);
        out.push_back(bool_check("classification is invariant under rational scaling",
                                 rep.verdict == Verdict::BM && rep.m == 3));
    }
    // Conservation battery on the autonomous entries.
    for (const char* name : {"kepler-planar", "two-fixed-center"}) {
        CatalogEntry e = cat.entry(name);
        Vec x0(4);
        if (e.name == "kepler-planar") {
            double M = e.system->params.at("M"), k = e.system->params.at("k");
            double R = 1.0, v = std::sqrt(k / (M * R));
            x0 << R, 0.0, 0.0, M * v;
        } else {
            x0 << 0.0, 2.5, std::sqrt(2.0 / 2.5), 0.0;
        }
        IntegrateOptions iopt;
        Trajectory tr = integrate(*e.system, x0, 0.0, 12.0, iopt);
        DriftReport dr = monitor_integrals(tr);
        std::ostringstream os;
        os << "worst drift " << dr.worst();
        out.push_back(bool_check(e.name + ": integral drift < 1e-8",
                                 tr.reason == StopReason::TEnd && dr.worst() < 1e-8, os.str()));
    }
}

} // namespace

std::vector<CheckResult> run_catalog_checks(const BodyParams& params, unsigned seed,
                                            const std::string& only_entry)
{
    Catalog cat(params);
    std::vector<CheckResult> out;
    golden_checks(cat, out, only_entry);
    if (only_entry.empty()) invariant_checks(cat, out, seed);
    return out;
}

} // namespace sstk
