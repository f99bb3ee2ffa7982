#include "sstk/catalog.hpp"

#include "sstk/kepler.hpp"
#include "sstk/parse.hpp"

#include <cmath>
#include <sstream>

namespace sstk {

namespace {

SymExpr E(const std::string& s)
{
    return parse_expr(s);
}

// v^(e2/2) as an expression, for negative exponents too.
SymExpr var_pow(const std::string& name, int e2)
{
    if (e2 >= 0) return SymExpr::variable(name, e2);
    return SymExpr(Polynomial(Rat(1)), Polynomial::variable(name, -e2));
}

SingularityReport golden_report(Verdict v, const Rat& m,
                                std::vector<std::tuple<Polynomial, Rat, Rat>> surfaces,
                                std::optional<std::string> morse_sig = std::nullopt)
{
    SingularityReport rep;
    rep.verdict = v;
    rep.m = m;
    for (auto& [h, order, cpole] : surfaces) {
        SurfaceFinding f;
        f.surface.h = h;
        f.surface.label = SymExpr(h).str();
        f.order = order;
        f.coeff_pole_order = cpole;
        rep.surfaces.push_back(std::move(f));
    }
    if (morse_sig) {
        MorseData md;
        md.signature = *morse_sig;
        rep.morse = md;
    }
    return rep;
}

} // namespace

void BodyParams::validate() const
{
    if (m1 <= 0 || m2 <= 0 || m3 <= 0 || mA <= 0 || mB <= 0)
        throw DomainError("BodyParams: masses must be positive");
    if (G <= 0) throw DomainError("BodyParams: gravitational constant must be positive");
    if (!(mu > 0 && mu < 1)) throw DomainError("BodyParams: mu must lie in (0,1)");
    if (A == B) throw DomainError("BodyParams: the two centers coincide");
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("BodyParams: eccentricity must be in [0,1)");
}

Catalog::Catalog(const BodyParams& p) : p_(p)
{
    p_.validate();
}

std::map<std::string, double> Catalog::mass_env() const
{
    return {{"m1", rat_double(p_.m1)}, {"m2", rat_double(p_.m2)}, {"m3", rat_double(p_.m3)},
            {"M", rat_double(p_.reduced_mass())}, {"k", rat_double(p_.coupling())},
            {"mA", rat_double(p_.mA)}, {"mB", rat_double(p_.mB)}};
}

std::vector<std::string> Catalog::names() const
{
    return {"kepler-planar",  "levi-civita",        "ks",
            "mcgehee-collapse", "r3bp-mcgehee",       "two-fixed-center",
            "projective-two-center", "darboux-b",     "darboux-bm:m",
            "darboux-folded"};
}

CatalogEntry Catalog::entry(const std::string& name) const
{
    auto colon = name.find(':');
    std::string base = name.substr(0, colon);
    int m = 1;
    if (colon != std::string::npos) m = std::stoi(name.substr(colon + 1));
    if (base == "kepler-planar") return kepler_planar_entry();
    if (base == "levi-civita") return levi_civita_entry();
    if (base == "ks") return ks_entry();
    if (base == "mcgehee-collapse") return mcgehee_collapse_entry(colon == std::string::npos ? 3 : m);
    if (base == "r3bp-mcgehee") return r3bp_mcgehee_entry();
    if (base == "two-fixed-center") return two_fixed_center_entry();
    if (base == "projective-two-center") return projective_form_entry();
    if (base == "darboux-b") return darboux_entry(1, false);
    if (base == "darboux-bm") return darboux_entry(m, false);
    if (base == "darboux-folded") return darboux_entry(colon == std::string::npos ? 1 : m, true);
    throw DomainError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> Catalog::map_names() const
{
    return {"jacobi", "levi-civita", "levi-civita-symplectic", "ks", "mcgehee-collapse",
            "cart-to-polar", "xchart-to-polar"};
}

CoordinateMap Catalog::map_by_name(const std::string& name) const
{
    if (name == "jacobi") return jacobi_map();
    if (name == "levi-civita") return levi_civita_map();
    if (name == "levi-civita-symplectic") return levi_civita_symplectic_map();
    if (name == "ks") return ks_map();
    if (name == "mcgehee-collapse") return mcgehee_collapse_map();
    if (name == "cart-to-polar") return cart_to_polar_map();
    if (name == "xchart-to-polar") return xchart_to_polar_map();
    throw DomainError("unknown catalog map '" + name + "'");
}

// ---------------------------------------------------------------- maps

CoordinateMap Catalog::jacobi_map() const
{
    // Planar two-body phase space, positions then momenta.
    Chart src = make_chart("two_body_planar",
                           {"q1x", "q1y", "q2x", "q2y", "p1x", "p1y", "p2x", "p2y"});
    Chart dst = make_chart("jacobi_planar", {"gx", "gy", "wx", "wy", "Gx", "Gy", "Wx", "Wy"});
    Rat nu1 = p_.m1 / (p_.m1 + p_.m2), nu2 = p_.m2 / (p_.m1 + p_.m2);
    SymExpr n1(nu1), n2(nu2);
    std::vector<MapComponent> comps{
        MapComponent::of(n1 * E("q1x") + n2 * E("q2x")),
        MapComponent::of(n1 * E("q1y") + n2 * E("q2y")),
        MapComponent::of(E("q2x - q1x")),
        MapComponent::of(E("q2y - q1y")),
        MapComponent::of(E("p1x + p2x")),
        MapComponent::of(E("p1y + p2y")),
        MapComponent::of(n1 * E("p2x") - n2 * E("p1x")),
        MapComponent::of(n1 * E("p2y") - n2 * E("p1y")),
    };
    CoordinateMap fwd("jacobi", src, dst, std::move(comps));
    // declared inverse: q1 = g - nu2 w, q2 = g + nu1 w, p1 = nu1 G - W, p2 = nu2 G + W
    std::vector<MapComponent> inv{
        MapComponent::of(E("gx") - n2 * E("wx")),
        MapComponent::of(E("gy") - n2 * E("wy")),
        MapComponent::of(E("gx") + n1 * E("wx")),
        MapComponent::of(E("gy") + n1 * E("wy")),
        MapComponent::of(n1 * E("Gx") - E("Wx")),
        MapComponent::of(n1 * E("Gy") - E("Wy")),
        MapComponent::of(n2 * E("Gx") + E("Wx")),
        MapComponent::of(n2 * E("Gy") + E("Wy")),
    };
    fwd.declare_inverse(std::make_shared<CoordinateMap>("jacobi_inverse", dst, src, std::move(inv)));
    return fwd;
}

CoordinateMap Catalog::levi_civita_map() const
{
    Chart kep = make_chart("kepler_planar", {"w1", "w2", "W1", "W2"});
    Chart lc = make_chart("levi_civita", {"u1", "u2", "W1", "W2"});
    std::vector<MapComponent> comps{
        MapComponent::of(E("(u1^2 - u2^2)/2")),
        MapComponent::of(E("u1*u2")),
        MapComponent::of(E("W1")),
        MapComponent::of(E("W2")),
    };
    return CoordinateMap("levi-civita", lc, kep, std::move(comps));
}

CoordinateMap Catalog::levi_civita_symplectic_map() const
{
    // w = u^2/2, W = U / conj(u); the full change is symplectic.
    Chart kep = make_chart("kepler_planar", {"w1", "w2", "W1", "W2"});
    Chart lcs = make_chart("levi_civita_symplectic", {"u1", "u2", "U1", "U2"});
    std::vector<MapComponent> comps{
        MapComponent::of(E("(u1^2 - u2^2)/2")),
        MapComponent::of(E("u1*u2")),
        MapComponent::of(E("(U1*u1 - U2*u2)/(u1^2 + u2^2)")),
        MapComponent::of(E("(U1*u2 + U2*u1)/(u1^2 + u2^2)")),
    };
    return CoordinateMap("levi-civita-symplectic", lcs, kep, std::move(comps));
}

CoordinateMap Catalog::ks_map() const
{
    // u3 = 0 section of the quaternionic squaring, momenta unchanged.
    Chart kep3 = make_chart("kepler_spatial", {"w0", "w1", "w2", "W0", "W1", "W2"});
    Chart ks = make_chart("ks_section", {"u0", "u1", "u2", "W0", "W1", "W2"});
    std::vector<MapComponent> comps{
        MapComponent::of(E("(u0^2 - u1^2 - u2^2)/2")),
        MapComponent::of(E("u0*u1")),
        MapComponent::of(E("u0*u2")),
        MapComponent::of(E("W0")),
        MapComponent::of(E("W1")),
        MapComponent::of(E("W2")),
    };
    return CoordinateMap("ks", ks, kep3, std::move(comps));
}

CoordinateMap Catalog::mcgehee_collapse_map(int n) const
{
    if (n < 2 || n > 4) throw DomainError("mcgehee-collapse: n must be 2, 3 or 4");
    int N = 3 * n;
    // target: flat phase space (q_1..q_N, p_1..p_N)
    std::vector<std::string> qp;
    for (int i = 1; i <= N; ++i) qp.push_back("q" + std::to_string(i));
    for (int i = 1; i <= N; ++i) qp.push_back("p" + std::to_string(i));
    Chart flat = make_chart("nbody_flat_" + std::to_string(n), qp);

    // source: (r, s_1..s_{N-1}, z_1..z_N) with mu(s) = 1 - sum m_i s_i^2
    std::vector<VarSpec> vars;
    vars.push_back({"r", /*radial=*/true});
    for (int i = 1; i < N; ++i) vars.push_back({"s" + std::to_string(i)});
    for (int i = 1; i <= N; ++i) vars.push_back({"z" + std::to_string(i)});
    Polynomial musq(Rat(1));
    std::set<std::string> massparams;
    for (int i = 1; i < N; ++i) {
        std::string mi = "m" + std::to_string((i - 1) / 3 + 1);
        massparams.insert(mi);
        musq = musq - Polynomial::variable(mi) *
                          Polynomial::variable("s" + std::to_string(i)).pow(2);
    }
    std::string mlast = "m" + std::to_string(n);
    massparams.insert(mlast);
    Chart mcg("mcgehee_collapse_" + std::to_string(n), vars, {{"smu", musq}}, massparams);

    std::vector<MapComponent> comps;
    for (int i = 1; i < N; ++i)
        comps.push_back(MapComponent::of(SymExpr::variable("r") *
                                         SymExpr::variable("s" + std::to_string(i))));
    // q_N = r sqrt(mu / m_n)
    comps.push_back(MapComponent::of(SymExpr::variable("r") * SymExpr::variable("smu") *
                                     var_pow(mlast, -1)));
    for (int i = 1; i <= N; ++i)
        comps.push_back(MapComponent::of(SymExpr::variable("z" + std::to_string(i)) *
                                         var_pow("r", -1)));
    return CoordinateMap("mcgehee-collapse", mcg, flat, std::move(comps));
}

CoordinateMap Catalog::cart_to_polar_map() const
{
    // (X, Y, PX, PY) -> (r, alpha, y, G); alpha enters only through d(alpha).
    Chart cart = make_chart("cartesian_planar", {"X", "Y", "PX", "PY"});
    Chart polar("polar_planar", {{"r", true}, {"alpha", false, true}, {"y"}, {"G"}}, {}, {});
    Chart cart_rho("cartesian_planar", {{"X"}, {"Y"}, {"PX"}, {"PY"}},
                   {{"rho", parse_expr("X^2 + Y^2").num()}});
    std::vector<MapComponent> comps{
        MapComponent::of(E("rho")),
        MapComponent::opaque_with_diff({{"X", E("-Y/(X^2 + Y^2)")}, {"Y", E("X/(X^2 + Y^2)")}}),
        MapComponent::of(E("(X*PX + Y*PY)/rho")),
        MapComponent::of(E("X*PY - Y*PX")),
    };
    (void)cart;
    return CoordinateMap("cart-to-polar", cart_rho, polar, std::move(comps));
}

CoordinateMap Catalog::xchart_to_polar_map() const
{
    Chart polar("polar_planar", {{"r", true}, {"alpha", false, true}, {"y"}, {"G"}}, {}, {});
    Chart xchart("mcgehee_x", {{"x"}, {"alpha", false, true}, {"y"}, {"G"}}, {}, {});
    std::vector<MapComponent> comps{
        MapComponent::of(E("2/x^2")),
        MapComponent::of(SymExpr::variable("alpha")),
        MapComponent::of(E("y")),
        MapComponent::of(E("G")),
    };
    return CoordinateMap("xchart-to-polar", xchart, polar, std::move(comps));
}

// ---------------------------------------------------------------- entries

CatalogEntry Catalog::kepler_planar_entry() const
{
    CatalogEntry e;
    e.name = "kepler-planar";
    e.doc = "Planar Kepler problem in relative coordinates (w, W); the canonical "
            "structure with H = |W|^2/(2M) - k/|w|, M = m1 m2/(m1+m2), k = G m1 m2.";
    Chart chart("kepler_planar", {{"w1"}, {"w2"}, {"W1"}, {"W2"}},
                {{"rw", parse_expr("w1^2 + w2^2").num()}}, {"M", "k"});
    e.chart = chart;
    e.classify_params = mass_env();
    e.form = DiffForm::canonical(chart);
    e.golden = golden_report(Verdict::Symplectic, Rat(0), {});

    HamiltonianSystem sys;
    sys.name = e.name;
    sys.chart = chart;
    sys.params = mass_env();
    sys.structure = DiffForm::canonical(chart);
    sys.hamiltonian =
        Observable::symbolic("H", chart, E("(W1^2 + W2^2)/(2*M) - k/rw"), sys.params);
    sys.integrals = {sys.hamiltonian,
                     Observable::symbolic("L", chart, E("w1*W2 - w2*W1"), sys.params)};
    sys.guard = Observable::symbolic("|w|", chart, SymExpr::variable("rw"), sys.params);
    double M = rat_double(p_.reduced_mass()), k = rat_double(p_.coupling());
    sys.grad_T = [M](const Vec& p) { return Vec(p / M); };
    sys.grad_V = [k](const Vec& q) {
        double r3 = std::pow(q.squaredNorm(), 1.5);
        return Vec(k * q / r3);
    };
    e.system = sys;
    return e;
}

CatalogEntry Catalog::levi_civita_entry() const
{
    CatalogEntry e;
    e.name = "levi-civita";
    e.doc = "Planar Kepler pulled back under complex squaring w = u^2/2 with momenta "
            "unchanged; omega^2 degenerates on the cone u = 0 with a definite quadratic "
            "model.  The companion map with W = U/conj(u) is symplectic.";
    CoordinateMap lc = levi_civita_map();
    e.chart = lc.source();
    e.maps = {lc, levi_civita_symplectic_map()};
    e.classify_params = mass_env();
    DiffForm pb = lc.pullback(DiffForm::canonical(lc.target()));
    e.form = pb;
    e.golden = golden_report(Verdict::DegenerateNontransverse, Rat(0),
                             {{parse_expr("u1^2 + u2^2").num(), Rat(1), Rat(0)}}, "(+,+)");

    HamiltonianSystem sys;
    sys.name = e.name;
    sys.chart = e.chart;
    sys.params = mass_env();
    sys.structure = pb;
    sys.hamiltonian = Observable::symbolic(
        "H", e.chart, E("(W1^2 + W2^2)/(2*M) - 2*k/(u1^2 + u2^2)"), sys.params);
    sys.integrals = {sys.hamiltonian,
                     Observable::symbolic("L", e.chart,
                                          E("((u1^2 - u2^2)/2)*W2 - u1*u2*W1"), sys.params)};
    sys.guard = Observable::symbolic("|u|^2", e.chart, E("u1^2 + u2^2"), sys.params);
    e.system = sys;
    return e;
}

CatalogEntry Catalog::ks_entry() const
{
    CatalogEntry e;
    e.name = "ks";
    e.doc = "Kustaanheimo-Stiefel quaternion squaring on the section u3 = 0, momenta "
            "unchanged; omega^3 carries the factors u0 and u0^2 + u1^2 + u2^2.";
    CoordinateMap ks = ks_map();
    e.chart = ks.source();
    e.maps = {ks};
    e.classify_params = mass_env();
    e.form = ks.pullback(DiffForm::canonical(ks.target()));
    e.golden = golden_report(Verdict::DegenerateNontransverse, Rat(0),
                             {{Polynomial::variable("u0"), Rat(1), Rat(0)},
                              {parse_expr("u0^2 + u1^2 + u2^2").num(), Rat(1), Rat(0)}},
                             "(0,0,0)");
    return e;
}

CatalogEntry Catalog::mcgehee_collapse_entry(int n) const
{
    CatalogEntry e;
    e.name = "mcgehee-collapse";
    e.doc = "Total-collapse blow-up of the " + std::to_string(n) +
            "-body problem: q = r s on the mass sphere, z = p sqrt(r).  The top wedge "
            "vanishes to order (3n-2)/2 along r = 0.  The mu(s) = 0 boundary of the "
            "chart is flagged, not analyzed.";
    CoordinateMap mc = mcgehee_collapse_map(n);
    e.chart = mc.source();
    e.maps = {mc};
    e.classify_params = mass_env();
    e.form = mc.pullback(DiffForm::canonical(mc.target()));
    Rat order(3 * n - 2, 2);
    e.golden = golden_report(Verdict::MFolded, order,
                             {{Polynomial::variable("r"), order, Rat(-1, 2)}});
    e.extras["order"] = rat_str(order);
    return e;
}

CatalogEntry Catalog::r3bp_mcgehee_entry() const
{
    CatalogEntry e;
    e.name = "r3bp-mcgehee";
    e.doc = "Planar elliptic restricted three-body problem for the massless body in "
            "McGehee coordinates r = 2/x^2 near infinity; the structure is "
            "-4/x^3 dx^dy + dalpha^dG, a b^3 form across {x = 0}.  Primaries move on "
            "ellipses (circular by default).";
    Chart chart("r3bp_mcgehee_x", {{"x"}, {"alpha", false, true}, {"y"}, {"G"}}, {}, {});
    e.chart = chart;
    e.maps = {xchart_to_polar_map(), cart_to_polar_map()};
    DiffForm form(chart, 2);
    form.add_term({0, 2}, E("-4/x^3")); // dx^dy
    form.add_term({1, 3}, SymExpr(1));  // dalpha^dG
    e.form = form;
    e.golden = golden_report(Verdict::BM, Rat(3),
                             {{Polynomial::variable("x"), Rat(-3), Rat(-3)}});

    double mu = rat_double(p_.mu);
    double ecc = p_.e;
    auto potential_terms = [mu, ecc](const Vec& xv, double t, double& U, double& Ur,
                                     double& Ua) {
        double x = xv[0], alpha = xv[1];
        double r = 2.0 / (x * x);
        U = Ur = Ua = 0.0;
        for (int i = 1; i <= 2; ++i) {
            auto qp = primary_position(i, t, mu, ecc);
            double rho = std::hypot(qp[0], qp[1]);
            double theta = std::atan2(qp[1], qp[0]);
            double mi = (i == 1) ? 1.0 - mu : mu;
            double d2 = r * r + rho * rho - 2.0 * r * rho * std::cos(alpha - theta);
            double d = std::sqrt(d2);
            U += mi / d;
            Ur += -mi * (r - rho * std::cos(alpha - theta)) / (d2 * d);
            Ua += -mi * r * rho * std::sin(alpha - theta) / (d2 * d);
        }
    };
    auto Hfun = [potential_terms](const Vec& xv, double t) {
        double U, Ur, Ua;
        potential_terms(xv, t, U, Ur, Ua);
        double x = xv[0], y = xv[2], G = xv[3];
        return 0.5 * y * y + G * G * std::pow(x, 4) / 8.0 - U;
    };
    auto Hgrad = [potential_terms](const Vec& xv, double t) {
        double U, Ur, Ua;
        potential_terms(xv, t, U, Ur, Ua);
        double x = xv[0], y = xv[2], G = xv[3];
        Vec g(4);
        g[0] = G * G * std::pow(x, 3) / 2.0 + (4.0 / std::pow(x, 3)) * Ur;
        g[1] = -Ua;
        g[2] = y;
        g[3] = G * std::pow(x, 4) / 4.0;
        return g;
    };

    HamiltonianSystem sys;
    sys.name = e.name;
    sys.chart = chart;
    sys.structure = form;
    sys.hamiltonian = Observable::numeric("H", 4, Hfun, Hgrad, /*time_dependent=*/true);
    if (ecc == 0.0) {
        // Circular primaries: the rotating-frame energy H - G is conserved.
        auto Jfun = [Hfun](const Vec& xv, double t) { return Hfun(xv, t) - xv[3]; };
        sys.integrals = {Observable::numeric("jacobi", 4, Jfun, nullptr, true)};
    }
    auto guard = [mu, ecc](const Vec& xv, double t) {
        double x = xv[0], alpha = xv[1];
        double r = 2.0 / (x * x);
        double dmin = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 2; ++i) {
            auto qp = primary_position(i, t, mu, ecc);
            double d = std::hypot(r * std::cos(alpha) - qp[0], r * std::sin(alpha) - qp[1]);
            dmin = std::min(dmin, d);
        }
        return dmin;
    };
    sys.guard = Observable::numeric("min-primary-distance", 4, guard, nullptr, true);
    e.system = sys;
    e.extras["bracket"] = "{f,g} = -(x^3/4)(f_x g_y - f_y g_x) + f_alpha g_G - f_G g_alpha";
    return e;
}

CatalogEntry Catalog::two_fixed_center_entry() const
{
    CatalogEntry e;
    e.name = "two-fixed-center";
    e.doc = "A particle attracted by two fixed centers A and B; H and the resolved "
            "second integral G Poisson-commute, an integrable system on T*(R^2).";
    Polynomial sqA =
        (E("(q1 - a1)^2 + (q2 - a2)^2")
             .substitute("a1", SymExpr(p_.A[0]))
             .substitute("a2", SymExpr(p_.A[1])))
            .num();
    Polynomial sqB =
        (E("(q1 - b1)^2 + (q2 - b2)^2")
             .substitute("b1", SymExpr(p_.B[0]))
             .substitute("b2", SymExpr(p_.B[1])))
            .num();
    Chart chart("two_center", {{"q1"}, {"q2"}, {"v1"}, {"v2"}}, {{"rA", sqA}, {"rB", sqB}},
                {"mA", "mB"});
    e.chart = chart;
    e.classify_params = mass_env();
    e.form = DiffForm::canonical(chart);
    e.golden = golden_report(Verdict::Symplectic, Rat(0), {});

    static const TwoCenterConstants tcc = resolve_two_center_constants();
    e.extras["cA"] = rat_str(tcc.cA);
    e.extras["cB"] = rat_str(tcc.cB);
    e.extras["resolution"] =
        std::string("constants fixed by {H,G} = 0; least-squares residual ") +
        std::to_string(tcc.residual) +
        (tcc.symbolic_zero ? "; certified exactly in the radical ring" : "");

    SymExpr H = E("(v1^2 + v2^2)/2 - mA/rA - mB/rB");
    SymExpr LA = E("(q1 - a1)*v2 - (q2 - a2)*v1")
                     .substitute("a1", SymExpr(p_.A[0]))
                     .substitute("a2", SymExpr(p_.A[1]));
    SymExpr LB = E("(q1 - b1)*v2 - (q2 - b2)*v1")
                     .substitute("b1", SymExpr(p_.B[0]))
                     .substitute("b2", SymExpr(p_.B[1]));
    SymExpr u1v(p_.B[0] - p_.A[0]), u2v(p_.B[1] - p_.A[1]);
    SymExpr qAu = (E("q1") - SymExpr(p_.A[0])) * u1v + (E("q2") - SymExpr(p_.A[1])) * u2v;
    SymExpr qBu = (E("q1") - SymExpr(p_.B[0])) * u1v + (E("q2") - SymExpr(p_.B[1])) * u2v;
    SymExpr G = LA * LB - SymExpr(tcc.cA) * E("mA") * qAu / E("rA") -
                SymExpr(tcc.cB) * E("mB") * qBu / E("rB");

    HamiltonianSystem sys;
    sys.name = e.name;
    sys.chart = chart;
    sys.params = mass_env();
    sys.structure = DiffForm::canonical(chart);
    sys.hamiltonian = Observable::symbolic("H", chart, H, sys.params);
    sys.integrals = {sys.hamiltonian, Observable::symbolic("G", chart, G, sys.params)};
    // stop before running into either center
    double a1 = rat_double(p_.A[0]), a2 = rat_double(p_.A[1]);
    double b1 = rat_double(p_.B[0]), b2 = rat_double(p_.B[1]);
    sys.guard = Observable::numeric("min-center-distance", 4, [a1, a2, b1, b2](const Vec& x, double) {
        return std::min(std::hypot(x[0] - a1, x[1] - a2), std::hypot(x[0] - b1, x[1] - b2));
    });
    double mA = rat_double(p_.mA), mB = rat_double(p_.mB);
    sys.grad_T = [](const Vec& p) { return p; };
    sys.grad_V = [a1, a2, b1, b2, mA, mB](const Vec& q) {
        Eigen::Vector2d qA(q[0] - a1, q[1] - a2), qB(q[0] - b1, q[1] - b2);
        Eigen::Vector2d g = mA * qA / std::pow(qA.squaredNorm(), 1.5) +
                            mB * qB / std::pow(qB.squaredNorm(), 1.5);
        return Vec(g);
    };
    e.system = sys;
    return e;
}

CatalogEntry Catalog::projective_form_entry() const
{
    CatalogEntry e;
    e.name = "projective-two-center";
    e.doc = "Two-center structure after central projection to the affine chart q2 = 1, "
            "entered verbatim.  The coefficients carry poles along {q2 = 0} and zeros "
            "along {q1 = q2} and {q1 = -q2}; the top power stays constant, the right "
            "framework is a Dirac structure.  The projected momenta change is not part "
            "of the catalog.";
    Chart chart = make_chart("projective_two_center", {"q1", "q2", "v1", "v2"});
    e.chart = chart;
    DiffForm f(chart, 2);
    f.add_term({2, 0}, SymExpr(1));                      // dv1 ^ dq1
    f.add_term({0, 3}, E("q1/q2"));                      // (q1/q2) dq1 ^ dv2
    f.add_term({1, 2}, E("q1/q2"));                      // (q1/q2) dq2 ^ dv1
    f.add_term({0, 1}, E("(v2*q1 - v1*q2)/q2^2"));       // dq1 ^ dq2
    f.add_term({3, 1}, E("q1^2/q2^2 - 1"));              // dv2 ^ dq2
    e.form = f;
    e.golden = golden_report(Verdict::MixedDirac, Rat(0),
                             {{Polynomial::variable("q2"), Rat(0), Rat(-2)}});
    return e;
}

CatalogEntry Catalog::darboux_entry(int m, bool folded) const
{
    if (m < 1 || m > 12) throw DomainError("darboux model: m must be in 1..12");
    CatalogEntry e;
    e.name = folded ? ("darboux-folded:" + std::to_string(m))
                    : (m == 1 ? "darboux-b" : "darboux-bm:" + std::to_string(m));
    e.doc = folded ? "Folded Darboux model y1^m dx1^dy1 + dx2^dy2."
                   : "b^m Darboux model dx1^(dy1/y1^m) + dx2^dy2.";
    Chart chart = make_chart("darboux4", {"x1", "x2", "y1", "y2"});
    e.chart = chart;
    DiffForm f(chart, 2);
    f.add_term({0, 2}, folded ? SymExpr::variable("y1", 2 * m) : var_pow("y1", -2 * m));
    f.add_term({1, 3}, SymExpr(1));
    e.form = f;
    if (folded)
        e.golden = golden_report(Verdict::MFolded, Rat(m),
                                 {{Polynomial::variable("y1"), Rat(m), Rat(0)}});
    else
        e.golden = golden_report(Verdict::BM, Rat(m),
                                 {{Polynomial::variable("y1"), Rat(-m), Rat(-m)}});
    return e;
}

// ------------------------------------------------------- two-body systems

HamiltonianSystem Catalog::two_body_cartesian() const
{
    Chart chart = make_chart("two_body_planar",
                             {"q1x", "q1y", "q2x", "q2y", "p1x", "p1y", "p2x", "p2y"});
    Chart withr("two_body_planar",
                {{"q1x"}, {"q1y"}, {"q2x"}, {"q2y"}, {"p1x"}, {"p1y"}, {"p2x"}, {"p2y"}},
                {{"r12", parse_expr("(q2x - q1x)^2 + (q2y - q1y)^2").num()}}, {"m1", "m2", "k"});
    (void)chart;
    HamiltonianSystem sys;
    sys.name = "two-body-planar";
    sys.chart = withr;
    sys.params = mass_env();
    sys.structure = DiffForm::canonical(withr);
    sys.hamiltonian = Observable::symbolic(
        "H", withr, E("(p1x^2 + p1y^2)/(2*m1) + (p2x^2 + p2y^2)/(2*m2) - k/r12"), sys.params);
    sys.integrals = {sys.hamiltonian,
                     Observable::symbolic("Gx", withr, E("p1x + p2x"), sys.params),
                     Observable::symbolic("Gy", withr, E("p1y + p2y"), sys.params)};
    return sys;
}

HamiltonianSystem Catalog::two_body_jacobi() const
{
    Chart jc("jacobi_planar",
             {{"gx"}, {"gy"}, {"wx"}, {"wy"}, {"Gx"}, {"Gy"}, {"Wx"}, {"Wy"}},
             {{"rw", parse_expr("wx^2 + wy^2").num()}}, {"nu", "M", "k"});
    HamiltonianSystem sys;
    sys.name = "two-body-jacobi";
    sys.chart = jc;
    sys.params = mass_env();
    sys.params["nu"] = rat_double(p_.m1 + p_.m2);
    sys.structure = DiffForm::canonical(jc);
    sys.hamiltonian = Observable::symbolic(
        "H", jc, E("(Gx^2 + Gy^2)/(2*nu) + (Wx^2 + Wy^2)/(2*M) - k/rw"), sys.params);
    sys.integrals = {sys.hamiltonian, Observable::symbolic("Gx", jc, E("Gx"), sys.params),
                     Observable::symbolic("Gy", jc, E("Gy"), sys.params)};
    return sys;
}

HamiltonianSystem Catalog::levi_civita_regularized(double h) const
{
    Chart chart = make_chart("levi_civita_canonical", {"u1", "u2", "U1", "U2"});
    HamiltonianSystem sys;
    sys.name = "levi-civita-regularized";
    sys.chart = chart;
    sys.params = mass_env();
    sys.params["h"] = h;
    sys.structure = DiffForm::canonical(chart);
    // K = |U|^2/(4M) - k - (h/2)|u|^2; the K-flow on {K = 0} is the Kepler
    // flow under dt = r dtau with r = |u|^2/2.
    sys.hamiltonian = Observable::symbolic(
        "K", chart, E("(U1^2 + U2^2)/(4*M) - k - (h/2)*(u1^2 + u2^2)"), sys.params);
    sys.integrals = {
        sys.hamiltonian,
        Observable::symbolic("H", chart,
                             E("(U1^2 + U2^2)/(2*M*(u1^2 + u2^2)) - 2*k/(u1^2 + u2^2)"),
                             sys.params)};
    sys.phys_time_rate =
        Observable::symbolic("r", chart, E("(u1^2 + u2^2)/2"), sys.params);
    return sys;
}

} // namespace sstk
