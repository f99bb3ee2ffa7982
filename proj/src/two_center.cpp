#include "sstk/catalog.hpp"
#include "sstk/parse.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace sstk {

namespace {

// Shared construction of the two-center chart and of H, G over symbolic
// masses and center positions; the certification then holds for every
// admissible parameter value at once.
struct TwoCenterSym {
    Chart chart;
    SymExpr H;
    SymExpr G0, GA, GB; // G = G0 + cA*GA + cB*GB

    TwoCenterSym()
    {
        Polynomial sqA = parse_expr("(q1 - A1)^2 + (q2 - A2)^2").num();
        Polynomial sqB = parse_expr("(q1 - B1)^2 + (q2 - B2)^2").num();
        chart = Chart("two_center", {{"q1"}, {"q2"}, {"v1"}, {"v2"}},
                      {{"rA", sqA}, {"rB", sqB}}, {"mA", "mB"});
        H = parse_expr("(v1^2 + v2^2)/2 - mA/rA - mB/rB");
        SymExpr LA = parse_expr("(q1 - A1)*v2 - (q2 - A2)*v1");
        SymExpr LB = parse_expr("(q1 - B1)*v2 - (q2 - B2)*v1");
        G0 = LA * LB;
        // u = q_A - q_B = B - A
        GA = parse_expr("-mA*((q1 - A1)*(B1 - A1) + (q2 - A2)*(B2 - A2))/rA");
        GB = parse_expr("-mB*((q1 - B1)*(B1 - A1) + (q2 - B2)*(B2 - A2))/rB");
    }

    SymExpr bracket(const SymExpr& f, const SymExpr& g) const
    {
        // canonical pairs (q1,v1), (q2,v2)
        SymExpr b;
        b += chart.d_coord(f, 0) * chart.d_coord(g, 2) - chart.d_coord(f, 2) * chart.d_coord(g, 0);
        b += chart.d_coord(f, 1) * chart.d_coord(g, 3) - chart.d_coord(f, 3) * chart.d_coord(g, 1);
        return b;
    }

    SymExpr reduce(const SymExpr& e) const
    {
        return e.reduce_radical("rA", chart.derived()[0].square)
            .reduce_radical("rB", chart.derived()[1].square);
    }
};

Rat snap_rational(double x, long max_den = 64)
{
    long bn = 0, bd = 1;
    double berr = std::abs(x);
    for (long d = 1; d <= max_den; ++d) {
        long n = std::lround(x * d);
        double err = std::abs(x - (double)n / d);
        if (err < berr - 1e-15) {
            berr = err;
            bn = n;
            bd = d;
        }
    }
    return Rat(bn, bd);
}

} // namespace

TwoCenterConstants resolve_two_center_constants(unsigned seed)
{
    TwoCenterSym tc;
    SymExpr B0 = tc.bracket(tc.H, tc.G0);
    SymExpr BA = tc.bracket(tc.H, tc.GA);
    SymExpr BB = tc.bracket(tc.H, tc.GB);

    // Least squares over sampled phase-space points and parameters.
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    std::uniform_real_distribution<double> mass(0.3, 2.0);
    Eigen::MatrixXd M(40, 2);
    Eigen::VectorXd rhs(40);
    int row = 0;
    while (row < 40) {
        std::map<std::string, double> env{
            {"q1", unif(rng)}, {"q2", unif(rng)}, {"v1", unif(rng)}, {"v2", unif(rng)},
            {"A1", unif(rng)}, {"A2", unif(rng)}, {"B1", unif(rng)}, {"B2", unif(rng)},
            {"mA", mass(rng)}, {"mB", mass(rng)}};
        try {
            tc.chart.complete_env(env);
            if (env["rA"] < 0.2 || env["rB"] < 0.2) continue;
            M(row, 0) = BA.eval(env);
            M(row, 1) = BB.eval(env);
            rhs(row) = -B0.eval(env);
        } catch (const Error&) {
            continue;
        }
        ++row;
    }
    Eigen::Vector2d c = M.colPivHouseholderQr().solve(rhs);

    TwoCenterConstants out;
    out.cA = snap_rational(c[0]);
    out.cB = snap_rational(c[1]);
    out.residual = (M * Eigen::Vector2d(rat_double(out.cA), rat_double(out.cB)) - rhs).norm();

    SymExpr total = B0 + SymExpr(out.cA) * BA + SymExpr(out.cB) * BB;
    out.symbolic_zero = tc.reduce(total).is_zero();
    return out;
}

} // namespace sstk
