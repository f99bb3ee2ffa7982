#include "sstk/morse.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sstk {

MorseData morse_signature(const SymExpr& c, const Chart& chart,
                          const std::map<std::string, double>& point,
                          const std::map<std::string, double>& params)
{
    MorseData md;
    md.point = point;

    std::map<std::string, double> env = point;
    for (const auto& [k, v] : params) env.emplace(k, v);
    chart.complete_env(env);

    std::vector<int> active;
    for (int i = 0; i < chart.dim(); ++i)
        if (!chart.d_coord(c, i).is_zero()) {
            active.push_back(i);
            md.vars.push_back(chart.var(i).name);
        }

    double g2 = 0;
    for (int i : active) {
        double gi = chart.d_coord(c, i).eval(env);
        g2 += gi * gi;
    }
    md.gradient_norm = std::sqrt(g2);

    int n = (int)active.size();
    Eigen::MatrixXd H(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            H(a, b) = chart.d_coord(chart.d_coord(c, active[a]), active[b]).eval(env);
    H = 0.5 * (H + H.transpose().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    md.eigenvalues = ev;

    double scale = 0;
    for (double e : ev) scale = std::max(scale, std::abs(e));
    double tol = 1e-9 * std::max(1.0, scale);

    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < ev.size(); ++i) {
        if (i) os << ",";
        if (std::abs(ev[i]) <= tol) {
            os << "0";
            md.degenerate = true;
        } else {
            os << (ev[i] > 0 ? "+" : "-");
        }
    }
    os << ")";
    md.signature = os.str();
    return md;
}

} // namespace sstk
