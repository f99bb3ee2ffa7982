#include "sstk/kepler.hpp"

#include "sstk/rational.hpp"

#include <cmath>

namespace sstk {

double kepler_equation_solve(double mean_anomaly, double e)
{
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("kepler: eccentricity must be in [0, 1)");
    double E = mean_anomaly;
    for (int it = 0; it < 50; ++it) {
        double f = E - e * std::sin(E) - mean_anomaly;
        if (std::abs(f) < 1e-13) return E;
        double step = f / (1.0 - e * std::cos(E));
        if (std::abs(step) > 1.0) step = step > 0 ? 1.0 : -1.0; // damping
        E -= step;
    }
    if (std::abs(E - e * std::sin(E) - mean_anomaly) < 1e-13) return E;
    throw DomainError("kepler: Newton iteration did not converge");
}

std::array<double, 2> primary_position(int which, double t, double mu, double e)
{
    double r_sep, cnu, snu;
    if (e == 0.0) {
        r_sep = 1.0;
        cnu = std::cos(t);
        snu = std::sin(t);
    } else {
        double E = kepler_equation_solve(t, e);
        double cE = std::cos(E), sE = std::sin(E);
        r_sep = 1.0 - e * cE;
        cnu = (cE - e) / r_sep;
        snu = std::sqrt(1.0 - e * e) * sE / r_sep;
    }
    // relative vector from primary 1 (mass 1-mu) to primary 2 (mass mu)
    double ex = r_sep * cnu, ey = r_sep * snu;
    if (which == 1) return {-mu * ex, -mu * ey};
    return {(1.0 - mu) * ex, (1.0 - mu) * ey};
}

} // namespace sstk
