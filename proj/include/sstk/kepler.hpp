#ifndef SSTK_KEPLER_HPP
#define SSTK_KEPLER_HPP

#include <array>

namespace sstk {

// Solves E - e sin E = M by damped Newton from E0 = M to |residual| < 1e-13.
double kepler_equation_solve(double mean_anomaly, double eccentricity);

// Planar position of primary 1 or 2 of the restricted problem at time t,
// masses 1-mu and mu, center of mass at the origin, semi-major axis 1 and
// unit mean motion; e = 0 is the circular default.
std::array<double, 2> primary_position(int which, double t, double mu, double e);

} // namespace sstk

#endif
