#ifndef SSTK_HYPERSURFACE_HPP
#define SSTK_HYPERSURFACE_HPP

#include "sstk/chart.hpp"

#include <map>
#include <string>
#include <vector>

namespace sstk {

// A candidate critical hypersurface {h = 0} with numeric witness points.
struct HypersurfaceSpec {
    Polynomial h;
    std::string label;
    std::vector<std::map<std::string, double>> samples; // coordinate values
    bool user_supplied = false;
    bool needs_confirmation = false; // built-in degree-2 candidate
};

struct NonPrincipalVanishing : Error {
    using Error::Error;
};

// Vanishing order of c along {h = 0}: multiplicity in the numerator minus
// multiplicity in the denominator.  Half-integer orders arise only through a
// single flagged variable.  When h divides neither side the order is 0 if c
// is nonzero on the witness points, otherwise NonPrincipalVanishing.
Rat order_along(const SymExpr& c, const HypersurfaceSpec& h,
                const std::map<std::string, double>& params = {});

// Builds a surface with witness samples on {h = 0}.  Sampling is exact for
// surfaces linear in some variable and numeric for quadratic ones; surfaces
// through the origin fall back to zeroing every involved variable.
HypersurfaceSpec make_surface(const Chart& chart, const Polynomial& h, const std::string& label,
                              const std::map<std::string, double>& params, unsigned seed,
                              int nsamples = 3);

// Candidate surfaces actually dividing c: coordinate hyperplanes for the
// variables of c plus a bounded list of degree-<=2 binomials/trinomials over
// pairs and triples of those variables.
std::vector<HypersurfaceSpec> detect_hypersurfaces(const SymExpr& c, const Chart& chart,
                                                   const std::map<std::string, double>& params = {},
                                                   unsigned seed = 20240601u);

// Least-squares slope of log|c| against log(var) as var -> 0+, all other
// symbols held at base; the numeric cross-check for fractional orders.
double log_log_slope(const SymExpr& c, const Chart& chart, const std::string& var,
                     std::map<std::string, double> base, double from = 1e-2, double to = 1e-5,
                     int npts = 7);

} // namespace sstk

#endif
