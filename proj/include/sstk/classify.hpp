#ifndef SSTK_CLASSIFY_HPP
#define SSTK_CLASSIFY_HPP

#include "sstk/diff_form.hpp"
#include "sstk/hypersurface.hpp"
#include "sstk/morse.hpp"

#include <optional>

namespace sstk {

enum class Verdict {
    Symplectic,
    BM,                      // pole of integer order m along one hypersurface
    MFolded,                 // zero of (possibly fractional) order m
    MixedDirac,              // poles and zeros coexist
    DegenerateNontransverse, // critical point of the top coefficient on its zero set
    Inconclusive
};

std::string verdict_name(Verdict v, const Rat& m);

struct SurfaceFinding {
    HypersurfaceSpec surface;
    Rat order;            // order of the top-power coefficient (negative = pole)
    Rat coeff_pole_order; // most negative order among form coefficients
    Rat coeff_zero_order; // largest positive coefficient order (coefficient scan)
    bool transverse = true;
    bool rescaled_nonzero = true;
    bool bm_pole_free = true;
    std::vector<std::string> notes;
};

struct SingularityReport {
    Verdict verdict = Verdict::Inconclusive;
    Rat m; // order for BM / MFolded
    bool closed = true;
    SymExpr top_coeff;
    std::vector<SurfaceFinding> surfaces;
    std::optional<MorseData> morse;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;

    std::string verdict_string() const { return verdict_name(verdict, m); }
};

struct ClassifyOptions {
    unsigned seed = 20240601u;
    int samples_per_surface = 3;
    double tol = 1e-9;
    std::map<std::string, double> params;        // numeric values of parameters
    std::vector<HypersurfaceSpec> user_surfaces;
    bool coefficient_analysis = true; // scan coefficients for poles/zeros (Dirac)
};

SingularityReport classify(const DiffForm& omega, const ClassifyOptions& opt = {});

} // namespace sstk

#endif
