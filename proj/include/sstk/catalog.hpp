#ifndef SSTK_CATALOG_HPP
#define SSTK_CATALOG_HPP

#include "sstk/classify.hpp"
#include "sstk/coordinate_map.hpp"
#include "sstk/hamsys.hpp"

#include <array>

namespace sstk {

struct BodyParams {
    Rat m1{1}, m2{1}, m3{1}; // n-body masses
    Rat G{1};                // gravitational constant
    Rat mu{Rat(1, 1000)};    // restricted-problem mass parameter, in (0,1)
    double e = 0.0;          // eccentricity of the primaries
    Rat mA{1}, mB{1};        // two fixed centers
    std::array<Rat, 2> A{Rat(1), Rat(0)};
    std::array<Rat, 2> B{Rat(-1), Rat(0)};

    void validate() const;
    Rat reduced_mass() const { return m1 * m2 / (m1 + m2); } // M
    Rat coupling() const { return G * m1 * m2; }             // k
};

struct CatalogEntry {
    std::string name;
    std::string doc;
    Chart chart;
    std::vector<CoordinateMap> maps;
    std::optional<DiffForm> form;
    std::optional<SingularityReport> golden;
    std::optional<HamiltonianSystem> system;
    std::map<std::string, double> classify_params;
    std::vector<HypersurfaceSpec> extra_surfaces;
    std::map<std::string, std::string> extras; // resolved constants, notes
};

// Resolution of the two fixed-center second integral: coefficients of the
// potential corrections in
//   G = (q_A x v)(q_B x v) - cA mA <q_A,u>/|q_A| - cB mB <q_B,u>/|q_B|,
// fixed by requiring {H, G} = 0 (least squares, then exact certification).
struct TwoCenterConstants {
    Rat cA, cB;
    double residual = 0.0;      // numeric least-squares residual
    bool symbolic_zero = false; // {H,G} == 0 certified in the radical ring
};
TwoCenterConstants resolve_two_center_constants(unsigned seed = 12345u);

class Catalog {
public:
    explicit Catalog(const BodyParams& p = {});

    const BodyParams& params() const { return p_; }
    std::vector<std::string> names() const;
    // Accepts "darboux-bm:4"-style suffixes.
    CatalogEntry entry(const std::string& name) const;
    CoordinateMap map_by_name(const std::string& name) const;
    std::vector<std::string> map_names() const;

    CatalogEntry kepler_planar_entry() const;
    CatalogEntry levi_civita_entry() const;
    CatalogEntry ks_entry() const;
    CatalogEntry mcgehee_collapse_entry(int nbodies = 3) const;
    CatalogEntry r3bp_mcgehee_entry() const;
    CatalogEntry two_fixed_center_entry() const;
    CatalogEntry projective_form_entry() const;
    CatalogEntry darboux_entry(int m, bool folded) const;

    CoordinateMap jacobi_map() const;                 // planar two-body, dim 8
    CoordinateMap levi_civita_map() const;            // (u,W) -> (w,W)
    CoordinateMap levi_civita_symplectic_map() const; // (u,U) -> (w,W)
    CoordinateMap ks_map() const;
    CoordinateMap mcgehee_collapse_map(int nbodies = 3) const;
    CoordinateMap cart_to_polar_map() const;
    CoordinateMap xchart_to_polar_map() const;

    // Planar two-body system in cartesian coordinates and its Jacobi-chart
    // image; used by the chart-equivalence checks.
    HamiltonianSystem two_body_cartesian() const;
    HamiltonianSystem two_body_jacobi() const;

    // Canonical Levi-Civita regularization of planar Kepler on the energy
    // level H = h: K = |U|^2/(4M) - k - (h/2)|u|^2 with dt = r dtau.
    HamiltonianSystem levi_civita_regularized(double h) const;

private:
    BodyParams p_;
    std::map<std::string, double> mass_env() const;
};

} // namespace sstk

#endif
