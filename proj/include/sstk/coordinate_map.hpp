#ifndef SSTK_COORDINATE_MAP_HPP
#define SSTK_COORDINATE_MAP_HPP

#include "sstk/diff_form.hpp"

#include <memory>
#include <optional>

namespace sstk {

// One target coordinate of a map.  Either an explicit expression in the
// source symbols, or an opaque component carrying only its differential
// (used for angle coordinates like alpha = atan2(Y, X), whose differential
// is rational even though the angle itself is not).
struct MapComponent {
    std::optional<SymExpr> expr;
    std::map<std::string, SymExpr> opaque_diff; // source var name -> coefficient
    bool opaque() const { return !expr.has_value(); }

    static MapComponent of(const SymExpr& e) { return {e, {}}; }
    static MapComponent opaque_with_diff(std::map<std::string, SymExpr> d)
    {
        return {std::nullopt, std::move(d)};
    }
};

class CoordinateMap {
public:
    CoordinateMap() = default;
    CoordinateMap(std::string name, Chart source, Chart target,
                  std::vector<MapComponent> components);

    static CoordinateMap identity(const Chart& c);

    const std::string& name() const { return name_; }
    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const std::vector<MapComponent>& components() const { return comps_; }

    void declare_inverse(std::shared_ptr<const CoordinateMap> inv) { inverse_ = std::move(inv); }
    std::shared_ptr<const CoordinateMap> inverse() const { return inverse_; }

    // d(component j) expanded on the source chart: source index -> coefficient.
    std::map<int, SymExpr> component_differential(int j) const;

    // Jacobian entries as one (dim_target x dim_source) grid of SymExpr.
    std::vector<std::vector<SymExpr>> jacobian() const;

    DiffForm pullback(const DiffForm& target_form) const;

    // Pushes a numeric source point through the map (opaque components need
    // an explicit value hook; none of the catalog pullbacks require one).
    std::vector<double> apply(const std::vector<double>& source_point) const;

    // Semantic check of map o inverse == identity; false when no inverse is
    // declared or the composition cannot be formed in the ring.
    bool verify_inverse() const;

private:
    std::string name_;
    Chart source_, target_;
    std::vector<MapComponent> comps_;
    std::shared_ptr<const CoordinateMap> inverse_;
};

// compose(phi, psi) = phi after psi; requires target(psi) == source(phi).
// pullback(compose(phi, psi), a) == pullback(psi, pullback(phi, a)).
CoordinateMap compose(const CoordinateMap& phi, const CoordinateMap& psi);

} // namespace sstk

#endif
