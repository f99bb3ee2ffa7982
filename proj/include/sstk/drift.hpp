#ifndef SSTK_DRIFT_HPP
#define SSTK_DRIFT_HPP

#include "sstk/integrate.hpp"

#include <json.hpp>

namespace sstk {

struct IntegralDrift {
    std::string name;
    double initial = 0.0;
    double max_abs_dev = 0.0;
    double max_rel_drift = 0.0; // relative to |initial|, absolute when ~0
};

struct DriftReport {
    std::vector<IntegralDrift> integrals;
    double worst() const;
};

DriftReport monitor_integrals(const Trajectory& traj);
nlohmann::ordered_json drift_to_json(const DriftReport& r);

} // namespace sstk

#endif
