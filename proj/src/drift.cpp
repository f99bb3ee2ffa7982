#include "sstk/drift.hpp"

#include <cmath>

namespace sstk {

double DriftReport::worst() const
{
    double w = 0;
    for (const auto& d : integrals) w = std::max(w, d.max_rel_drift);
    return w;
}

DriftReport monitor_integrals(const Trajectory& traj)
{
    DriftReport rep;
    for (size_t i = 0; i < traj.integral_names.size(); ++i) {
        IntegralDrift d;
        d.name = traj.integral_names[i];
        const auto& vals = traj.integral_samples[i];
        if (vals.empty()) {
            rep.integrals.push_back(d);
            continue;
        }
        d.initial = vals.front();
        for (double v : vals) d.max_abs_dev = std::max(d.max_abs_dev, std::abs(v - d.initial));
        double denom = std::abs(d.initial) > 1e-12 ? std::abs(d.initial) : 1.0;
        d.max_rel_drift = d.max_abs_dev / denom;
        rep.integrals.push_back(d);
    }
    return rep;
}

nlohmann::ordered_json drift_to_json(const DriftReport& r)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& d : r.integrals) {
        nlohmann::ordered_json e;
        e["name"] = d.name;
        e["initial"] = d.initial;
        e["max_abs_dev"] = d.max_abs_dev;
        e["max_rel_drift"] = d.max_rel_drift;
        j.push_back(e);
    }
    return j;
}

} // namespace sstk
