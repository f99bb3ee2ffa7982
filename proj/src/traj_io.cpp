#include "sstk/traj_io.hpp"

#include <cstdio>
#include <sstream>

namespace sstk {

std::string trajectory_to_csv(const Trajectory& traj, const Chart& chart)
{
    std::ostringstream os;
    os << "t,t_phys";
    for (const auto& v : chart.vars()) os << "," << v.name;
    for (const auto& n : traj.integral_names) os << "," << n;
    os << "\n";
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };
    for (size_t k = 0; k < traj.times.size(); ++k) {
        put(traj.times[k]);
        os << ",";
        put(traj.phys_times[k]);
        for (int i = 0; i < chart.dim(); ++i) {
            os << ",";
            put(traj.states[k][i]);
        }
        for (size_t i = 0; i < traj.integral_names.size(); ++i) {
            os << ",";
            put(traj.integral_samples[i][k]);
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json trajectory_to_json(const Trajectory& traj, const Chart& chart)
{
    nlohmann::ordered_json j;
    j["reason"] = stop_reason_name(traj.reason);
    j["message"] = traj.message;
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto& v : chart.vars()) cols.push_back(v.name);
    j["state_columns"] = cols;
    j["integral_names"] = traj.integral_names;
    j["t"] = traj.times;
    j["t_phys"] = traj.phys_times;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& x : traj.states) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (int i = 0; i < x.size(); ++i) r.push_back(x[i]);
        rows.push_back(r);
    }
    j["states"] = rows;
    nlohmann::ordered_json ints = nlohmann::ordered_json::array();
    for (const auto& s : traj.integral_samples) ints.push_back(s);
    j["integrals"] = ints;
    return j;
}

} // namespace sstk
