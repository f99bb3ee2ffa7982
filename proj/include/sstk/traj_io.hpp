#ifndef SSTK_TRAJ_IO_HPP
#define SSTK_TRAJ_IO_HPP

#include "sstk/integrate.hpp"

#include <json.hpp>

namespace sstk {

std::string trajectory_to_csv(const Trajectory& traj, const Chart& chart);
nlohmann::ordered_json trajectory_to_json(const Trajectory& traj, const Chart& chart);

} // namespace sstk

#endif
