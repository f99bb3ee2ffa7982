#ifndef SSTK_INTEGRATE_HPP
#define SSTK_INTEGRATE_HPP

#include "sstk/hamsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sstk {

struct IntegrateOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double guard_eps = 1e-6;
    double h_init = 0.0; // 0 = automatic
    double h_max = 0.0;  // 0 = span/10
    long max_steps = 2000000;
    std::optional<double> stop_phys_time; // stop when tracked physical time crosses this
};

enum class StopReason { TEnd, GuardTriggered, StepFailure };

std::string stop_reason_name(StopReason r);

struct Trajectory {
    std::vector<double> times;      // evolution parameter of the integrator
    std::vector<double> phys_times; // physical time (equals times when no rate)
    std::vector<Vec> states;
    std::vector<std::string> integral_names;
    std::vector<std::vector<double>> integral_samples; // [integral][step]
    StopReason reason = StopReason::TEnd;
    std::string message;

    const Vec& last_state() const { return states.back(); }
};

// Adaptive embedded Runge-Kutta 4(5) (Dormand-Prince) with event detection:
// integration stops when |guard| < guard_eps, the crossing refined by
// bisection on the step.  Declared first integrals are recorded at every
// accepted step.
Trajectory integrate(const HamiltonianSystem& sys, const Vec& x0, double t0, double t1,
                     const IntegrateOptions& opt = {});

// Fixed-step leapfrog baseline for canonical charts with H = T(p) + V(q);
// requires grad_T / grad_V on the system.
Trajectory leapfrog(const HamiltonianSystem& sys, const Vec& x0, double t0, double t1,
                    double dt);

} // namespace sstk

#endif
