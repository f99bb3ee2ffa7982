#include "sstk/integrate.hpp"

#include <cmath>

namespace sstk {

std::string stop_reason_name(StopReason r)
{
    switch (r) {
    case StopReason::TEnd: return "t_end";
    case StopReason::GuardTriggered: return "singular_guard_triggered";
    case StopReason::StepFailure: return "step_failure";
    }
    return "?";
}

namespace {

// Dormand-Prince 4(5) tableau.
constexpr double C[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double A[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double B4[7] = {5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                          -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Stepper {
    const HamiltonianSystem& sys;
    bool extended; // track physical time as an extra component

    // y layout: [x (dim); tphys (if extended)]
    Vec deriv(double tau, const Vec& y) const
    {
        int d = sys.chart.dim();
        Vec x = y.head(d);
        double tphys = extended ? y[d] : tau;
        Vec dx = ham_field(sys, x, tphys);
        Vec dy(y.size());
        dy.head(d) = dx;
        if (extended) {
            double rate = 1.0;
            if (sys.phys_time_rate)
                rate = sys.phys_time_rate->value(x, tphys);
            else if (sys.time_factor)
                rate = sys.time_factor->value(x, tphys);
            dy[d] = rate;
        }
        return dy;
    }

    // One embedded step; returns 5th-order solution and the error estimate.
    void step(double t, const Vec& y, double h, Vec& y5, double& err,
              const IntegrateOptions& opt) const
    {
        Vec k[7];
        k[0] = deriv(t, y);
        for (int s = 1; s < 7; ++s) {
            Vec ys = y;
            for (int j = 0; j < s; ++j)
                if (A[s][j] != 0.0) ys += (h * A[s][j]) * k[j];
            k[s] = deriv(t + C[s] * h, ys);
        }
        // FSAL structure: stage 7 coefficients are the 5th-order weights.
        y5 = y;
        for (int j = 0; j < 6; ++j)
            if (A[6][j] != 0.0) y5 += (h * A[6][j]) * k[j];
        Vec y4 = y;
        for (int j = 0; j < 7; ++j)
            if (B4[j] != 0.0) y4 += (h * B4[j]) * k[j];
        err = 0.0;
        for (int i = 0; i < y.size(); ++i) {
            double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            double e = (y5[i] - y4[i]) / sc;
            err = std::max(err, std::abs(e));
        }
    }
};

} // namespace

Trajectory integrate(const HamiltonianSystem& sys, const Vec& x0, double t0, double t1,
                     const IntegrateOptions& opt)
{
    const int d = sys.chart.dim();
    if (x0.size() != d) throw DomainError("integrate: state dimension mismatch");
    bool extended = sys.phys_time_rate.has_value() || sys.time_factor.has_value() ||
                    sys.time_dependent();
    Stepper st{sys, extended};

    Trajectory traj;
    for (const auto& I : sys.integrals) traj.integral_names.push_back(I.name());
    traj.integral_samples.resize(sys.integrals.size());

    auto record = [&](double tau, const Vec& y) {
        Vec x = y.head(d);
        double tphys = extended ? y[d] : tau;
        traj.times.push_back(tau);
        traj.phys_times.push_back(tphys);
        traj.states.push_back(x);
        for (size_t i = 0; i < sys.integrals.size(); ++i)
            traj.integral_samples[i].push_back(sys.integrals[i].value(x, tphys));
    };

    Vec y(extended ? d + 1 : d);
    y.head(d) = x0;
    if (extended) y[d] = t0;

    if (sys.guard) {
        double g0 = sys.guard->value(x0, t0);
        if (std::abs(g0) < opt.guard_eps)
            throw DomainError("integrate: initial state already inside the guard region");
    }

    double span = t1 - t0;
    double dir = span >= 0 ? 1.0 : -1.0;
    double hmax = opt.h_max > 0 ? opt.h_max : std::abs(span) / 10.0;
    double h = opt.h_init > 0 ? opt.h_init : std::min(hmax, std::abs(span) / 100.0);
    h = std::max(h, 1e-12);
    double t = t0;

    record(t, y);

    auto guard_value = [&](const Vec& yy, double tau) {
        Vec x = yy.head(d);
        double tp = extended ? yy[d] : tau;
        return sys.guard->value(x, tp);
    };

    long steps = 0;
    while (dir * (t1 - t) > 1e-14 * std::max(1.0, std::abs(t1))) {
        if (++steps > opt.max_steps) {
            traj.reason = StopReason::StepFailure;
            traj.message = "maximum number of steps exceeded";
            return traj;
        }
        double hs = std::min(h, std::abs(t1 - t));
        Vec y5;
        double err;
        try {
            st.step(t, y, dir * hs, y5, err, opt);
        } catch (const Error& e) {
            // Field evaluation failed inside the step (pole, degenerate point):
            // treat like a rejected step and shrink.
            h = hs * 0.25;
            if (h < 1e-13 * std::max(1.0, std::abs(span))) {
                traj.reason = StopReason::StepFailure;
                traj.message = std::string("step collapsed near a singular point: ") + e.what();
                return traj;
            }
            continue;
        }
        if (err > 1.0) {
            h = hs * std::max(0.2, 0.9 * std::pow(err, -0.25));
            if (h < 1e-13 * std::max(1.0, std::abs(span))) {
                traj.reason = StopReason::StepFailure;
                traj.message = "step size underflow under the error control";
                return traj;
            }
            continue;
        }

        bool stop_here = false;
        double theta_hi = 1.0;
        StopReason stop_reason = StopReason::TEnd;

        if (sys.guard && std::abs(guard_value(y5, t + dir * hs)) < opt.guard_eps) {
            stop_here = true;
            stop_reason = StopReason::GuardTriggered;
        }
        if (!stop_here && opt.stop_phys_time && extended &&
            dir * (y5[d] - *opt.stop_phys_time) >= 0) {
            stop_here = true;
            stop_reason = StopReason::TEnd;
        }

        if (stop_here) {
            // Bisection on the step fraction for the earliest crossing.
            double lo = 0.0, hi = theta_hi;
            Vec ycross = y5;
            for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
                double mid = 0.5 * (lo + hi);
                Vec ym;
                double e2;
                st.step(t, y, dir * hs * mid, ym, e2, opt);
                bool crossed;
                if (stop_reason == StopReason::GuardTriggered)
                    crossed = std::abs(guard_value(ym, t + dir * hs * mid)) < opt.guard_eps;
                else
                    crossed = dir * (ym[d] - *opt.stop_phys_time) >= 0;
                if (crossed) {
                    hi = mid;
                    ycross = ym;
                } else {
                    lo = mid;
                }
            }
            t = t + dir * hs * hi;
            y = ycross;
            record(t, y);
            traj.reason = stop_reason;
            traj.message = stop_reason == StopReason::GuardTriggered
                               ? "guard crossed |g| < eps"
                               : "requested physical time reached";
            return traj;
        }

        t += dir * hs;
        y = y5;
        record(t, y);
        double fac = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h = std::min(hmax, hs * std::min(5.0, std::max(0.2, fac)));
    }
    traj.reason = StopReason::TEnd;
    return traj;
}

Trajectory leapfrog(const HamiltonianSystem& sys, const Vec& x0, double t0, double t1, double dt)
{
    if (!sys.grad_T || !sys.grad_V)
        throw DomainError("leapfrog: system has no kinetic/potential split");
    const int d = sys.chart.dim();
    const int n = d / 2;
    Trajectory traj;
    for (const auto& I : sys.integrals) traj.integral_names.push_back(I.name());
    traj.integral_samples.resize(sys.integrals.size());
    auto record = [&](double t, const Vec& x) {
        traj.times.push_back(t);
        traj.phys_times.push_back(t);
        traj.states.push_back(x);
        for (size_t i = 0; i < sys.integrals.size(); ++i)
            traj.integral_samples[i].push_back(sys.integrals[i].value(x, t));
    };
    Vec q = x0.head(n), p = x0.tail(n);
    double t = t0;
    record(t, x0);
    long nsteps = (long)std::ceil((t1 - t0) / dt);
    for (long s = 0; s < nsteps; ++s) {
        double h = std::min(dt, t1 - t);
        p -= 0.5 * h * sys.grad_V(q);
        q += h * sys.grad_T(p);
        p -= 0.5 * h * sys.grad_V(q);
        t += h;
        Vec x(d);
        x.head(n) = q;
        x.tail(n) = p;
        record(t, x);
    }
    traj.reason = StopReason::TEnd;
    return traj;
}

} // namespace sstk
