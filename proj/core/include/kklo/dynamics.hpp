#pragma once

#include "kklo/matrix.hpp"
#include "kklo/rng.hpp"

#include <functional>
#include <string>
#include <vector>

namespace kklo {

/// Continuous-time autonomous plant x' = f(x) with scalar output y = h(x).
struct SystemModel {
    std::string name;
    std::size_t state_dim = 0;
    std::function<Vec(const Vec&)> rhs;
    std::function<double(const Vec&)> output;
};

/// Uniform-grid solution: times[k] = k*dt, one state and one output per
/// grid point.
struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<Vec> states;
    std::vector<double> outputs;

    std::size_t size() const { return times.size(); }
};

/// The chaotic benchmark plant:
///   x1' = 10 (x2 - x1)
///   x2' = x1 (28 - 10 x3) - x2
///   x3' = 10 x1 x2 - (8/3) x3
/// with measured output y = x2.
SystemModel lorenz_system();

/// Classical fourth-order Runge-Kutta update. Throws NumericError when the
/// result overflows to non-finite values (divergence).
Vec rk4_step(const SystemModel& sys, const Vec& x, double dt);

/// Integrate from x0 over the uniform grid {0, dt, ..., round(t_end/dt)*dt}.
/// Outputs are evaluated at every grid point. A diverging step rethrows
/// with the offending time attached.
Trajectory simulate(const SystemModel& sys, const Vec& x0, double dt, double t_end);

/// y_k + sigma * xi_k with xi_k iid standard normal. sigma = 0 returns the
/// outputs unchanged without consuming draws.
std::vector<double> noisy_outputs(const Trajectory& traj, double sigma, Rng& rng);

}  // namespace kklo
