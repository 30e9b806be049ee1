#include "kklo/dynamics.hpp"

#include "kklo/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kklo {

SystemModel lorenz_system() {
    SystemModel sys;
    sys.name = "lorenz";
    sys.state_dim = 3;
    sys.rhs = [](const Vec& x) {
        return Vec{10.0 * (x[1] - x[0]),
                   x[0] * (28.0 - 10.0 * x[2]) - x[1],
                   10.0 * x[0] * x[1] - (8.0 / 3.0) * x[2]};
    };
    sys.output = [](const Vec& x) { return x[1]; };
    return sys;
}

Vec rk4_step(const SystemModel& sys, const Vec& x, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
    if (x.size() != sys.state_dim) throw std::invalid_argument("rk4_step: state size mismatch");

    const Vec k1 = sys.rhs(x);
    Vec xt = x;
    axpy(0.5 * dt, k1, xt);
    const Vec k2 = sys.rhs(xt);
    xt = x;
    axpy(0.5 * dt, k2, xt);
    const Vec k3 = sys.rhs(xt);
    xt = x;
    axpy(dt, k3, xt);
    const Vec k4 = sys.rhs(xt);

    Vec out = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!is_finite(out)) {
        throw NumericError("rk4_step: state diverged to a non-finite value");
    }
    return out;
}

Trajectory simulate(const SystemModel& sys, const Vec& x0, double dt, double t_end) {
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("simulate: dt and t_end must be positive");
    if (x0.size() != sys.state_dim) throw std::invalid_argument("simulate: x0 size mismatch");

    const std::size_t steps = static_cast<std::size_t>(std::llround(t_end / dt));
    Trajectory traj;
    traj.dt = dt;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.outputs.reserve(steps + 1);

    Vec x = x0;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        traj.times.push_back(t);
        traj.states.push_back(x);
        traj.outputs.push_back(sys.output(x));
        if (k < steps) {
            try {
                x = rk4_step(sys, x, dt);
            } catch (const NumericError&) {
                throw NumericError("simulate: divergence at t = " + std::to_string(t + dt));
            }
        }
    }
    return traj;
}

std::vector<double> noisy_outputs(const Trajectory& traj, double sigma, Rng& rng) {
    if (sigma < 0.0) throw std::invalid_argument("noisy_outputs: sigma must be >= 0");
    if (sigma == 0.0) return traj.outputs;
    std::vector<double> y = traj.outputs;
    for (double& v : y) v += sigma * rng.normal();
    return y;
}

}  // namespace kklo
