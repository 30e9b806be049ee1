#pragma once

#include "kklo/dynamics.hpp"
#include "kklo/matrix.hpp"
#include "kklo/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kklo {

struct LipNetParams;  // lipnet.hpp

/// The LTI filter z' = A z + B y of the observer. Construction rejects
/// non-Hurwitz A and inconsistent dimensions.
struct ObserverLTI {
    Matrix A;   // n_z x n_z, Hurwitz
    Matrix B;   // n_z x 1
    std::size_t n_z = 0;
    Vec z0;     // initial filter state
    double dt = 0.01;
};

/// Validated constructor; z0 defaults to zero.
ObserverLTI make_observer(const Matrix& A, const Matrix& B, double dt, Vec z0 = {});

/// The benchmark filter: A = -diag(8, 4, 2, 1), B = [1 1 1 1]^T, z0 = 0,
/// dt = 0.01.
ObserverLTI default_observer();

/// One (t, x, z) training record.
struct PairedRecord {
    double t = 0.0;
    Vec x;
    Vec z;
};

struct DatasetMeta {
    double sigma = 0.0;
    std::uint64_t seed = 0;
    double burn_in = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    std::string system;
    Matrix observer_a;
    Matrix observer_b;
};

struct PairedDataset {
    std::vector<PairedRecord> records;
    DatasetMeta meta;

    std::size_t size() const { return records.size(); }
    std::size_t state_dim() const { return records.empty() ? 0 : records.front().x.size(); }
    std::size_t z_dim() const { return records.empty() ? 0 : records.front().z.size(); }
};

/// Integrate z' = A z + B y with RK4, holding y at its latest grid value
/// across each step (zero-order hold). Returns z at every grid point;
/// z[0] = obs.z0 and z[k+1] consumes y[k].
std::vector<Vec> filter_outputs(const ObserverLTI& obs, const std::vector<double>& y, double dt);

/// Full data-collection pipeline: simulate the plant from x0 (all-ones when
/// empty), corrupt the outputs with sigma-scaled white noise, filter them to
/// z, then sample m distinct grid instants uniformly from (t_burn, t_end].
/// Records are returned in time order with full provenance metadata.
PairedDataset build_dataset(const SystemModel& sys, const ObserverLTI& obs, double sigma,
                            std::size_t m, double t_burn, double t_end, Rng& rng,
                            Vec x0 = {});

/// Pointwise x_hat = net(z) over a z sequence.
std::vector<Vec> estimate_states(const LipNetParams& net, const std::vector<Vec>& z_sequence);

}  // namespace kklo
