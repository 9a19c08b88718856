/* engine.hpp
 *
 * Fixed-step integration of the coupled plant/observer/controller system,
 * trajectory logging, and convergence/Lyapunov diagnostics. Forward Euler
 * is the default: the right-hand sides contain sgn discontinuities, so
 * higher-order accuracy claims do not hold; rk4 is available for smooth
 * sub-problems. State updates use compensated accumulation so network sum
 * invariants survive long runs.
 */
#pragma once

#include "fixtrack/topology.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fixtrack {

enum class IntegratorKind { euler, rk4 };

struct SimConfig {
    double dt = 1e-4;
    double horizon = 1.0;
    IntegratorKind integrator = IntegratorKind::euler;
    std::uint64_t seed = 1;
    int decimation = 100;  // log every `decimation` steps

    void validate() const;  // throws on nonsense
    std::size_t steps() const;
};

// dy must be filled with the derivative of y at time t
using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dy)>;

// called at t=0 and after every `decimation`-th step
using SampleHook = std::function<void(std::size_t step, double t, const std::vector<double>& y)>;

// Advances y in place over [0, horizon]. Throws std::runtime_error naming the
// step time and state component if the state stops being finite.
void integrate(const OdeRhs& rhs, std::vector<double>& y, const SimConfig& cfg,
               const SampleHook& on_sample);

struct RawTrajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> states;
};

RawTrajectory integrate(const OdeRhs& rhs, std::vector<double> y0, const SimConfig& cfg);

// First grid time after which the series stays <= threshold through the end;
// nullopt if it never settles. Throws on an empty series.
std::optional<double> settling_time(const std::vector<double>& t,
                                    const std::vector<double>& series, double threshold);

// Settling bound V0^(1-nu) / (mu (1-nu)) for V_dot + mu V^nu <= 0.
double finite_time_bound(double mu, double nu, double V0);

// Time-indexed record of one scenario run. Per-agent arrays are flattened
// as [sample * n + agent]; per-sample arrays have one entry per sample.
struct TrajectoryLog {
    int n = 0;
    std::vector<double> t;

    std::vector<double> x, v, u;              // agents (the plant itself in smc mode)
    std::vector<double> alpha, beta;          // observers (zero in smc mode)
    std::vector<double> err_pos, err_vel;     // observer errors (smc: distance to origin)
    std::vector<double> s;                    // sliding variables
    std::vector<double> v1;                   // 1/2 s^2 per agent
    std::vector<double> metric;               // tracking metric per agent

    std::vector<double> v_obs;                // the mode's observer Lyapunov function
    std::vector<double> leader_x, leader_v;   // ct modes
    std::vector<double> ref_mean_pos, ref_mean_vel;  // dat mode
    std::vector<double> sum_alpha_err, sum_beta_err; // dat conservation diagnostics

    std::size_t samples() const { return t.size(); }
    void reserve(std::size_t samples_hint);
};

enum class LyapunovKind { V1, V3, V4, V5, V6, V7 };

// Matrices/weights the Lyapunov functionals are built from; fill only what
// the requested kind needs.
struct LyapunovContext {
    Matrix grounded;  // Q: V3, V4
    Matrix h;         // L + B: V5
    Matrix laplacian; // L: V6, V7
    Vector p;         // V5
    double c1 = 0.0, c2 = 0.0;  // V5
};

// Recomputes a Lyapunov series from the logged states. V1 returns one value
// per agent per sample (flattened like the log arrays); the network kinds
// return one value per sample.
std::vector<double> lyapunov_series(const TrajectoryLog& log, LyapunovKind kind,
                                    const LyapunovContext& ctx);

}  // namespace fixtrack
