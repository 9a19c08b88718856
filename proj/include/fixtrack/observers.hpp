/* observers.hpp
 *
 * The three distributed fixed-time observers. Consensus-tracking observers
 * estimate each follower's position/velocity disagreement with the leader
 * (undirected and directed variants); the average-tracking observer
 * recovers the mean of per-agent reference signals on a leaderless
 * undirected graph. All three pair a generator-scheduled linear consensus
 * term with a switching term whose gain must dominate the exogenous
 * signals; validate_gains() checks the published inequalities.
 */
#pragma once

#include "fixtrack/generator.hpp"
#include "fixtrack/topology.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtrack {

struct ObserverGains {
    double b1 = 0.0, b2 = 0.0, c1 = 0.0, c2 = 0.0;
    StagedGain schedule;  // h2
};

struct ObserverState {
    Vector alpha;  // position-disagreement (ct) or average-position (dat) estimates
    Vector beta;   // velocity counterpart
};

// Signal bounds the gain conditions are stated against; all declared by the
// scenario. d_bar (directed mode) defaults to max_row_degree * 2 * d_max
// unless overridden with a nonnegative value.
struct SignalBounds {
    double u_max = 0.0;
    double d_max = 0.0;
    double a_max = 0.0;
    double d_bar_override = -1.0;
};

double effective_d_bar(const Topology& topo, const SignalBounds& bounds);

// One observer time derivative; alpha/beta of the returned state hold
// alpha_dot/beta_dot. The leader's virtual observer entries are fixed at
// zero. x0/v0 are the leader position/velocity, u the followers' control.
ObserverState undirected_ct_rhs(const Topology& topo, const ObserverGains& g,
                                const ObserverState& obs, const Vector& x, const Vector& v,
                                double x0, double v0, const Vector& u, double t);

ObserverState directed_ct_rhs(const Topology& topo, const ObserverGains& g,
                              const ObserverState& obs, const Vector& x, const Vector& v,
                              double x0, double v0, const Vector& u, double t);

// a_ref holds the per-agent reference accelerations. Rejects topologies with
// leader links.
ObserverState dat_rhs(const Topology& topo, const ObserverGains& g, const ObserverState& obs,
                      const Vector& a_ref, double t);

struct GainCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool strict = false;  // strict inequality required
    bool pass = false;
};

struct MinimalGains {
    double b1 = 0.0, b2 = 0.0, c1 = 0.0, c2 = 0.0;
};

struct GainReport {
    std::vector<GainCheck> checks;
    MinimalGains minimal;
    bool ok() const;
    std::string summary() const;
};

GainReport validate_gains(const Topology& topo, const ObserverGains& g, ObserverMode mode,
                          const SignalBounds& bounds);
GainReport validate_gains(const SpectralData& sd, const Topology& topo, const ObserverGains& g,
                          ObserverMode mode, const SignalBounds& bounds);

// errors between observer outputs and the ground truth (simulation only):
// ct modes against the true disagreements, dat mode against the reference
// averages. Returns (alpha_error, beta_error).
std::pair<Vector, Vector> observer_error_ct(const ObserverState& obs, const Vector& x,
                                            const Vector& v, double x0, double v0);
std::pair<Vector, Vector> observer_error_dat(const ObserverState& obs, double r_mean,
                                             double f_mean);

}  // namespace fixtrack
