/* smc.hpp
 *
 * Fixed-time sliding mode controller for a single double-integrator plant
 * with a bounded matched disturbance. The surface gain follows a two-stage
 * time schedule, so the control stays finite for every state (no terminal
 * singularity) and the reaching/sliding deadlines are set by the schedule
 * alone, not by the initial condition.
 */
#pragma once

#include "fixtrack/generator.hpp"

namespace fixtrack {

struct PlantState {
    double z1 = 0.0;  // position-like state
    double z2 = 0.0;  // velocity-like state
};

class SmcController {
public:
    // rho must dominate the declared disturbance bound (rho >= bound + 1);
    // violations are reported by validate(), not enforced here.
    SmcController(StagedGain schedule, double rho);

    const StagedGain& schedule() const { return schedule_; }
    double rho() const { return rho_; }

    // optional boundary layer; off by default (pure sgn)
    void enable_boundary_layer(double eps);

    // s = (h1/2 + 1) z1 + z2
    double surface(const PlantState& s, double t) const;

    // u = -h1_dot/2 z1 - (h1/2 + 1) z2 - h1/2 s - rho sgn(s)
    double control(const PlantState& s, double t) const;

    bool rho_admissible(double disturbance_bound) const { return rho_ >= disturbance_bound + 1.0; }

private:
    StagedGain schedule_;
    double rho_;
    double boundary_eps_ = 0.0;  // 0 disables the layer
};

// (z1_dot, z2_dot) = (z2, u + disturbance)
PlantState closed_loop_rhs(const SmcController& c, const PlantState& s, double t,
                           double disturbance);

}  // namespace fixtrack
