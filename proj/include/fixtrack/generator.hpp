/* generator.hpp
 *
 * Time-based generator functions: a smooth termination function xi(t)
 * rising from 0 to 1 over a prescribed stage duration, the time-varying
 * gain h(t) = k*xi_dot/(1 - xi + delta) built from it, and two-stage
 * gain schedules used by the reaching and sliding phases.
 */
#pragma once

namespace fixtrack {

// Sixth-order polynomial termination function on [0, t_s], constant 1 after.
// xi(0)=0, xi(t_s)=1; xi_dot and xi_ddot vanish at both stage ends.
class TimeBasedGenerator {
public:
    explicit TimeBasedGenerator(double stage_seconds);

    double stage() const { return t_s_; }

    double xi(double t) const;
    double xi_dot(double t) const;
    double xi_ddot(double t) const;

private:
    double t_s_;
};

struct GainParams {
    double k;      // exponent, must be > 1
    double delta;  // regularizer, 0 < delta < 1

    GainParams(double k_, double delta_);
};

// h(t) = k * xi_dot / (1 - xi + delta); finite everywhere since the
// denominator never drops below delta.
double gain(const TimeBasedGenerator& g, const GainParams& p, double t);

// Exact analytic derivative of gain(): k*[xi_ddot*(1-xi+delta) + xi_dot^2] / (1-xi+delta)^2.
double gain_dot(const TimeBasedGenerator& g, const GainParams& p, double t);

// Contraction factor (delta/(1+delta))^k left on z after one full stage of
// z' = -h(t) z.
double decay_residual_factor(const GainParams& p);

// Two gain stages run back to back: stage 1 on [0, t1), stage 2 on
// [t1, t1+t2) with its generator clock restarted at t1, zero afterward.
// Restarting the clock keeps both the value and the derivative continuous
// at the joints (xi_dot and xi_ddot vanish at stage ends).
class StagedGain {
public:
    StagedGain(double t1, const GainParams& p1, double t2, const GainParams& p2);

    // same parameters for both stages
    static StagedGain uniform(double t1, double t2, const GainParams& p);

    double t1() const { return gen1_.stage(); }
    double t2() const { return gen2_.stage(); }
    double total() const { return t1() + t2(); }
    const GainParams& stage1_params() const { return p1_; }
    const GainParams& stage2_params() const { return p2_; }

    double value(double t) const;
    double dot(double t) const;

private:
    TimeBasedGenerator gen1_, gen2_;
    GainParams p1_, p2_;
};

}  // namespace fixtrack
