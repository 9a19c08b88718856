#include "fixtrack/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace fixtrack {

TimeBasedGenerator::TimeBasedGenerator(double stage_seconds) : t_s_(stage_seconds) {
    if (!(stage_seconds > 0.0) || !std::isfinite(stage_seconds))
        throw std::invalid_argument("TimeBasedGenerator: stage duration must be positive");
}

static void require_nonnegative_time(double t) {
    if (t < 0.0 || !std::isfinite(t))
        throw std::invalid_argument("time-based generator: t must be >= 0");
}

double TimeBasedGenerator::xi(double t) const {
    require_nonnegative_time(t);
    if (t >= t_s_) return 1.0;
    const double r = t / t_s_;
    const double r4 = r * r * r * r;
    const double val = r4 * (10.0 * r * r - 24.0 * r + 15.0);
    // clamp roundoff; the exact value lies in [0, 1]
    return val < 0.0 ? 0.0 : (val > 1.0 ? 1.0 : val);
}

double TimeBasedGenerator::xi_dot(double t) const {
    require_nonnegative_time(t);
    if (t >= t_s_) return 0.0;
    const double d = t - t_s_;
    return 60.0 * t * t * t * d * d / std::pow(t_s_, 6);
}

double TimeBasedGenerator::xi_ddot(double t) const {
    require_nonnegative_time(t);
    if (t >= t_s_) return 0.0;
    return 60.0 * t * t * (t - t_s_) * (5.0 * t - 3.0 * t_s_) / std::pow(t_s_, 6);
}

GainParams::GainParams(double k_, double delta_) : k(k_), delta(delta_) {
    if (!(k > 1.0))
        throw std::invalid_argument("GainParams: k must be > 1");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("GainParams: delta must be in (0, 1)");
}

double gain(const TimeBasedGenerator& g, const GainParams& p, double t) {
    return p.k * g.xi_dot(t) / (1.0 - g.xi(t) + p.delta);
}

double gain_dot(const TimeBasedGenerator& g, const GainParams& p, double t) {
    const double den = 1.0 - g.xi(t) + p.delta;
    const double xd = g.xi_dot(t);
    return p.k * (g.xi_ddot(t) * den + xd * xd) / (den * den);
}

double decay_residual_factor(const GainParams& p) {
    return std::pow(p.delta / (1.0 + p.delta), p.k);
}

StagedGain::StagedGain(double t1, const GainParams& p1, double t2, const GainParams& p2)
    : gen1_(t1), gen2_(t2), p1_(p1), p2_(p2) {}

StagedGain StagedGain::uniform(double t1, double t2, const GainParams& p) {
    return StagedGain(t1, p, t2, p);
}

double StagedGain::value(double t) const {
    require_nonnegative_time(t);
    if (t < t1()) return gain(gen1_, p1_, t);
    if (t < t1() + t2()) return gain(gen2_, p2_, t - t1());
    return 0.0;
}

double StagedGain::dot(double t) const {
    require_nonnegative_time(t);
    if (t < t1()) return gain_dot(gen1_, p1_, t);
    if (t < t1() + t2()) return gain_dot(gen2_, p2_, t - t1());
    return 0.0;
}

}  // namespace fixtrack
