#include "fixtrack/observers.hpp"

#include "fixtrack/switching.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fixtrack {

static void check_sizes(const Topology& topo, const ObserverState& obs, const Vector* x,
                        const Vector* v, const Vector* u) {
    const auto n = static_cast<Eigen::Index>(topo.n);
    if (obs.alpha.size() != n || obs.beta.size() != n)
        throw std::invalid_argument("observer rhs: observer state size mismatch");
    if ((x && x->size() != n) || (v && v->size() != n) || (u && u->size() != n))
        throw std::invalid_argument("observer rhs: state/input vector size mismatch");
}

// sum_{j=0..n} a_ij [(y_i - y_j) - (w_i - w_j)] with y_0 = 0 and w_0 the
// leader value; the leader's virtual observer entry is pinned at zero.
static double ct_disagreement(const Topology& topo, const Vector& y, const Vector& w,
                              double w0, int i) {
    double acc = 0.0;
    for (int j = 0; j < topo.n; ++j) {
        const double a = topo.adjacency(i, j);
        if (a > 0.0) acc += a * ((y(i) - y(j)) - (w(i) - w(j)));
    }
    const double a0 = topo.leader_links(i);
    if (a0 > 0.0) acc += a0 * (y(i) - (w(i) - w0));
    return acc;
}

ObserverState undirected_ct_rhs(const Topology& topo, const ObserverGains& g,
                                const ObserverState& obs, const Vector& x, const Vector& v,
                                double x0, double v0, const Vector& u, double t) {
    check_sizes(topo, obs, &x, &v, &u);
    const double h2 = g.schedule.value(t);
    ObserverState d{Vector(topo.n), Vector(topo.n)};
    for (int i = 0; i < topo.n; ++i) {
        const double da = ct_disagreement(topo, obs.alpha, x, x0, i);
        const double db = ct_disagreement(topo, obs.beta, v, v0, i);
        d.alpha(i) = obs.beta(i) - g.b1 * h2 * da - g.b2 * sgn(da);
        d.beta(i) = u(i) - g.c1 * h2 * db - g.c2 * sgn(db);
    }
    return d;
}

ObserverState directed_ct_rhs(const Topology& topo, const ObserverGains& g,
                              const ObserverState& obs, const Vector& x, const Vector& v,
                              double x0, double v0, const Vector& u, double t) {
    check_sizes(topo, obs, &x, &v, &u);
    const double f = g.schedule.value(t) + 2.0;
    ObserverState d{Vector(topo.n), Vector(topo.n)};
    for (int i = 0; i < topo.n; ++i) {
        const double da = ct_disagreement(topo, obs.alpha, x, x0, i);
        const double db = ct_disagreement(topo, obs.beta, v, v0, i);
        d.alpha(i) = obs.beta(i) - 2.0 * g.b1 * f * da - g.b2 * f * sgn(da);
        d.beta(i) = u(i) - 2.0 * g.c1 * f * db - g.c2 * f * sgn(db);
    }
    return d;
}

ObserverState dat_rhs(const Topology& topo, const ObserverGains& g, const ObserverState& obs,
                      const Vector& a_ref, double t) {
    check_sizes(topo, obs, &a_ref, nullptr, nullptr);
    if (topo.has_leader_link())
        throw std::invalid_argument("dat_rhs: average tracking is leaderless, remove leader links");
    const double h2 = g.schedule.value(t);
    ObserverState d{Vector(topo.n), Vector(topo.n)};
    for (int i = 0; i < topo.n; ++i) {
        double lin_a = 0.0, sw_a = 0.0, lin_b = 0.0, sw_b = 0.0;
        for (int j = 0; j < topo.n; ++j) {
            const double a = topo.adjacency(i, j);
            if (a > 0.0) {
                lin_a += a * (obs.alpha(i) - obs.alpha(j));
                sw_a += a * sgn(obs.alpha(i) - obs.alpha(j));
                lin_b += a * (obs.beta(i) - obs.beta(j));
                sw_b += a * sgn(obs.beta(i) - obs.beta(j));
            }
        }
        d.alpha(i) = -g.b1 * h2 * lin_a - g.b2 * sw_a + obs.beta(i);
        d.beta(i) = -g.c1 * h2 * lin_b - g.c2 * sw_b + a_ref(i);
    }
    return d;
}

double effective_d_bar(const Topology& topo, const SignalBounds& bounds) {
    if (bounds.d_bar_override >= 0.0) return bounds.d_bar_override;
    return topo.max_row_degree() * 2.0 * bounds.d_max;
}

bool GainReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string GainReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << ": " << c.value
           << (c.strict ? " > " : " >= ") << c.threshold << "\n";
    return os.str();
}

static GainCheck make_check(std::string name, double value, double threshold, bool strict) {
    const bool pass = strict ? value > threshold : value >= threshold;
    return {std::move(name), value, threshold, strict, pass};
}

GainReport validate_gains(const SpectralData& sd, const Topology& topo, const ObserverGains& g,
                          ObserverMode mode, const SignalBounds& bounds) {
    GainReport rep;
    rep.checks.push_back(make_check("b1 == c1 (|b1 - c1| == 0)", -std::abs(g.b1 - g.c1), 0.0, false));
    switch (mode) {
        case ObserverMode::undirected_ct: {
            const double lam = sd.lambda1_Q;
            rep.minimal = {0.5 / lam, 1.0, 0.5 / lam, bounds.u_max + bounds.d_max};
            rep.checks.push_back(make_check("b1 >= 1/(2 lambda1(Q))", g.b1, rep.minimal.b1, false));
            rep.checks.push_back(make_check("c1 >= 1/(2 lambda1(Q))", g.c1, rep.minimal.c1, false));
            rep.checks.push_back(make_check("b2 >= 1", g.b2, 1.0, false));
            rep.checks.push_back(make_check("c2 > u_max + d_max", g.c2, rep.minimal.c2, true));
            break;
        }
        case ObserverMode::directed_ct: {
            const double lam = sd.lambda1_Q;
            const double d_bar = effective_d_bar(topo, bounds);
            rep.minimal = {sd.p_max / (4.0 * lam), sd.p_max / lam, sd.p_max / (4.0 * lam),
                           sd.p_max * (d_bar + bounds.u_max) / lam};
            rep.checks.push_back(make_check("b1 >= p_max/(4 lambda1(Q))", g.b1, rep.minimal.b1, false));
            rep.checks.push_back(make_check("c1 >= p_max/(4 lambda1(Q))", g.c1, rep.minimal.c1, false));
            rep.checks.push_back(make_check("b2 >= p_max/lambda1(Q)", g.b2, rep.minimal.b2, false));
            rep.checks.push_back(
                make_check("c2 >= p_max (d_bar + u_max)/lambda1(Q)", g.c2, rep.minimal.c2, false));
            break;
        }
        case ObserverMode::dat: {
            const double lam = sd.lambda2_L;
            rep.minimal = {0.5 / lam, 1.0, 0.5 / lam, 2.0 * bounds.a_max};
            rep.checks.push_back(make_check("b1 >= 1/(2 lambda2(L))", g.b1, rep.minimal.b1, false));
            rep.checks.push_back(make_check("c1 >= 1/(2 lambda2(L))", g.c1, rep.minimal.c1, false));
            rep.checks.push_back(make_check("b2 >= 1", g.b2, 1.0, false));
            rep.checks.push_back(make_check("c2 > 2 a_max", g.c2, rep.minimal.c2, true));
            break;
        }
    }
    return rep;
}

GainReport validate_gains(const Topology& topo, const ObserverGains& g, ObserverMode mode,
                          const SignalBounds& bounds) {
    return validate_gains(spectral_data(topo, mode), topo, g, mode, bounds);
}

std::pair<Vector, Vector> observer_error_ct(const ObserverState& obs, const Vector& x,
                                            const Vector& v, double x0, double v0) {
    return {obs.alpha - (x.array() - x0).matrix(), obs.beta - (v.array() - v0).matrix()};
}

std::pair<Vector, Vector> observer_error_dat(const ObserverState& obs, double r_mean,
                                             double f_mean) {
    return {(obs.alpha.array() - r_mean).matrix(), (obs.beta.array() - f_mean).matrix()};
}

}  // namespace fixtrack
