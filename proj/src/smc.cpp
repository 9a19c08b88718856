#include "fixtrack/smc.hpp"

#include "fixtrack/switching.hpp"

#include <stdexcept>
#include <utility>

namespace fixtrack {

SmcController::SmcController(StagedGain schedule, double rho)
    : schedule_(std::move(schedule)), rho_(rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("SmcController: rho must be positive");
}

void SmcController::enable_boundary_layer(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("SmcController: boundary layer width must be positive");
    boundary_eps_ = eps;
}

double SmcController::surface(const PlantState& s, double t) const {
    return (0.5 * schedule_.value(t) + 1.0) * s.z1 + s.z2;
}

double SmcController::control(const PlantState& s, double t) const {
    const double h = schedule_.value(t);
    const double hd = schedule_.dot(t);
    const double sv = surface(s, t);
    const double sw = boundary_eps_ > 0.0 ? sat(sv, boundary_eps_) : sgn(sv);
    return -0.5 * hd * s.z1 - (0.5 * h + 1.0) * s.z2 - 0.5 * h * sv - rho_ * sw;
}

PlantState closed_loop_rhs(const SmcController& c, const PlantState& s, double t,
                           double disturbance) {
    return PlantState{s.z2, c.control(s, t) + disturbance};
}

}  // namespace fixtrack
