/* switching.hpp
 *
 * Switching nonlinearities shared by the controllers and observers.
 * sgn(0) = 0 so that equilibria stay invariant.
 */
#pragma once

#include <algorithm>

namespace fixtrack {

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// boundary-layer replacement for sgn: linear inside |x| <= eps
inline double sat(double x, double eps) {
    if (eps <= 0.0) return sgn(x);
    return std::clamp(x / eps, -1.0, 1.0);
}

}  // namespace fixtrack
