#pragma once

#include <cmath>

namespace hillconv {

// Everything is derived from integer powers of 3 at startup; no decimal
// literals, so the values carry full double precision.
inline const double cbrt3 = std::pow(3.0, 1.0 / 3.0);        // 3^(1/3)
inline const double cbrt9 = std::pow(3.0, 2.0 / 3.0);        // 3^(2/3)
inline const double three_4_3 = 3.0 * cbrt3;                 // 3^(4/3)
inline const double c0 = three_4_3 / 2.0;                    // critical energy offset
inline const double x_crit = std::pow(3.0, -1.0 / 3.0);      // |q1| at the critical points
inline const double q2_sup = 2.0 * std::pow(3.0, -4.0 / 3.0);  // sup |q2| on the Hill region

}  // namespace hillconv
