#pragma once

#include <cmath>

namespace relax {

// Van Leer limiter, phi(theta) = (theta + |theta|) / (1 + |theta|).
// Smooth, 0 <= phi <= 2, and phi(theta)/theta == phi(1/theta) for theta > 0.
// Non-finite theta (0/0 from a degenerate limiter ratio) signals flat data
// and maps to 0: flat data needs no correction.
template <typename Scalar>
inline Scalar van_leer(Scalar theta) {
  if (!std::isfinite(theta) || theta <= Scalar(0)) return Scalar(0);
  return Scalar(2) * theta / (Scalar(1) + theta);
}

// phi(theta) / (2 theta) for the van Leer limiter, closed form 1/(1+theta)
// on theta > 0 and 0 otherwise. Bounded in [0, 1]; used by the TVD
// coefficient diagnostics.
template <typename Scalar>
inline Scalar van_leer_over_2theta(Scalar theta) {
  if (!std::isfinite(theta) || theta <= Scalar(0)) return Scalar(0);
  return Scalar(1) / (Scalar(1) + theta);
}

// num/den with degenerate denominators mapped to 0 (theta = 0 convention).
template <typename Scalar>
inline Scalar limiter_ratio(Scalar num, Scalar den, Scalar tiny) {
  if (std::abs(den) <= tiny) return Scalar(0);
  const Scalar r = num / den;
  return std::isfinite(r) ? r : Scalar(0);
}

}  // namespace relax
