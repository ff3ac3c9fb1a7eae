#pragma once

#include <cmath>

#include "relax/core/limiter.hpp"

namespace relax {

// First-order relaxed interface flux,
//   F = F_L + (-a-/(a+ - a-)) [F_R - F_L - a+ (C_R - C_L)].
// Symmetric speeds reduce it to the local Lax-Friedrichs flux
// 1/2 (F_L + F_R) - a/2 (C_R - C_L); a- = 0 reduces it to upwind F_L.
template <typename Scalar>
inline Scalar first_order_flux(Scalar C_left, Scalar C_right, Scalar F_left, Scalar F_right,
                               Scalar a_minus, Scalar a_plus) {
  const Scalar gap = a_plus - a_minus;
  return F_left + (-a_minus / gap) * (F_right - F_left - a_plus * (C_right - C_left));
}

namespace kernels {

// Per-face wave data for one component. dC and dF are the jumps across the
// face (dF already carries any face velocity scaling); a_minus/a_plus the
// selected subcharacteristic speed pair at that face.
template <typename Scalar>
struct FaceWave {
  Scalar dC{}, dF{};
  Scalar a_minus{}, a_plus{};
};

// Second-order correction flux of the variable relaxed schemes at the center
// face of a three-face window {left, center, right} (interfaces j-3/2,
// j-1/2, j+1/2). The limiter arguments weigh neighbor wave strengths with
// the (1 + a a') eigenvector norms of the relaxation system.
template <typename Scalar>
inline Scalar variable_correction(const FaceWave<Scalar>& left, const FaceWave<Scalar>& center,
                                  const FaceWave<Scalar>& right, Scalar theta_tiny) {
  const Scalar gap_l = left.a_plus - left.a_minus;
  const Scalar gap_c = center.a_plus - center.a_minus;
  const Scalar gap_r = right.a_plus - right.a_minus;

  // right-going wave jumps -a- dC + dF, left-going wave jumps a+ dC - dF
  const Scalar wr_l = -left.a_minus * left.dC + left.dF;
  const Scalar wr_c = -center.a_minus * center.dC + center.dF;
  const Scalar wl_c = center.a_plus * center.dC - center.dF;
  const Scalar wl_r = right.a_plus * right.dC - right.dF;

  const Scalar theta_plus =
      limiter_ratio((Scalar(1) + center.a_plus * left.a_plus) / gap_l * wr_l,
                    (Scalar(1) + center.a_plus * center.a_plus) / gap_c * wr_c, theta_tiny);
  const Scalar theta_minus =
      limiter_ratio((Scalar(1) + right.a_minus * center.a_minus) / gap_r * wl_r,
                    (Scalar(1) + center.a_minus * center.a_minus) / gap_c * wl_c, theta_tiny);

  return (center.a_plus / gap_c) * (van_leer(theta_plus) / Scalar(2)) * wr_c -
         (center.a_minus / gap_c) * (van_leer(theta_minus) / Scalar(2)) * wl_c;
}

// Second-order correction of the constant-speed JX scheme at the center face,
// built by limiting on the characteristic differences dF +/- a dC. With the
// van Leer limiter this agrees with variable_correction at constant speeds
// even though the left-going limiter parameter is its reciprocal there.
template <typename Scalar>
inline Scalar jx_correction(const FaceWave<Scalar>& left, const FaceWave<Scalar>& center,
                            const FaceWave<Scalar>& right, Scalar theta_tiny) {
  const Scalar a = center.a_plus;
  const Scalar dwp_l = left.dF + a * left.dC;
  const Scalar dwp_c = center.dF + a * center.dC;
  const Scalar dwm_c = center.dF - a * center.dC;
  const Scalar dwm_r = right.dF - a * right.dC;

  const Scalar theta_plus = limiter_ratio(dwp_l, dwp_c, theta_tiny);
  const Scalar theta_minus = limiter_ratio(dwm_c, dwm_r, theta_tiny);

  return (dwp_c * van_leer(theta_plus) - dwm_r * van_leer(theta_minus)) / Scalar(4);
}

}  // namespace kernels

// Correction flux at interface j-1/2 from a four-cell component stencil
// (cells j-2 .. j+1) and speed pairs at interfaces j-3/2, j-1/2, j+1/2.
template <typename Scalar>
inline Scalar second_order_correction(const Scalar C[4], const Scalar F[4],
                                      const Scalar a_minus[3], const Scalar a_plus[3],
                                      Scalar theta_tiny = Scalar(0)) {
  kernels::FaceWave<Scalar> w[3];
  for (int k = 0; k < 3; ++k)
    w[k] = {C[k + 1] - C[k], F[k + 1] - F[k], a_minus[k], a_plus[k]};
  return kernels::variable_correction(w[0], w[1], w[2], theta_tiny);
}

}  // namespace relax
