// Four-term Maass-Selberg inner-product formula for truncated Eisenstein
// series and its closed-form limit on the critical line.
#ifndef EISENLAB_MAASS_SELBERG_HPP
#define EISENLAB_MAASS_SELBERG_HPP

#include <array>
#include <complex>

#include "eisenlab/scattering.hpp"

namespace eisenlab::maass_selberg {

using Complex = std::complex<double>;

/// Truncation height plus the abstract cuspidal-data inner products
/// data[0][0] = <g1,g2>, data[0][1] = <g1,g2^w>, data[1][0] = <g1^w,g2>,
/// data[1][1] = <g1^w,g2^w>. Desk default: all ones.
struct MSContext {
  double T = 3.0;
  std::array<std::array<Complex, 2>, 2> data{{{Complex(1.0), Complex(1.0)},
                                              {Complex(1.0), Complex(1.0)}}};
  bool hermitian() const;
};

/// <Lambda^T E_s, Lambda^T E_r> by the four-term formula.
Complex ms_inner_product(const MSContext& ctx, Complex s, Complex r);

/// Closed-form limit r -> s = 1/2 + it:
/// data-diagonal * (2 ln T - psi'(t)) + Im(data01 * conj(c_s) * T^{2it}) / t;
/// for the desk default this is 2 ln T - psi'(t) + sin(2 t ln T - psi(t))/t.
/// Needs only the principal phase, so no tracked table is required.
double truncated_norm_sq(const MSContext& ctx, double t);

/// Same limit computed by Richardson extrapolation of the four-term formula
/// over eps in {1e-3, 5e-4, 2.5e-4} (the coherence oracle).
double truncated_norm_sq_extrapolated(const MSContext& ctx, double t);

struct ResidueReport {
  double residue = 0.0;         // extrapolated Res_{s=1} c(s)
  bool positive = false;
  double self_consistency = 0.0;  // |(s-1)c(s) at 1+1e-6 - residue|
  double extended_diff = 0.0;     // |double - long double| recompute
};

/// Residue of c at s = 1 via eps-extrapolation; the desk model's
/// residue-norm value (exactly 1/(2 xi(2)) = 3/pi).
ResidueReport residue_norm_check(const MSContext& ctx);

}  // namespace eisenlab::maass_selberg

#endif
