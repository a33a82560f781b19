// Complex special functions: log-gamma and digamma by shift-and-Stirling,
// Hurwitz/Riemann zeta and L(s,chi_-4) by Euler-Maclaurin, and completed
// L-functions Lambda(s) = Q^s prod Gamma(lambda_i s + mu_i) L(s).
//
// The numeric kernels are templated on the real scalar so the same code
// runs in hardware double (the baseline) and x87 long double (the
// extended-precision cross-check oracle).
#ifndef EISENLAB_ANALYTIC_HPP
#define EISENLAB_ANALYTIC_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "eisenlab/errors.hpp"

namespace eisenlab::analytic {

using Complex = std::complex<double>;

// B_2, B_4, ..., B_24
template <class R>
constexpr R bernoulli2k(int k) {
  constexpr double num[] = {1.0,    -1.0,  1.0,    -1.0,    5.0,      -691.0,
                            7.0,    -3617.0, 43867.0, -174611.0, 854513.0, -236364091.0};
  constexpr double den[] = {6.0,    30.0,  42.0,   30.0,    66.0,     2730.0,
                            6.0,    510.0,  798.0,  330.0,    138.0,    2730.0};
  return static_cast<R>(num[k - 1]) / static_cast<R>(den[k - 1]);
}

template <class R>
bool finite(const std::complex<R>& z) {
  return std::isfinite(static_cast<double>(z.real())) &&
         std::isfinite(static_cast<double>(z.imag()));
}

template <class R>
void ensure_finite(const std::complex<R>& z, const char* where) {
  if (!finite(z)) throw Error(Error::Kind::nonfinite, std::string(where) + ": non-finite");
}

/// Principal branch of log Gamma by upward recursion to Re z >= 15 followed
/// by a 10-term Stirling series. Branch-consistent on vertical lines.
template <class R>
std::complex<R> lngamma(std::complex<R> z) {
  using C = std::complex<R>;
  if (z.imag() == R(0) && z.real() <= R(0) &&
      std::abs(z.real() - std::round(static_cast<double>(z.real()))) < 1e-12)
    throw Error(Error::Kind::pole, "lngamma: pole at non-positive integer");
  C shift(0);
  while (z.real() < R(15)) {
    shift += std::log(z);
    z += R(1);
  }
  const R two_pi = 2 * std::numbers::pi_v<R>;
  C res = (z - R(0.5)) * std::log(z) - z + std::log(two_pi) / R(2);
  const C z2 = z * z;
  C zp = z;
  for (int n = 1; n <= 10; ++n) {
    res += bernoulli2k<R>(n) / (R(2 * n) * R(2 * n - 1)) / zp;
    zp *= z2;
  }
  res -= shift;
  ensure_finite(res, "lngamma");
  return res;
}

/// Digamma by the same shift-and-Stirling scheme.
template <class R>
std::complex<R> digamma(std::complex<R> z) {
  using C = std::complex<R>;
  if (z.imag() == R(0) && z.real() <= R(0) &&
      std::abs(z.real() - std::round(static_cast<double>(z.real()))) < 1e-12)
    throw Error(Error::Kind::pole, "digamma: pole at non-positive integer");
  C shift(0);
  while (z.real() < R(15)) {
    shift += R(1) / z;
    z += R(1);
  }
  C res = std::log(z) - R(1) / (R(2) * z);
  const C z2 = z * z;
  C zp = z2;
  for (int n = 1; n <= 10; ++n) {
    res -= bernoulli2k<R>(n) / (R(2 * n)) / zp;
    zp *= z2;
  }
  res -= shift;
  ensure_finite(res, "digamma");
  return res;
}

/// exp(w) - 1, stable for small |w|.
template <class R>
std::complex<R> expm1c(const std::complex<R>& w) {
  if (std::abs(w) < R(1e-4))
    return w * (R(1) + w / R(2) * (R(1) + w / R(3) * (R(1) + w / R(4))));
  return std::exp(w) - R(1);
}

namespace detail {

template <class R>
int euler_maclaurin_n(const std::complex<R>& s) {
  double t = std::abs(static_cast<double>(s.imag()));
  return std::max(20, static_cast<int>(std::ceil(t)) + 10);
}

// Sum of Bernoulli correction terms; shared by the Hurwitz variants.
template <class R>
std::complex<R> em_tail(const std::complex<R>& s, const std::complex<R>& na) {
  using C = std::complex<R>;
  const C lna = std::log(na);
  C poch = s;
  R fact = 2;
  C pw = std::exp(-(s + R(1)) * lna);
  C tot(0);
  for (int k = 1; k <= 12; ++k) {
    tot += bernoulli2k<R>(k) / fact * poch * pw;
    poch *= (s + R(2 * k - 1)) * (s + R(2 * k));
    fact *= R(2 * k + 1) * R(2 * k + 2);
    pw /= na * na;
  }
  return tot;
}

}  // namespace detail

/// Hurwitz zeta(s, a) for 0 < a <= 1 by Euler-Maclaurin
/// (N = max(20, ceil|Im s|+10) direct terms, 12 Bernoulli corrections).
template <class R>
std::complex<R> hurwitz_zeta(const std::complex<R>& s, R a) {
  using C = std::complex<R>;
  if (std::abs(s - C(1)) < R(1e-12))
    throw Error(Error::Kind::pole, "hurwitz_zeta: pole at s = 1");
  const int N = detail::euler_maclaurin_n(s);
  C tot(0);
  for (int n = 0; n < N; ++n) tot += std::exp(-s * std::log(C(n + a)));
  const C na(N + a);
  tot += std::exp((R(1) - s) * std::log(na)) / (s - R(1));
  tot += std::exp(-s * std::log(na)) / R(2);
  tot += detail::em_tail(s, na);
  ensure_finite(tot, "hurwitz_zeta");
  return tot;
}

/// Riemann zeta, accurate to ~1e-10 for |Im s| <= 300, -1 <= Re s <= 3.
template <class R>
std::complex<R> zeta(const std::complex<R>& s) {
  return hurwitz_zeta(s, R(1));
}

/// L(s, chi_-4) = 4^{-s} (zeta(s,1/4) - zeta(s,3/4)); entire. The two
/// Hurwitz pole terms are combined analytically so s = 1 is regular.
template <class R>
std::complex<R> dirichlet_L_chi4(const std::complex<R>& s) {
  using C = std::complex<R>;
  const int N = detail::euler_maclaurin_n(s);
  const R quarter = R(1) / R(4), three_quarter = R(3) / R(4);
  C tot(0);
  for (int n = 0; n < N; ++n) {
    tot += std::exp(-s * std::log(C(n + quarter)));
    tot -= std::exp(-s * std::log(C(n + three_quarter)));
  }
  const C na1(N + quarter), na2(N + three_quarter);
  const C l1 = std::log(na1), l2 = std::log(na2);
  // [(N+1/4)^{1-s} - (N+3/4)^{1-s}] / (s-1), regular at s = 1
  const C w = R(1) - s;
  const C ratio = std::abs(w) < R(1e-150)
                      ? (l1 - l2) * (R(1) + w * (l1 - l2) / R(2))
                      : expm1c(w * (l1 - l2)) / w;
  tot += -std::exp(w * l2) * ratio;
  tot += std::exp(-s * l1) / R(2) - std::exp(-s * l2) / R(2);
  tot += detail::em_tail(s, na1) - detail::em_tail(s, na2);
  tot *= std::exp(-s * std::log(R(4)));
  ensure_finite(tot, "dirichlet_L_chi4");
  return tot;
}

/// Dedekind zeta of Q(i): zeta(s) L(s, chi_-4).
template <class R>
std::complex<R> dedekind_gaussian(const std::complex<R>& s) {
  return zeta(s) * dirichlet_L_chi4(s);
}

/// A completed L-function Lambda(s) = Q^s prod Gamma(lambda_i s + mu_i) L(s).
struct LFunctionSpec {
  std::string name;
  int degree = 1;
  std::vector<std::pair<double, Complex>> gamma_factors;  // (lambda_i, mu_i)
  double conductor_power_base = 1.0;                      // Q
  std::function<Complex(Complex)> value;                  // analytic continuation
  std::function<double(int)> coefficient;                 // Dirichlet a(n)
  std::vector<Complex> pole_locations;
};

/// Riemann zeta as a completed spec: xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
const LFunctionSpec& zeta_spec();
/// L(s, chi_-4) completed with Q = 2/sqrt(pi), Gamma((s+1)/2).
const LFunctionSpec& chi4_spec();
/// zeta_{Q(i)} = zeta * L(chi_-4); degree 2, Q = 2/pi.
const LFunctionSpec& dedekind_spec();

/// log Lambda(s) summed per factor (imaginary part is branch-dependent;
/// use only in exp-of-difference ratios or for |Lambda|).
Complex completed_log(const LFunctionSpec& spec, Complex s);
/// Lambda(s); throws a pole error naming the offending location.
Complex completed(const LFunctionSpec& spec, Complex s);

/// Rotated-real value on the critical line: Re(e^{i phi(t)} L(1/2+it)) with
/// phi(t) = Im[s ln Q + sum lngamma(lambda_i s + mu_i)]. Sign changes are
/// the critical-line zeros of L (Z-function style, no external zero table).
double z_function(const LFunctionSpec& spec, double t);

/// Smooth zero-counting function phi(t)/pi (Riemann-von Mangoldt shape),
/// used for unfolding in the spacing statistics.
double smooth_zero_count(const LFunctionSpec& spec, double t);

/// Truncated Dirichlet series from a user coefficient file
/// (header lines "# key: value", then rows "n,a(n)"; see the CLI docs).
LFunctionSpec parse_lfunction_file(const std::string& path);

}  // namespace eisenlab::analytic

#endif
