#include "eisenlab/maass_selberg.hpp"

#include <cmath>

namespace eisenlab::maass_selberg {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool MSContext::hermitian() const {
  return std::abs(data[0][1] - std::conj(data[1][0])) < 1e-12 &&
         std::abs(data[0][0].imag()) < 1e-12 && std::abs(data[1][1].imag()) < 1e-12;
}

Complex ms_inner_product(const MSContext& ctx, Complex s, Complex r) {
  if (!(ctx.T > 1.0)) throw Error(Error::Kind::usage, "MSContext: T > 1 required");
  const Complex rb = std::conj(r);
  const Complex e1 = s + rb - 1.0;
  const Complex e2 = s - rb;        // s + (1 - rb) - 1
  const Complex e3 = rb - s;        // (1 - s) + rb - 1
  const Complex e4 = 1.0 - s - rb;  // (1 - s) + (1 - rb) - 1
  for (const Complex& e : {e1, e2, e3, e4})
    if (std::abs(e) < 1e-12)
      throw Error(Error::Kind::degenerate_exponent,
                  "ms_inner_product: degenerate exponent; use truncated_norm_sq");
  const Complex cs = scattering::c_ratio(s);
  const Complex cr_bar = std::conj(scattering::c_ratio(r));
  const double lnT = std::log(ctx.T);
  auto tpow = [&](Complex e) { return std::exp(e * lnT); };
  return ctx.data[0][0] * tpow(e1) / e1 + ctx.data[0][1] * cr_bar * tpow(e2) / e2 +
         ctx.data[1][0] * cs * tpow(e3) / e3 +
         ctx.data[1][1] * cs * cr_bar * tpow(e4) / e4;
}

double truncated_norm_sq(const MSContext& ctx, double t) {
  if (!(ctx.T > 1.0)) throw Error(Error::Kind::usage, "MSContext: T > 1 required");
  if (!(t > 0.0)) throw Error(Error::Kind::usage, "truncated_norm_sq: t > 0 required");
  if (!ctx.hermitian() || std::abs(ctx.data[0][0] - ctx.data[1][1]) > 1e-12)
    throw Error(Error::Kind::usage,
                "truncated_norm_sq: closed form needs Hermitian data with equal "
                "diagonal corners");
  const double lnT = std::log(ctx.T);
  const double psi = scattering::principal_phase(t);
  const double dpsi = scattering::local_phase_derivative(t);
  const Complex cs_bar = std::exp(Complex(0.0, -psi));
  const Complex middle = ctx.data[0][1] * cs_bar * std::exp(Complex(0.0, 2.0 * t * lnT));
  return ctx.data[0][0].real() * (2.0 * lnT - dpsi) + middle.imag() / t;
}

double truncated_norm_sq_extrapolated(const MSContext& ctx, double t) {
  const Complex s(0.5, t);
  auto at = [&](double eps) {
    return ms_inner_product(ctx, s, Complex(0.5, t + eps)).real();
  };
  const double m1 = at(1e-3), m2 = at(5e-4), m3 = at(2.5e-4);
  const double r2 = 2.0 * m2 - m1;
  const double r3 = 2.0 * m3 - m2;
  return r3 + (r3 - r2) / 3.0;
}

ResidueReport residue_norm_check(const MSContext&) {
  auto sample = [](double eps) {
    return (eps * scattering::c_ratio(Complex(1.0 + eps, 0.0))).real();
  };
  const double r1 = sample(1e-2), r2 = sample(5e-3), r3 = sample(2.5e-3);
  const double q2 = 2.0 * r2 - r1;
  const double q3 = 2.0 * r3 - r2;
  ResidueReport rep;
  rep.residue = q3 + (q3 - q2) / 3.0;
  if (std::abs(rep.residue - r3) > 0.05)
    throw Error(Error::Kind::extrapolation_unstable,
                "residue_norm_check: extrapolation sequence not settling");
  rep.positive = rep.residue > 0.0;
  rep.self_consistency = std::abs(sample(1e-6) - rep.residue);

  using CL = std::complex<long double>;
  auto sample_l = [](long double eps) {
    return static_cast<double>(
        (eps * scattering::c_ratio_t(CL(1.0L + eps, 0.0L))).real());
  };
  const double l1 = sample_l(1e-2L), l2 = sample_l(5e-3L), l3 = sample_l(2.5e-3L);
  const double p2 = 2.0 * l2 - l1;
  const double p3 = 2.0 * l3 - l2;
  rep.extended_diff = std::abs(rep.residue - (p3 + (p3 - p2) / 3.0));
  return rep;
}

}  // namespace eisenlab::maass_selberg
