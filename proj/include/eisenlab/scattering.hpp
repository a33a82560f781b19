// The GL(2)-model scattering ratio c(s) = xi(2(1-s))/xi(2s), its tracked
// continuous phase on the critical line, the truncated constant term
// a^s + c_s a^{1-s}, and the location/count/spacing of its zeros.
#ifndef EISENLAB_SCATTERING_HPP
#define EISENLAB_SCATTERING_HPP

#include <complex>
#include <string>
#include <vector>

#include "eisenlab/analytic.hpp"

namespace eisenlab::scattering {

using Complex = std::complex<double>;

/// Scans start here; t = 0 itself is a normalization artifact (c(1/2) = -1
/// forces the constant term to vanish identically in the limit).
constexpr double kTMin = 1e-3;

/// log xi(w) with xi(w) = pi^{-w/2} Gamma(w/2) zeta(w); imaginary part is
/// branch-local, suitable only inside exp-of-difference ratios.
template <class R>
std::complex<R> log_xi(const std::complex<R>& w) {
  return -w / R(2) * std::log(std::numbers::pi_v<R>) + analytic::lngamma(w / R(2)) +
         std::log(analytic::zeta(w));
}

/// c(s) as a ratio of completed zetas, evaluated in log space.
template <class R>
std::complex<R> c_ratio_t(const std::complex<R>& s) {
  auto v = std::exp(log_xi(R(2) * (R(1) - s)) - log_xi(R(2) * s));
  analytic::ensure_finite(v, "c_ratio");
  return v;
}

inline Complex c_ratio(Complex s) { return c_ratio_t<double>(s); }

/// c(1/2) by Richardson extrapolation of c(1/2 + eps); the limit is -1
/// (ratio of the xi residues at 0 and 1).
Complex c_at_half();

/// a^s + c(s) a^{1-s}.
Complex constant_term(double a, Complex s);

/// Principal argument of c(1/2 + it), in (-pi, pi].
template <class R>
R principal_phase(R t) {
  auto v = c_ratio_t(std::complex<R>(R(0.5), t));
  return std::arg(v);
}

/// psi'(t) from principal arguments alone (three-point unwrap); works at any
/// precision without a tracked table.
template <class R>
R local_phase_derivative(R t, R h = R(1e-4)) {
  const R pi_v = std::numbers::pi_v<R>;
  auto reduce = [&](R d) {
    while (d > pi_v) d -= 2 * pi_v;
    while (d < -pi_v) d += 2 * pi_v;
    return d;
  };
  R a0 = principal_phase(t - h), a1 = principal_phase(t), a2 = principal_phase(t + h);
  return (reduce(a1 - a0) + reduce(a2 - a1)) / (2 * h);
}

/// Continuous phase psi(t) of c(1/2+it), tracked on a grid from the anchor
/// psi(t_min) = principal argument. Lookups re-anchor the principal argument
/// at the query point against the nearest node, so values are exact (not
/// interpolated). Stateful during construction; immutable afterwards.
class PhaseTable {
public:
  explicit PhaseTable(double t_max, double step = 0.01, double t_min = kTMin,
                      int max_refine = 8);

  double t_min() const { return t_min_; }
  double t_max() const { return t_min_ + step_ * double(psi_.size() - 1); }
  double step() const { return step_; }

  /// Grow the table (used for tail-doubling experiments).
  void extend(double new_t_max);

  /// Continuous psi(t); valid for t within [t_min - step, t_max + step].
  double phase(double t) const;
  /// Centered difference with half-step validation and extrapolation.
  double phase_derivative(double t, double h = 1e-4) const;
  /// Z(t) = 2 t ln a - psi(t).
  double total_phase(double ln_a, double t) const { return 2.0 * t * ln_a - phase(t); }
  double total_phase_derivative(double ln_a, double t) const {
    return 2.0 * ln_a - phase_derivative(t);
  }

private:
  double node(std::size_t k) const { return t_min_ + step_ * double(k); }
  void append_from(std::size_t first);
  double t_min_, step_;
  int max_refine_;
  std::vector<double> psi_;
};

struct ConstantTermZero {
  int index = 0;       // 1-based, ordered by t
  double t = 0.0;
  long long branch = 0;  // k of the crossed target (2k+1) pi
  double residual = 0.0; // |Z(t) - target|
  bool upward = true;    // false only in the small-t artifact zone
};

struct ZeroScan {
  double a = 0.0;
  double t_min = kTMin, t_max = 0.0, step = 0.01;
  std::vector<ConstantTermZero> zeros;
  int down_crossings = 0;
};

/// All solutions of Z(t) = pi (mod 2pi) in (t_min, t_max]: every crossing of
/// an odd multiple of pi is bracketed on the scan grid and bisected to
/// |Z - target| < 1e-10. Decreasing Z is tolerated only in the pre-first-zero
/// dip (present for a < ~7); afterwards it raises the monotonicity error.
ZeroScan find_zeros(const PhaseTable& table, double a, double t_max);

/// Independent dense-scan crossing count (the winding-number oracle).
long long winding_count(const PhaseTable& table, double a, double t_max,
                        double step = 0.004);

/// Smooth N(T) main term from the model's own phase derivative (Stirling
/// part only, no arg-zeta oscillation), counted from t_min.
double count_predicted(double a, double T);
/// |#zeros - count_predicted|, the companion deviation.
double count_deviation(double a, double T, const ZeroScan& scan);

/// Smooth local zero density d/dT count_predicted.
double smooth_density(double a, double t);

struct GapReport {
  std::vector<double> raw;
  std::vector<double> normalized;        // winding: (Z(t_{j+1})-Z(t_j))/2pi
  std::vector<double> normalized_deriv;  // left-endpoint (t_{j+1}-t_j)Z'(t_j)/2pi
  double mean = 0, variance = 0, cv = 0;             // of normalized
  double mean_deriv = 0, cv_deriv = 0;               // diagnostic
};

/// Raw and normalized nearest-neighbor gaps; needs >= 10 zeros.
GapReport gaps(const PhaseTable& table, double a,
               const std::vector<ConstantTermZero>& zeros);

/// Zero-cache CSV (header "a,t_min,t_max,step", rows "j,t_j,branch,residual";
/// t printed with 17 significant digits so the round trip is exact).
void write_zero_cache(const std::string& path, const ZeroScan& scan);
ZeroScan read_zero_cache(const std::string& path);

}  // namespace eisenlab::scattering

#endif
