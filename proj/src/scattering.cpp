#include "eisenlab/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace eisenlab::scattering {

namespace {

constexpr double kPi = std::numbers::pi;

double reduce_mod_2pi(double d) { return std::remainder(d, 2.0 * kPi); }

// unwrapped phase increment across [t0, t1]; refines until the raw motion
// per step is below pi/2
double unwrap_delta(double t0, double t1, double raw0, double raw1, int depth) {
  double d = reduce_mod_2pi(raw1 - raw0);
  if (std::abs(d) <= kPi / 2.0) return d;
  if (depth == 0)
    throw Error(Error::Kind::step_too_coarse,
                "phase step too coarse near t = " + std::to_string(t0));
  double tm = 0.5 * (t0 + t1);
  double rawm = principal_phase(tm);
  return unwrap_delta(t0, tm, raw0, rawm, depth - 1) +
         unwrap_delta(tm, t1, rawm, raw1, depth - 1);
}

}  // namespace

Complex c_at_half() {
  // Richardson over eps, 2eps, 4eps (orders 1 and 2 eliminated)
  const double eps = 2.5e-4;
  Complex f1 = c_ratio(Complex(0.5 + 4 * eps, 0.0));
  Complex f2 = c_ratio(Complex(0.5 + 2 * eps, 0.0));
  Complex f3 = c_ratio(Complex(0.5 + eps, 0.0));
  Complex r2 = 2.0 * f2 - f1;
  Complex r3 = 2.0 * f3 - f2;
  return r3 + (r3 - r2) / 3.0;
}

Complex constant_term(double a, Complex s) {
  if (!(a > 1.0)) throw Error(Error::Kind::usage, "constant_term: requires a > 1");
  const double ln_a = std::log(a);
  return std::exp(s * ln_a) + c_ratio(s) * std::exp((1.0 - s) * ln_a);
}

PhaseTable::PhaseTable(double t_max, double step, double t_min, int max_refine)
    : t_min_(t_min), step_(step), max_refine_(max_refine) {
  if (!(t_min > 0.0) || !(t_max > t_min) || !(step > 0.0))
    throw Error(Error::Kind::usage, "PhaseTable: need 0 < t_min < t_max, step > 0");
  psi_.push_back(principal_phase(t_min_));
  extend(t_max);
}

void PhaseTable::extend(double new_t_max) {
  std::size_t need = static_cast<std::size_t>(std::ceil((new_t_max - t_min_) / step_)) + 1;
  if (need <= psi_.size()) return;
  append_from(psi_.size());
  while (psi_.size() < need) append_from(psi_.size());
}

void PhaseTable::append_from(std::size_t first) {
  double prev_raw = reduce_mod_2pi(psi_[first - 1]);
  // principal arg differs from the tracked value by an exact multiple of 2pi
  double prev_psi = psi_[first - 1];
  double t_prev = node(first - 1);
  double t = node(first);
  double raw = principal_phase(t);
  double d = unwrap_delta(t_prev, t, prev_raw, raw, max_refine_);
  psi_.push_back(prev_psi + d);
}

double PhaseTable::phase(double t) const {
  if (t < t_min_ - step_ || t > t_max() + step_)
    throw Error(Error::Kind::usage, "phase: t outside tracked range");
  std::ptrdiff_t k = std::lround((t - t_min_) / step_);
  k = std::clamp<std::ptrdiff_t>(k, 0, std::ptrdiff_t(psi_.size()) - 1);
  double raw = principal_phase(t);
  double m = std::round((psi_[std::size_t(k)] - raw) / (2.0 * kPi));
  return raw + 2.0 * kPi * m;
}

double PhaseTable::phase_derivative(double t, double h) const {
  auto cd = [&](double hh) { return (phase(t + hh) - phase(t - hh)) / (2.0 * hh); };
  double d1 = cd(h);
  double d2 = cd(h / 2.0);
  if (std::abs(d1 - d2) > 1e-3)
    throw Error(Error::Kind::extrapolation_unstable,
                "phase_derivative: half-step validation failed at t = " +
                    std::to_string(t));
  return (4.0 * d2 - d1) / 3.0;
}

namespace {

long long target_index(double z) {
  // largest k with (2k+1) pi <= z
  return static_cast<long long>(std::floor((z / kPi - 1.0) / 2.0));
}

}  // namespace

ZeroScan find_zeros(const PhaseTable& table, double a, double t_max) {
  if (!(a > 1.0)) throw Error(Error::Kind::usage, "find_zeros: requires a > 1");
  if (t_max > table.t_max() + 1e-12)
    throw Error(Error::Kind::usage, "find_zeros: table does not cover t_max");

  ZeroScan scan;
  scan.a = a;
  scan.t_min = table.t_min();
  scan.t_max = t_max;
  scan.step = table.step();

  const double ln_a = std::log(a);
  auto Z = [&](double t) { return table.total_phase(ln_a, t); };

  bool seen_upward = false;
  double t0 = table.t_min();
  double z0 = Z(t0);
  const std::size_t n_steps =
      static_cast<std::size_t>(std::floor((t_max - table.t_min()) / table.step()));
  for (std::size_t k = 0; k <= n_steps; ++k) {
    double t1 = std::min(table.t_min() + table.step() * double(k + 1), t_max);
    if (t1 <= t0) break;
    double z1 = Z(t1);
    long long m0 = target_index(z0), m1 = target_index(z1);
    bool upward = z1 > z0;
    if (m0 != m1) {
      long long lo = std::min(m0, m1) + 1, hi = std::max(m0, m1);
      for (long long q = lo; q <= hi; ++q) {
        double target = (2.0 * double(q) + 1.0) * kPi;
        double lo_t = t0, hi_t = t1, f_lo = z0 - target;
        for (int it = 0; it < 100 && hi_t - lo_t > 1e-13; ++it) {
          double mid = 0.5 * (lo_t + hi_t);
          double fm = Z(mid) - target;
          if ((fm < 0) == (f_lo < 0)) {
            lo_t = mid;
            f_lo = fm;
          } else {
            hi_t = mid;
          }
        }
        double t_zero = 0.5 * (lo_t + hi_t);
        double residual = std::abs(Z(t_zero) - target);
        if (residual > 1e-10)
          throw Error(Error::Kind::no_sign_change,
                      "find_zeros: bisection failed to meet residual at t = " +
                          std::to_string(t_zero));
        if (!upward) {
          ++scan.down_crossings;
          if (seen_upward)
            throw Error(Error::Kind::monotonicity_violation,
                        "find_zeros: Z decreasing through a target beyond the "
                        "first zero (phase tracking or model failure) at t = " +
                            std::to_string(t_zero));
        } else {
          seen_upward = true;
        }
        scan.zeros.push_back({0, t_zero, q, residual, upward});
      }
    }
    t0 = t1;
    z0 = z1;
  }
  std::sort(scan.zeros.begin(), scan.zeros.end(),
            [](const auto& x, const auto& y) { return x.t < y.t; });
  for (std::size_t j = 0; j < scan.zeros.size(); ++j)
    scan.zeros[j].index = static_cast<int>(j) + 1;
  return scan;
}

long long winding_count(const PhaseTable& table, double a, double t_max, double step) {
  const double ln_a = std::log(a);
  long long crossings = 0;
  double t0 = table.t_min();
  long long m0 = target_index(table.total_phase(ln_a, t0));
  for (double t = t0 + step; t0 < t_max; t += step) {
    double t1 = std::min(t, t_max);
    long long m1 = target_index(table.total_phase(ln_a, t1));
    crossings += std::llabs(m1 - m0);
    m0 = m1;
    t0 = t1;
    if (t1 >= t_max) break;
  }
  return crossings;
}

namespace {

// smooth part of psi (Stirling phase only, no arg-zeta oscillation)
double psi_smooth(double t) {
  Complex lg = analytic::lngamma(Complex(0.5, t));
  return 2.0 * t * std::log(kPi) - 2.0 * lg.imag();
}

}  // namespace

double count_predicted(double a, double T) {
  if (!(T > 2.0 * kPi)) throw Error(Error::Kind::usage, "count_predicted: T > 2 pi");
  const double ln_a = std::log(a);
  auto zs = [&](double t) { return 2.0 * t * ln_a - psi_smooth(t); };
  return (zs(T) - zs(kTMin)) / (2.0 * kPi);
}

double count_deviation(double a, double T, const ZeroScan& scan) {
  long long observed = 0;
  for (const auto& z : scan.zeros)
    if (z.t <= T) ++observed;
  return std::abs(double(observed) - count_predicted(a, T));
}

double smooth_density(double a, double t) {
  const double h = 1e-4;
  double dpsi = (psi_smooth(t + h) - psi_smooth(t - h)) / (2.0 * h);
  return (2.0 * std::log(a) - dpsi) / (2.0 * kPi);
}

GapReport gaps(const PhaseTable& table, double a,
               const std::vector<ConstantTermZero>& zeros) {
  if (zeros.size() < 10)
    throw Error(Error::Kind::usage, "gaps: needs at least 10 zeros");
  const double ln_a = std::log(a);
  GapReport rep;
  for (std::size_t j = 0; j + 1 < zeros.size(); ++j) {
    double g = zeros[j + 1].t - zeros[j].t;
    rep.raw.push_back(g);
    rep.normalized.push_back(
        (table.total_phase(ln_a, zeros[j + 1].t) - table.total_phase(ln_a, zeros[j].t)) /
        (2.0 * kPi));
    rep.normalized_deriv.push_back(g * table.total_phase_derivative(ln_a, zeros[j].t) /
                                   (2.0 * kPi));
  }
  auto stats = [](const std::vector<double>& v, double& mean, double& var, double& cv) {
    mean = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
    var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= double(v.size());
    cv = std::sqrt(var) / mean;
  };
  stats(rep.normalized, rep.mean, rep.variance, rep.cv);
  double vd = 0.0;
  stats(rep.normalized_deriv, rep.mean_deriv, vd, rep.cv_deriv);
  return rep;
}

void write_zero_cache(const std::string& path, const ZeroScan& scan) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Kind::usage, "cannot write " + path);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", scan.a, scan.t_min,
                scan.t_max, scan.step);
  out << "a,t_min,t_max,step\n" << buf;
  out << "j,t_j,branch,residual\n";
  for (const auto& z : scan.zeros) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%lld,%.17g\n", z.index, z.t, z.branch,
                  z.residual);
    out << buf;
  }
}

ZeroScan read_zero_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::usage, "cannot read " + path);
  std::string line;
  auto next = [&]() {
    if (!std::getline(in, line))
      throw Error(Error::Kind::format, "zero cache truncated: " + path);
    return line;
  };
  if (next() != "a,t_min,t_max,step")
    throw Error(Error::Kind::format, "zero cache: bad header");
  ZeroScan scan;
  {
    std::istringstream row(next());
    char comma;
    row >> scan.a >> comma >> scan.t_min >> comma >> scan.t_max >> comma >> scan.step;
  }
  if (next() != "j,t_j,branch,residual")
    throw Error(Error::Kind::format, "zero cache: bad column header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ConstantTermZero z;
    char comma;
    std::istringstream row(line);
    row >> z.index >> comma >> z.t >> comma >> z.branch >> comma >> z.residual;
    if (!row) throw Error(Error::Kind::format, "zero cache: bad row " + line);
    scan.zeros.push_back(z);
  }
  return scan;
}

}  // namespace eisenlab::scattering
