#include "eisenlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eisenlab::spectrum {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> factor_zeros(const analytic::LFunctionSpec& spec, double t_max) {
  std::vector<double> out;
  const double step = 0.02;
  double t0 = 0.2;
  double f0 = analytic::z_function(spec, t0);
  for (double t = t0 + step; t0 < t_max; t += step) {
    double t1 = std::min(t, t_max);
    double f1 = analytic::z_function(spec, t1);
    if ((f0 < 0) != (f1 < 0)) {
      double lo = t0, hi = t1, flo = f0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = analytic::z_function(spec, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    t0 = t1;
    f0 = f1;
    if (t1 >= t_max) break;
  }
  return out;
}

}  // namespace

const ThetaProvider& default_theta() {
  static const ThetaProvider provider = [] {
    ThetaProvider p;
    p.name = "delta-at-i";
    p.evaluate = [](Complex s) {
      return analytic::dedekind_gaussian(s) / analytic::zeta(2.0 * s);
    };
    p.line_zeros = [](double t_max) {
      auto z1 = factor_zeros(analytic::zeta_spec(), t_max);
      auto z2 = factor_zeros(analytic::chi4_spec(), t_max);
      std::vector<double> all;
      all.reserve(z1.size() + z2.size());
      all.insert(all.end(), z1.begin(), z1.end());
      all.insert(all.end(), z2.begin(), z2.end());
      std::sort(all.begin(), all.end());
      return all;
    };
    p.zero_count_smooth = [](double t) {
      return analytic::smooth_zero_count(analytic::zeta_spec(), t) +
             analytic::smooth_zero_count(analytic::chi4_spec(), t);
    };
    return p;
  }();
  return provider;
}

const ThetaProvider& theta_by_name(const std::string& name) {
  if (name == "delta-at-i" || name == "default") return default_theta();
  throw Error(Error::Kind::usage, "unknown theta provider: " + name);
}

Complex lambda_of(Complex s, LambdaModel model, double sf) {
  Complex base = s * (s - 1.0);
  if (model == LambdaModel::gl2) return base;
  return 4.0 * base + Complex(4.0 * sf * (sf - 2.0));
}

SpectralLine build_line(const scattering::PhaseTable& table, double a, double t_max,
                        const ThetaProvider& theta, int tail_nodes) {
  const double a_requested = a;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 5)
      throw Error(Error::Kind::adjustment_exhausted,
                  "build_line: could not keep theta E away from zero after 5 "
                  "height adjustments");
    auto scan = scattering::find_zeros(table, a, t_max);
    SpectralLine line;
    line.a = a;
    line.a_requested = a_requested;
    line.t_max = t_max;
    line.adjust_retries = attempt;
    bool retry = false;
    const double ln_a = std::log(a);
    for (const auto& z : scan.zeros) {
      if (!z.upward) continue;  // artifact-zone zeros carry no positive norm
      double te = std::abs(theta.evaluate(Complex(0.5, z.t)));
      if (te < 1e-8) {
        retry = true;
        break;
      }
      double n2 = table.total_phase_derivative(ln_a, z.t);
      if (!(n2 > 0.0))
        throw Error(Error::Kind::monotonicity_violation,
                    "build_line: nonpositive norm at t = " + std::to_string(z.t));
      line.t.push_back(z.t);
      line.norm_sq.push_back(n2);
      line.weight.push_back(te * te / n2);
    }
    if (retry) {
      a *= 1.01;  // bump the height away from the theta zero and rescan
      continue;
    }
    if (line.t.size() < 2)
      throw Error(Error::Kind::usage, "build_line: fewer than two zeros on range");

    line.tail_from = line.t.back();
    const std::size_t fit = std::min<std::size_t>(10, line.weight.size());
    line.avg_weight =
        std::accumulate(line.weight.end() - fit, line.weight.end(), 0.0) / double(fit);
    // tail integral via u = T/x and x = y^3; the cubic damps the log
    // growth of the density at u -> infinity so Gauss-Legendre converges
    std::vector<double> y, wq;
    stats::gauss_legendre_01(tail_nodes, y, wq);
    for (int k = 0; k < tail_nodes; ++k) {
      double x = y[k] * y[k] * y[k];
      double u = line.tail_from / x;
      double rho = scattering::smooth_density(a, u);
      line.tail_coeff.push_back(wq[k] * 3.0 * y[k] * y[k] * rho * line.avg_weight *
                                line.tail_from);
      line.tail_x2.push_back(x * x);
    }
    return line;
  }
}

namespace {

double tail_term(const SpectralLine& line, double tau) {
  const double T2 = line.tail_from * line.tail_from;
  const double tau2 = tau * tau;
  double s = 0.0;
  for (std::size_t k = 0; k < line.tail_coeff.size(); ++k)
    s += line.tail_coeff[k] / (T2 - tau2 * line.tail_x2[k]);
  return s;
}

}  // namespace

double theta_v(const SpectralLine& line, double tau) {
  double s = 0.0;
  const double tau2 = tau * tau;
  for (std::size_t j = 0; j < line.t.size(); ++j) {
    if (std::abs(tau - line.t[j]) < 1e-6)
      throw Error(Error::Kind::too_close_to_pole,
                  "theta_v: tau within 1e-6 of a pole t_j");
    s += line.weight[j] / (tau2 - line.t[j] * line.t[j]);
  }
  s -= tail_term(line, tau);
  // lambda_j - lambda_w in the gl4 model is exactly 4x the gl2 difference
  return line.lambda_model == LambdaModel::gl4 ? 0.25 * s : s;
}

Complex theta_v_offline(const SpectralLine& line, Complex w) {
  Complex lam_w = lambda_of(w);
  Complex s(0.0);
  for (std::size_t j = 0; j < line.t.size(); ++j) {
    Complex lam_j(-0.25 - line.t[j] * line.t[j]);
    s += line.weight[j] / (lam_j - lam_w);
  }
  return s;
}

std::vector<DiscreteRoot> discrete_roots(const SpectralLine& line) {
  return discrete_roots(line, 1, int(line.t.size()) - 1);
}

std::vector<DiscreteRoot> discrete_roots(const SpectralLine& line, int first_bracket,
                                         int last_bracket) {
  if (line.t.size() < 2)
    throw Error(Error::Kind::usage, "discrete_roots: need at least two zeros");
  if (first_bracket < 1 || last_bracket > int(line.t.size()) - 1 ||
      first_bracket > last_bracket)
    throw Error(Error::Kind::usage, "discrete_roots: bad bracket range");
  std::vector<DiscreteRoot> roots;
  for (std::size_t j = std::size_t(first_bracket) - 1; j + 1 <= std::size_t(last_bracket);
       ++j) {
    const double tj = line.t[j], tj1 = line.t[j + 1];
    // move endpoints inward until the pole terms carry the expected signs
    double off = std::max(1e-3 * (tj1 - tj), 1.1e-6);
    double lo = 0.0, hi = 0.0, flo = 0.0, fhi = 0.0;
    bool ok = false;
    for (; off >= 1.05e-6; off /= 8.0) {
      lo = tj + off;
      hi = tj1 - off;
      flo = theta_v(line, lo);
      fhi = theta_v(line, hi);
      if (flo > 0.0 && fhi < 0.0) {
        ok = true;
        break;
      }
    }
    if (!ok)
      throw Error(Error::Kind::no_sign_change,
                  "discrete_roots: no sign change in bracket (" + std::to_string(tj) +
                      ", " + std::to_string(tj1) +
                      "); interlacing falsified or root inside the pole-exclusion "
                      "radius (adjust the height a)");
    while (hi - lo > 1e-12) {
      double mid = 0.5 * (lo + hi);
      if (theta_v(line, mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    DiscreteRoot r;
    r.bracket = static_cast<int>(j) + 1;
    r.tau = 0.5 * (lo + hi);
    r.bracket_lo = tj;
    r.bracket_hi = tj1;
    const double tau2 = r.tau * r.tau;
    double scale = std::max(std::abs(line.weight[j] / (tau2 - tj * tj)),
                            std::abs(line.weight[j + 1] / (tau2 - tj1 * tj1)));
    r.residual = std::abs(theta_v(line, r.tau)) / scale;
    double cert = 0.0;
    for (std::size_t k = 0; k < line.t.size(); ++k) {
      double d = tau2 - line.t[k] * line.t[k];
      cert += line.weight[k] / (d * d);
    }
    if (line.lambda_model == LambdaModel::gl4) cert /= 16.0;
    r.derivative_certificate = 2.0 * r.tau * cert;
    roots.push_back(r);
  }
  return roots;
}

CandidateReport eigenvalue_candidates(const SpectralLine& line,
                                      const std::vector<DiscreteRoot>& roots,
                                      const ThetaProvider& theta, double tol) {
  CandidateReport rep;
  rep.tol = tol;
  rep.theta_zeros = theta.line_zeros(line.t_max);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (double z : rep.theta_zeros) best = std::min(best, std::abs(roots[i].tau - z));
    rep.min_distance.push_back(best);
    if (best < tol) rep.matches.push_back(i);
  }
  rep.sparsity_consistent = rep.matches.size() <= 2;

  rep.zeros_tiled = !rep.theta_zeros.empty();
  for (double z : rep.theta_zeros) {
    bool inside = line.t.front() < z && z < line.t.back();
    if (!inside) rep.zeros_tiled = false;
  }

  rep.histogram.assign(20, 0);
  double dmax = 0.0;
  for (double d : rep.min_distance) dmax = std::max(dmax, d);
  rep.histogram_bin = dmax > 0 ? dmax / 20.0 * (1.0 + 1e-12) : 1.0;
  for (double d : rep.min_distance) {
    int b = std::min(19, int(d / rep.histogram_bin));
    ++rep.histogram[b];
  }
  return rep;
}

}  // namespace eisenlab::spectrum

namespace eisenlab::stats {

void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n over [-1,1] with the Chebyshev initial guess
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = 0.5 * (1.0 - z);  // map to [0,1], ascending
    w[i] = 1.0 / ((1.0 - z * z) * pp * pp);
  }
}

PairCorrelationReport pair_correlation(const std::vector<double>& ts,
                                       const std::function<double(double)>& integrated,
                                       double bin_width, double max_gap) {
  if (ts.size() < 30)
    throw Error(Error::Kind::usage, "pair_correlation: needs >= 30 points");
  if (!(bin_width > 0.0) || !(max_gap > bin_width))
    throw Error(Error::Kind::usage, "pair_correlation: need 0 < bin_width < max_gap");
  std::vector<double> x;
  x.reserve(ts.size());
  for (double t : ts) x.push_back(integrated(t));
  std::sort(x.begin(), x.end());

  PairCorrelationReport rep;
  rep.bin_width = bin_width;
  rep.max_gap = max_gap;
  rep.n_points = ts.size();
  const int nbins = int(std::ceil(max_gap / bin_width));
  rep.bin_lo.resize(nbins);
  rep.count.assign(nbins, 0.0);
  for (int b = 0; b < nbins; ++b) rep.bin_lo[b] = b * bin_width;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double g = x[j] - x[i];
      if (g > max_gap) break;
      int b = std::min(nbins - 1, int(g / bin_width));
      rep.count[b] += 1.0;
    }
  }
  for (double& c : rep.count) c /= double(ts.size());

  std::vector<double> nn;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) nn.push_back(x[i + 1] - x[i]);
  rep.nn_mean = std::accumulate(nn.begin(), nn.end(), 0.0) / double(nn.size());
  double var = 0.0;
  for (double g : nn) var += (g - rep.nn_mean) * (g - rep.nn_mean);
  var /= double(nn.size());
  rep.nn_cv = std::sqrt(var) / rep.nn_mean;
  return rep;
}

}  // namespace eisenlab::stats
