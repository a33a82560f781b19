// Acceptance suite: one pass/fail line per criterion, each with its stated
// tolerance and runtime budget pinned in code. Exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "eisenlab/intertwine.hpp"
#include "eisenlab/liealg.hpp"
#include "eisenlab/maass_selberg.hpp"
#include "eisenlab/spectrum.hpp"
#include "oracles.hpp"

using namespace eisenlab;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Harness {
  int failures = 0;
  template <class F>
  void criterion(int id, const char* label, double budget_s, F body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      detail = body(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = secs < budget_s;
    if (!(ok && in_budget)) ++failures;
    std::printf("CRITERION %d [%s] %s  (%s; %.2fs of %gs budget)\n", id,
                ok && in_budget ? "PASS" : "FAIL", label, detail.c_str(), secs,
                budget_s);
    std::fflush(stdout);
  }
};

double xi_rotated_eta(double t) {
  Complex s(0.5, t);
  Complex ph = s * std::log(Complex(1.0 / std::sqrt(kPi))) +
               analytic::lngamma(0.5 * s);
  return (std::exp(Complex(0.0, ph.imag())) * oracles::zeta_eta(s)).real();
}

double xi_rotated(double t) {
  Complex s(0.5, t);
  Complex ph = s * std::log(Complex(1.0 / std::sqrt(kPi))) +
               analytic::lngamma(0.5 * s);
  return (std::exp(Complex(0.0, ph.imag())) * analytic::zeta(s)).real();
}

template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int k = 0; k < 80; ++k) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int main() {
  Harness h;

  // shared phase table (its construction time is charged to criterion 2)
  scattering::PhaseTable* table = nullptr;

  h.criterion(1, "special functions: xi symmetry, zeta(2), first zero vs eta oracle",
              5.0, [&](bool& ok) {
    double worst_xi = 0.0;
    const auto& spec = analytic::zeta_spec();
    for (int k = 0; k < 20; ++k) {
      Complex s(0.1 + 0.04 * k, -10.0 + 1.05 * k);
      worst_xi = std::max(worst_xi,
                          std::abs(analytic::completed(spec, s) -
                                   analytic::completed(spec, 1.0 - s)));
    }
    double zeta2_err = std::abs(analytic::zeta(Complex(2.0)) - kPi * kPi / 6.0);
    double t_eta = bisect(xi_rotated_eta, 14.0, 14.3);
    double t_em = bisect(xi_rotated, 14.0, 14.3);
    double zero_err = std::abs(t_em - t_eta);
    double anchor = std::abs(t_em - 14.134725);
    ok = worst_xi < 1e-10 && zeta2_err < 1e-12 && zero_err < 1e-6 && anchor < 1e-6;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "xi residual %.1e < 1e-10, zeta(2) err %.1e < 1e-12, zero split "
                  "%.1e < 1e-6, |t-14.134725| = %.1e",
                  worst_xi, zeta2_err, zero_err, anchor);
    return std::string(buf);
  });

  h.criterion(2, "unitarity and zero completeness for a in {2,3,10}, T = 100", 60.0,
              [&](bool& ok) {
    static scattering::PhaseTable tab(132.0);
    table = &tab;
    double worst_unit = 0.0;
    for (double t = 0.1; t <= 100.0; t += 0.05)
      worst_unit = std::max(
          worst_unit, std::abs(std::abs(scattering::c_ratio(Complex(0.5, t))) - 1.0));
    bool counts_ok = true;
    double worst_dev = 0.0, bound = 2.0 * std::log(100.0);
    for (double a : {2.0, 3.0, 10.0}) {
      auto scan = scattering::find_zeros(tab, a, 100.0);
      long long oracle = scattering::winding_count(tab, a, 100.0);
      if ((long long)scan.zeros.size() != oracle) counts_ok = false;
      worst_dev = std::max(worst_dev, scattering::count_deviation(a, 100.0, scan));
    }
    ok = worst_unit < 1e-9 && counts_ok && worst_dev <= bound;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "max ||c|-1| = %.1e < 1e-9, counts == winding oracle: %s, N(T) "
                  "deviation %.2f <= %.2f",
                  worst_unit, counts_ok ? "yes" : "NO", worst_dev, bound);
    return std::string(buf);
  });

  h.criterion(3, "gap rigidity: normalized gaps of s_j, a = 3, t in [50,100]", 60.0,
              [&](bool& ok) {
    auto scan = scattering::find_zeros(*table, 3.0, 100.0);
    std::vector<scattering::ConstantTermZero> win;
    for (const auto& z : scan.zeros)
      if (z.t >= 50.0) win.push_back(z);
    auto rep = scattering::gaps(*table, 3.0, win);
    ok = rep.cv < 0.1;
    char buf[128];
    std::snprintf(buf, sizeof buf, "CV = %.2e < 0.1 over %zu gaps", rep.cv,
                  rep.normalized.size());
    return std::string(buf);
  });

  h.criterion(4, "Casimir eigenvalue and centrality, exact rational arithmetic", 10.0,
              [&](bool& ok) {
    using namespace liealg;
    auto om = casimir(4);
    auto ch = infinitesimal_character(om, eigenvalue_params());
    auto s = RationalPoly::symbol("s");
    auto sf = RationalPoly::symbol("sf");
    bool eig = ch == s * s * Rational(4) + sf * sf * Rational(4) - sf * Rational(8) -
                         s * Rational(4);
    auto sv = LinForm::symbol("s");
    auto sfv = LinForm::symbol("sf");
    auto wv = LinForm::symbol("w");
    auto lam_s = infinitesimal_character(om, {sv + sfv, -sv + sfv, sv - sfv, -sv - sfv});
    auto lam_w = infinitesimal_character(om, {wv + sfv, -wv + sfv, wv - sfv, -wv - sfv});
    auto ps = RationalPoly::symbol("s");
    auto pw = RationalPoly::symbol("w");
    bool diff = (lam_s - lam_w) == (ps * ps - ps - pw * pw + pw) * Rational(4);
    bool central = true;
    for (int i = 1; i <= 4 && central; ++i)
      for (int j = 1; j <= 4 && central; ++j) {
        auto x = UEAElement::generator(4, E(i, j));
        if (!(multiply(om, x) == multiply(x, om))) central = false;
      }
    ok = eig && diff && central;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lambda_{s,f} identity: %s, difference identity: %s, gl4 "
                  "centrality (16 generators): %s",
                  eig ? "exact" : "NO", diff ? "exact" : "NO",
                  central ? "exact" : "NO");
    return std::string(buf);
  });

  h.criterion(5, "intertwining chain and Rankin-Selberg specialization", 1.0,
              [&](bool& ok) {
    using namespace intertwine;
    auto chain = compose_word({2, 1, 3, 2}, generic_tuple());
    auto s1 = LinForm::symbol("s1"), s2 = LinForm::symbol("s2"),
         s3 = LinForm::symbol("s3"), s4 = LinForm::symbol("s4");
    bool tuple_ok =
        chain.params == ParamTuple{s3 + Rational(2), s4 + Rational(2),
                                   s1 - Rational(2), s2 - Rational(2)};
    auto rep = specialize_rankin_selberg(chain);
    ok = tuple_ok && rep.all_pass;
    char buf[128];
    std::snprintf(buf, sizeof buf, "final tuple I(s3+2,s4+2,s1-2,s2-2): %s, all four "
                  "factor arguments pass: %s",
                  tuple_ok ? "yes" : "NO", rep.all_pass ? "yes" : "NO");
    return std::string(buf);
  });

  h.criterion(6, "Maass-Selberg coherence and the norm = Z'(t_j) identity", 30.0,
              [&](bool& ok) {
    maass_selberg::MSContext ctx;  // T = 3
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> td(1.5, 90.0);
    double worst_coh = 0.0;
    for (int k = 0; k < 20; ++k) {
      double t = td(rng);
      worst_coh = std::max(worst_coh,
                           std::abs(maass_selberg::truncated_norm_sq(ctx, t) -
                                    maass_selberg::truncated_norm_sq_extrapolated(ctx, t)));
    }
    auto scan = scattering::find_zeros(*table, 3.0, 60.0);
    double worst_id = 0.0, min_norm = 1e18;
    for (const auto& z : scan.zeros) {
      double n2 = maass_selberg::truncated_norm_sq(ctx, z.t);
      double zp = 2.0 * std::log(3.0) - scattering::local_phase_derivative(z.t);
      worst_id = std::max(worst_id, std::abs(n2 - zp));
      min_norm = std::min(min_norm, n2);
    }
    ok = worst_coh < 1e-6 && worst_id < 1e-9 && min_norm > 0.0;
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "coherence %.1e < 1e-6 (20 random t), |norm - Z'| %.1e < 1e-9 at "
                  "%zu zeros, min norm %.3f > 0",
                  worst_coh, worst_id, scan.zeros.size(), min_norm);
    return std::string(buf);
  });

  // shared spectrum artifacts for criteria 7-9
  spectrum::SpectralLine line;
  std::vector<spectrum::DiscreteRoot> roots;

  h.criterion(7, "interlacing: one simple root per bracket, a = 3, t <= 60", 120.0,
              [&](bool& ok) {
    line = spectrum::build_line(*table, 3.0, 60.0, spectrum::default_theta());
    roots = spectrum::discrete_roots(line);
    bool one_per = roots.size() == line.t.size() - 1;
    bool interior = true, certs = true;
    for (const auto& r : roots) {
      interior = interior && r.tau > r.bracket_lo && r.tau < r.bracket_hi;
      certs = certs && r.derivative_certificate > 0.0;
    }
    auto line2 = spectrum::build_line(*table, 3.0, 60.0, spectrum::default_theta(), 192);
    auto roots2 = spectrum::discrete_roots(line2);
    double worst_move = 0.0;
    for (std::size_t k = 0; k < roots.size(); ++k)
      worst_move = std::max(worst_move, std::abs(roots2[k].tau - roots[k].tau));
    bool stable = worst_move < 1e-7;
    ok = one_per && interior && certs && stable;
    char buf[224];
    std::snprintf(buf, sizeof buf,
                  "%zu brackets -> %zu roots, strictly interior: %s, certificates "
                  "positive: %s, tail-doubling move %.1e < 1e-7",
                  line.t.size() - 1, roots.size(), interior ? "yes" : "NO",
                  certs ? "yes" : "NO", worst_move);
    return std::string(buf);
  });

  h.criterion(8, "sparsity: matches between roots and theta-E zeros at tol 1e-4", 60.0,
              [&](bool& ok) {
    auto rep = spectrum::eigenvalue_candidates(line, roots, spectrum::default_theta());
    ok = rep.matches.size() <= 2 && rep.sparsity_consistent;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "match list size %zu <= 2: sparsity consistent (min distance %.2e)",
                  rep.matches.size(),
                  *std::min_element(rep.min_distance.begin(), rep.min_distance.end()));
    return std::string(buf);
  });

  h.criterion(9, "statistics contrast: CV(s_j) < 0.1 while CV(theta zeros) > 0.25",
              60.0, [&](bool& ok) {
    auto scan = scattering::find_zeros(*table, 3.0, 100.0);
    std::vector<double> ts;
    for (const auto& z : scan.zeros) ts.push_back(z.t);
    const double ln_a = std::log(3.0);
    auto rep_line = stats::pair_correlation(
        ts, [&](double u) { return table->total_phase(ln_a, u) / (2.0 * kPi); }, 0.1,
        8.0);
    auto tz = spectrum::default_theta().line_zeros(100.0);
    auto rep_tz = stats::pair_correlation(
        tz, spectrum::default_theta().zero_count_smooth, 0.1, 8.0);
    ok = rep_line.nn_cv < 0.1 && rep_tz.nn_cv > 0.25;
    char buf[128];
    std::snprintf(buf, sizeof buf, "CV(line) = %.2e < 0.1, CV(theta zeros) = %.3f > 0.25",
                  rep_line.nn_cv, rep_tz.nn_cv);
    return std::string(buf);
  });

  if (h.failures == 0)
    std::printf("ACCEPTANCE: all 9 criteria PASS\n");
  else
    std::printf("ACCEPTANCE: %d criteria FAILED\n", h.failures);
  return h.failures == 0 ? 0 : 1;
}
