// Spectral weights from theta-periods and truncated norms, the secular
// function theta_v, its interlacing roots (the candidate discrete spectrum),
// the sparsity cross-check against theta-E zeros, and spacing statistics.
#ifndef EISENLAB_SPECTRUM_HPP
#define EISENLAB_SPECTRUM_HPP

#include <functional>
#include <string>
#include <vector>

#include "eisenlab/maass_selberg.hpp"
#include "eisenlab/scattering.hpp"

namespace eisenlab::spectrum {

using Complex = std::complex<double>;

struct ThetaProvider {
  std::string name;
  /// theta E_s (finite on the critical line).
  std::function<Complex(Complex)> evaluate;
  /// zeros of t -> theta E_{1/2+it} on (0, t_max], via the factors'
  /// completed-phase rotations.
  std::function<std::vector<double>(double)> line_zeros;
  /// integrated smooth zero-counting density, for unfolding.
  std::function<double(double)> zero_count_smooth;
};

/// Default "delta-at-i": theta E_s = zeta_{Q(i)}(s) / zeta(2s).
const ThetaProvider& default_theta();
/// Lookup by name; throws a usage error for unknown providers.
const ThetaProvider& theta_by_name(const std::string& name);

enum class LambdaModel { gl2, gl4 };

/// gl2: s(s-1); gl4: 4 s(s-1) + 4 sf(sf-2) (the quadruple-size eigenvalue).
Complex lambda_of(Complex s, LambdaModel model = LambdaModel::gl2, double sf = 0.0);

struct SpectralLine {
  double a = 0.0;           // height actually used (after any adjustment)
  double a_requested = 0.0;
  double t_max = 0.0;
  int adjust_retries = 0;
  /// gl4 rescales every denominator difference by exactly 4 (the sf shift
  /// cancels), so theta_v scales by 1/4 and roots cannot move.
  LambdaModel lambda_model = LambdaModel::gl2;
  std::vector<double> t;        // ordered zeros t_j
  std::vector<double> weight;   // w_j = |theta E_{s_j}|^2 / norm_sq_j
  std::vector<double> norm_sq;  // ||wedge^a E_{s_j}||^2 = Z'(t_j)
  // tail model: -int_{tail_from}^inf rho(u) avg_weight / (u^2 - tau^2) du,
  // precomputed on Gauss-Legendre nodes (u = tail_from / x)
  double tail_from = 0.0;
  double avg_weight = 0.0;
  std::vector<double> tail_coeff;  // A_k = gl_w * rho(T/x_k) * avg_weight * T
  std::vector<double> tail_x2;     // x_k^2

  /// lambda(s_j) in the gl2 normalization: -1/4 - t_j^2 (strictly decreasing).
  double eigenvalue(std::size_t j) const { return -0.25 - t[j] * t[j]; }
};

/// Zeros from the scattering scan (upward branch), weights from the theta
/// period over the Maass-Selberg norm. If some |theta E_{s_j}| < 1e-8 the
/// height is bumped by +1% and the line rebuilt (at most 5 retries).
SpectralLine build_line(const scattering::PhaseTable& table, double a, double t_max,
                        const ThetaProvider& theta, int tail_nodes = 96);

/// theta v_w at w = 1/2 + i tau: sum_j w_j / (tau^2 - t_j^2) plus the tail
/// estimate. Throws too-close-to-pole when |tau - t_j| < 1e-6.
double theta_v(const SpectralLine& line, double tau);

/// Same sum for general w = sigma + i tau (off-line diagnostics).
Complex theta_v_offline(const SpectralLine& line, Complex w);

struct DiscreteRoot {
  int bracket = 0;  // j: root lies in (t_j, t_{j+1}), 1-based
  double tau = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  double residual = 0.0;              // |theta_v| / local term scale
  double derivative_certificate = 0.0;  // 2 tau sum w_j/(lambda_j-lambda_w)^2 > 0
};

/// Exactly one root per adjacent-zero bracket by bisection on the sign
/// change; a missing sign change raises the no-sign-change error.
std::vector<DiscreteRoot> discrete_roots(const SpectralLine& line);
/// Restriction to brackets [first_bracket, last_bracket] (1-based).
std::vector<DiscreteRoot> discrete_roots(const SpectralLine& line, int first_bracket,
                                         int last_bracket);

struct CandidateReport {
  std::vector<double> theta_zeros;      // zeros of theta E on the window
  std::vector<double> min_distance;     // per discrete root
  std::vector<std::size_t> matches;     // root indices with distance < tol
  double tol = 1e-4;
  bool sparsity_consistent = false;     // matches.size() <= 2
  bool zeros_tiled = false;             // every theta-zero inside some bracket
  std::vector<int> histogram;           // distance histogram, 20 bins
  double histogram_bin = 0.0;
};

CandidateReport eigenvalue_candidates(const SpectralLine& line,
                                      const std::vector<DiscreteRoot>& roots,
                                      const ThetaProvider& theta, double tol = 1e-4);

}  // namespace eisenlab::spectrum

namespace eisenlab::stats {

struct PairCorrelationReport {
  double bin_width = 0.0, max_gap = 0.0;
  std::vector<double> bin_lo;
  std::vector<double> count;      // normalized per point
  double nn_mean = 0.0, nn_cv = 0.0;
  std::size_t n_points = 0;
};

/// Unfold by the integrated density and histogram all normalized pairwise
/// gaps <= max_gap; also nearest-neighbor mean and coefficient of variation.
/// Needs >= 30 points.
PairCorrelationReport pair_correlation(const std::vector<double>& ts,
                                       const std::function<double(double)>& integrated,
                                       double bin_width, double max_gap);

/// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace eisenlab::stats

#endif
