// eisenlab command-line surface: special functions, scattering zeros and
// statistics, the exact Casimir/intertwining engines, Maass-Selberg norms,
// and the theta_v interlacing solver.
//
// Exit codes: 0 success, 1 usage error, 2 falsified model invariant.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eisenlab/intertwine.hpp"
#include "eisenlab/liealg.hpp"
#include "eisenlab/maass_selberg.hpp"
#include "eisenlab/spectrum.hpp"

using json = nlohmann::ordered_json;
using namespace eisenlab;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Output {
  std::string path;  // empty = stdout
  bool timestamp = true;

  void write(const std::string& body, bool csv) const {
    std::ostringstream head;
    if (csv && timestamp) {
      auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      char buf[64];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      head << "# generated: " << buf << "\n";
    }
    if (path.empty()) {
      std::cout << head.str() << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::usage, "cannot write " + path);
    out << head.str() << body;
  }
};

std::string num15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json complex_json(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

// ---------------------------------------------------------------- specfun --

int cmd_specfun(const std::string& fn, double re, double im, bool extended,
                const std::string& spec_file, const Output& out) {
  Complex s(re, im);
  json j;
  j["function"] = fn;
  j["s"] = complex_json(s);
  j["precision"] = extended ? "extended" : "double";
  auto eval_d = [&]() -> Complex {
    if (fn == "zeta") return analytic::zeta(s);
    if (fn == "lngamma") return analytic::lngamma(s);
    if (fn == "chi4") return analytic::dirichlet_L_chi4(s);
    if (fn == "dedekind") return analytic::dedekind_gaussian(s);
    if (fn == "xi") return analytic::completed(analytic::zeta_spec(), s);
    if (fn == "completed-chi4") return analytic::completed(analytic::chi4_spec(), s);
    if (fn == "c") return scattering::c_ratio(s);
    if (fn == "theta") return spectrum::default_theta().evaluate(s);
    if (fn == "user") {
      if (spec_file.empty())
        throw Error(Error::Kind::usage, "specfun user needs --spec-file");
      return analytic::completed(analytic::parse_lfunction_file(spec_file), s);
    }
    throw Error(Error::Kind::usage, "unknown function: " + fn);
  };
  auto eval_l = [&]() -> Complex {
    using CL = std::complex<long double>;
    CL sl(re, im);
    CL v;
    if (fn == "zeta") v = analytic::zeta(sl);
    else if (fn == "lngamma") v = analytic::lngamma(sl);
    else if (fn == "chi4") v = analytic::dirichlet_L_chi4(sl);
    else if (fn == "dedekind") v = analytic::dedekind_gaussian(sl);
    else if (fn == "c") v = scattering::c_ratio_t(sl);
    else if (fn == "theta")
      v = analytic::dedekind_gaussian(sl) / analytic::zeta(CL(2.0L) * sl);
    else
      throw Error(Error::Kind::usage, "extended precision: unsupported for " + fn);
    return Complex(double(v.real()), double(v.imag()));
  };
  Complex v = extended ? eval_l() : eval_d();
  j["value"] = complex_json(v);
  out.write(j.dump(2) + "\n", false);
  return 0;
}

// ------------------------------------------------------- scattering zeros --

scattering::ZeroScan zeros_with_cache(const scattering::PhaseTable& table, double a,
                                      double t_max) {
  const char* dir = std::getenv("EISENLAB_CACHE_DIR");
  std::filesystem::path cache;
  if (dir && *dir) {
    char name[128];
    std::snprintf(name, sizeof name, "zeros_a%.6g_t%.6g_s%.6g.csv", a, t_max,
                  table.step());
    cache = std::filesystem::path(dir) / name;
    if (std::filesystem::exists(cache)) return scattering::read_zero_cache(cache.string());
  }
  auto scan = scattering::find_zeros(table, a, t_max);
  if (!cache.empty()) {
    std::filesystem::create_directories(cache.parent_path());
    scattering::write_zero_cache(cache.string(), scan);
  }
  return scan;
}

int cmd_zeros(double a, double t_max, const Output& out, const std::string& format) {
  scattering::PhaseTable table(t_max + 0.1);
  auto scan = zeros_with_cache(table, a, t_max);
  if (format == "json") {
    json j;
    j["a"] = scan.a;
    j["t_min"] = scan.t_min;
    j["t_max"] = scan.t_max;
    j["step"] = scan.step;
    j["n_zeros"] = scan.zeros.size();
    json rows = json::array();
    for (const auto& z : scan.zeros)
      rows.push_back({{"j", z.index}, {"t", z.t}, {"branch", z.branch},
                      {"residual", z.residual}});
    j["zeros"] = rows;
    out.write(j.dump(2) + "\n", false);
  } else {
    std::ostringstream body;
    char buf[256];
    body << "a,t_min,t_max,step\n";
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", scan.a, scan.t_min,
                  scan.t_max, scan.step);
    body << buf << "j,t_j,branch,residual\n";
    for (const auto& z : scan.zeros) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%lld,%.17g\n", z.index, z.t, z.branch,
                    z.residual);
      body << buf;
    }
    out.write(body.str(), true);
  }
  return 0;
}

// ------------------------------------------------------------------ count --

int cmd_count(double a, double t_max, const Output& out) {
  scattering::PhaseTable table(t_max + 0.1);
  auto scan = scattering::find_zeros(table, a, t_max);
  long long winding = scattering::winding_count(table, a, t_max);
  double predicted = scattering::count_predicted(a, t_max);
  double deviation = scattering::count_deviation(a, t_max, scan);
  json j;
  j["a"] = a;
  j["t_max"] = t_max;
  j["observed"] = scan.zeros.size();
  j["winding_oracle"] = winding;
  j["predicted_smooth"] = predicted;
  j["deviation"] = deviation;
  j["bound_2_log_T"] = 2.0 * std::log(t_max);
  bool ok = (long long)scan.zeros.size() == winding &&
            deviation <= 2.0 * std::log(t_max);
  j["within_bound"] = ok;
  out.write(j.dump(2) + "\n", false);
  return ok ? 0 : 2;
}

// ------------------------------------------------------------------- gaps --

int cmd_gaps(double a, double t_max, double window_lo, const Output& out,
             const std::string& format) {
  scattering::PhaseTable table(t_max + 0.1);
  auto scan = scattering::find_zeros(table, a, t_max);
  std::vector<scattering::ConstantTermZero> window;
  for (const auto& z : scan.zeros)
    if (z.t >= window_lo) window.push_back(z);
  auto rep = scattering::gaps(table, a, window);
  if (format == "csv") {
    std::ostringstream body;
    body << "j,t_j,raw_gap,normalized_winding,normalized_deriv\n";
    for (std::size_t k = 0; k < rep.raw.size(); ++k)
      body << window[k].index << "," << num15(window[k].t) << "," << num15(rep.raw[k])
           << "," << num15(rep.normalized[k]) << "," << num15(rep.normalized_deriv[k])
           << "\n";
    out.write(body.str(), true);
  } else {
    json j;
    j["a"] = a;
    j["window"] = {window_lo, t_max};
    j["n_gaps"] = rep.raw.size();
    j["mean"] = rep.mean;
    j["variance"] = rep.variance;
    j["cv"] = rep.cv;
    j["mean_deriv_normalized"] = rep.mean_deriv;
    j["cv_deriv_normalized"] = rep.cv_deriv;
    j["note"] =
        "normalized gaps use the winding increment (Z(t_{j+1})-Z(t_j))/2pi; the "
        "left-endpoint derivative normalization is diagnostic only";
    out.write(j.dump(2) + "\n", false);
  }
  return 0;
}

// ---------------------------------------------------------------- casimir --

int cmd_casimir(int n, const std::string& preset, const Output& out) {
  using namespace liealg;
  json j;
  j["n"] = n;
  j["preset"] = preset;
  auto om = casimir(n);
  j["raw_dual_pair_products"] = casimir_raw_term_count(n);
  if (preset == "generic") {
    auto ch = infinitesimal_character(om, generic_params(n));
    auto chp = infinitesimal_character(om, generic_params(n), CharacterBranch::Plus);
    j["scalar"] = ch.str();
    j["scalar_plus_branch"] = chp.str();
  } else if (preset == "section5") {
    if (n != 4) throw Error(Error::Kind::usage, "preset section5 requires --n 4");
    auto ch = infinitesimal_character(om, eigenvalue_params());
    auto chp = infinitesimal_character(om, eigenvalue_params(), CharacterBranch::Plus);
    j["scalar"] = ch.str_ordered({{{"s", 2}}, {{"sf", 2}}, {{"sf", 1}}, {{"s", 1}}});
    j["scalar_plus_branch"] = chp.str();
    j["sl4_variant_scalar"] =
        infinitesimal_character(casimir_sl4_variant(), eigenvalue_params()).str();
    j["branch_note"] =
        "minus branch (corrections -H) is the asserted convention; the plus "
        "branch and the sl4 rearrangement are reported for comparison";
    // lambda difference identity as polynomials
    auto s = LinForm::symbol("s");
    auto sf = LinForm::symbol("sf");
    auto w = LinForm::symbol("w");
    auto lam_s = infinitesimal_character(om, {s + sf, -s + sf, s - sf, -s - sf});
    auto lam_w = infinitesimal_character(om, {w + sf, -w + sf, w - sf, -w - sf});
    j["lambda_difference"] = (lam_s - lam_w).str();
  } else {
    throw Error(Error::Kind::usage, "unknown preset: " + preset);
  }
  if (n == 4) {
    auto split = casimir_split_check();
    j["split_check"] = {{"ok", split.ok},
                        {"residual_terms", split.residual.term_count()},
                        {"offending", split.offending}};
  }
  out.write(j.dump(2) + "\n", false);
  if (n == 4 && !casimir_split_check().ok) return 2;
  return 0;
}

// ------------------------------------------------------------- intertwine --

int cmd_intertwine(const std::string& word_csv, const std::string& tuple_preset,
                   const Output& out) {
  using namespace intertwine;
  std::vector<int> word;
  std::istringstream ws(word_csv);
  std::string tok;
  while (std::getline(ws, tok, ',')) word.push_back(std::stoi(tok));
  ParamTuple start;
  if (tuple_preset == "generic") start = generic_tuple();
  else if (tuple_preset == "rankin-selberg") start = rankin_selberg_tuple();
  else if (tuple_preset == "balanced") start = balanced_tuple();
  else throw Error(Error::Kind::usage, "unknown tuple preset: " + tuple_preset);
  auto chain = compose_word(word, start);
  json j;
  j["tuple_preset"] = tuple_preset;
  if (tuple_preset != "generic")
    j["preset_note"] =
        "rankin-selberg is (s+sf1, s-sf1, -s+sf2, -s-sf2); balanced is "
        "(s+sf, -s+sf, s-sf, -s-sf) - the two differ by the sign pattern on "
        "the inner slots and by carrying one vs two cuspidal parameters";
  j["word_applied_first_to_last"] = word;
  json steps = json::array();
  for (const auto& st : chain.steps) {
    json stj;
    stj["sigma"] = st.reflection;
    json tp = json::array();
    for (const auto& p : st.params) tp.push_back(p.str());
    stj["tuple"] = tp;
    stj["factor"] = st.factor.str();
    steps.push_back(stj);
  }
  j["steps"] = steps;
  json fin = json::array();
  for (const auto& p : chain.params) fin.push_back(p.str());
  j["final_tuple"] = fin;
  j["factor_product"] = chain.factors.str();
  j["permutation"] = chain.permutation;
  if (word == std::vector<int>{2, 1, 3, 2} && tuple_preset == "generic") {
    auto rep = specialize_rankin_selberg(chain);
    json rs;
    rs["all_pass"] = rep.all_pass;
    json args = json::array(), expects = json::array(), passes = json::array();
    for (std::size_t k = 0; k < rep.actual_args.size(); ++k) {
      args.push_back(rep.actual_args[k].str());
      expects.push_back(rep.expected_args[k].str());
      passes.push_back(static_cast<bool>(rep.factor_pass[k]));
    }
    rs["factor_args"] = args;
    rs["expected_args"] = expects;
    rs["factor_pass"] = passes;
    rs["reciprocal_ok"] = rep.reciprocal_ok;
    rs["note"] = rep.note;
    j["rankin_selberg"] = rs;
    out.write(j.dump(2) + "\n", false);
    return rep.all_pass ? 0 : 2;
  }
  out.write(j.dump(2) + "\n", false);
  return 0;
}

// ---------------------------------------------------------------- ms-norm --

int cmd_ms_norm(double a, double t, bool extended, const Output& out) {
  maass_selberg::MSContext ctx;
  ctx.T = a;
  double closed = maass_selberg::truncated_norm_sq(ctx, t);
  double extrap = maass_selberg::truncated_norm_sq_extrapolated(ctx, t);
  json j;
  j["a"] = a;
  j["t"] = t;
  j["data_matrix"] = "desk default (all cuspidal-data inner products = 1)";
  j["closed_form"] = closed;
  j["extrapolated"] = extrap;
  j["residual"] = std::abs(closed - extrap);
  if (extended) {
    long double tl = t;
    long double lnT = std::log((long double)a);
    long double psi = scattering::principal_phase<long double>(tl);
    long double dpsi = scattering::local_phase_derivative<long double>(tl);
    long double v = 2.0L * lnT - dpsi +
                    std::sin(2.0L * tl * lnT - psi) / tl;
    j["closed_form_extended"] = double(v);
    j["extended_diff"] = std::abs(double(v) - closed);
  }
  out.write(j.dump(2) + "\n", false);
  return 0;
}

// ----------------------------------------------- spectrum solve/interlace --

struct SolveResult {
  spectrum::SpectralLine line;
  std::vector<spectrum::DiscreteRoot> roots;
  spectrum::CandidateReport candidates;
  stats::PairCorrelationReport pc_line;
  stats::PairCorrelationReport pc_theta;
};

SolveResult solve(double a, double t_max, const std::string& theta_name, int tail_terms,
                  const std::string& lambda_model = "gl2") {
  SolveResult r;
  scattering::PhaseTable table(t_max + 0.1);
  const auto& theta = spectrum::theta_by_name(theta_name);
  r.line = spectrum::build_line(table, a, t_max, theta, tail_terms);
  r.line.lambda_model = lambda_model == "gl4" ? spectrum::LambdaModel::gl4
                                              : spectrum::LambdaModel::gl2;
  r.roots = spectrum::discrete_roots(r.line);
  r.candidates = spectrum::eigenvalue_candidates(r.line, r.roots, theta);
  const double ln_a = std::log(r.line.a);
  auto unfold = [&table, ln_a](double t) {
    return table.total_phase(ln_a, t) / (2.0 * kPi);
  };
  r.pc_line = stats::pair_correlation(r.line.t, unfold, 0.1, 8.0);
  auto tz = theta.line_zeros(std::max(t_max, 100.0));
  r.pc_theta = stats::pair_correlation(tz, theta.zero_count_smooth, 0.1, 8.0);
  return r;
}

json summary_json(const SolveResult& r) {
  json j;
  j["a"] = r.line.a;
  j["a_requested"] = r.line.a_requested;
  j["adjust_retries"] = r.line.adjust_retries;
  j["t_max"] = r.line.t_max;
  j["n_zeros"] = r.line.t.size();
  j["n_roots"] = r.roots.size();
  j["matches"] = r.candidates.matches.size();
  j["sparsity_consistent"] = r.candidates.sparsity_consistent;
  j["cv_line"] = r.pc_line.nn_cv;
  j["cv_theta_zeros"] = r.pc_theta.nn_cv;
  j["weight_convention"] =
      "|theta E_{s_j}|^2 used for |theta E_{1-s_j}|^2 (equal moduli on the line)";
  j["data_matrix"] = "desk default (all cuspidal-data inner products = 1)";
  return j;
}

int cmd_spectrum_solve(double a, double t_max, const std::string& theta_name,
                       int tail_terms, bool extended, const std::string& lambda_model,
                       const Output& out, const std::string& format) {
  auto r = solve(a, t_max, theta_name, tail_terms, lambda_model);
  if (format == "csv") {
    std::ostringstream body;
    body << "j,t_j,weight,norm_sq,tau_j,residual,deriv_cert\n";
    for (std::size_t k = 0; k < r.roots.size(); ++k) {
      body << (k + 1) << "," << num15(r.line.t[k]) << "," << num15(r.line.weight[k])
           << "," << num15(r.line.norm_sq[k]) << "," << num15(r.roots[k].tau) << ","
           << num15(r.roots[k].residual) << ","
           << num15(r.roots[k].derivative_certificate) << "\n";
    }
    out.write(body.str(), true);
  } else {
    json j = summary_json(r);
    j["lambda_model"] = lambda_model;
    if (extended) {
      using CL = std::complex<long double>;
      double worst = 0.0;
      for (std::size_t k = 0; k < r.line.t.size(); k += 5) {
        long double t = r.line.t[k];
        CL s(0.5L, t);
        CL te = analytic::zeta(s) * analytic::dirichlet_L_chi4(s) /
                analytic::zeta(CL(2.0L) * s);
        long double n2 = 2.0L * std::log((long double)r.line.a) -
                         scattering::local_phase_derivative<long double>(t);
        double w_ext = double((te.real() * te.real() + te.imag() * te.imag()) / n2);
        worst = std::max(worst,
                         std::abs(w_ext - r.line.weight[k]) / r.line.weight[k]);
      }
      j["weight_precision_check"] = worst;
    }
    out.write(j.dump(2) + "\n", false);
  }
  return 0;
}

int cmd_interlace(double a, double t_max, const std::string& theta_name, int tail_terms,
                  const Output& out) {
  auto r = solve(a, t_max, theta_name, tail_terms);
  bool one_per_bracket = r.roots.size() == r.line.t.size() - 1;
  bool interior = true, certs = true;
  for (const auto& root : r.roots) {
    interior = interior && root.tau > root.bracket_lo && root.tau < root.bracket_hi;
    certs = certs && root.derivative_certificate > 0.0;
  }
  // tail-quadrature doubling stability
  scattering::PhaseTable table(t_max + 0.1);
  auto line2 = spectrum::build_line(table, a, t_max, spectrum::theta_by_name(theta_name),
                                    2 * tail_terms);
  auto roots2 = spectrum::discrete_roots(line2);
  double worst_move = 0.0;
  for (std::size_t k = 0; k < std::min(roots2.size(), r.roots.size()); ++k)
    worst_move = std::max(worst_move, std::abs(roots2[k].tau - r.roots[k].tau));
  bool stable = worst_move < 1e-7;

  json j;
  j["a"] = r.line.a;
  j["t_max"] = t_max;
  j["n_brackets"] = r.line.t.size() - 1;
  j["n_roots"] = r.roots.size();
  j["one_root_per_bracket"] = one_per_bracket;
  j["all_strictly_interior"] = interior;
  j["all_certificates_positive"] = certs;
  j["tail_doubling_max_move"] = worst_move;
  j["stable_1e-7"] = stable;
  bool ok = one_per_bracket && interior && certs && stable;
  j["verdict"] = ok ? "interlacing holds" : "interlacing FALSIFIED";
  out.write(j.dump(2) + "\n", false);
  return ok ? 0 : 2;
}

int cmd_correlate(double a, double t_max, const std::string& which, double bin_width,
                  double max_gap, const Output& out, const std::string& format) {
  scattering::PhaseTable table(std::max(t_max, 100.0) + 0.1);
  stats::PairCorrelationReport rep;
  if (which == "line") {
    auto scan = scattering::find_zeros(table, a, t_max);
    std::vector<double> ts;
    for (const auto& z : scan.zeros)
      if (z.upward) ts.push_back(z.t);
    const double ln_a = std::log(a);
    rep = stats::pair_correlation(
        ts, [&](double t) { return table.total_phase(ln_a, t) / (2.0 * kPi); },
        bin_width, max_gap);
  } else if (which == "theta") {
    const auto& theta = spectrum::default_theta();
    auto tz = theta.line_zeros(t_max);
    rep = stats::pair_correlation(tz, theta.zero_count_smooth, bin_width, max_gap);
  } else {
    throw Error(Error::Kind::usage, "correlate: --which must be line or theta");
  }
  if (format == "csv") {
    std::ostringstream body;
    body << "bin_lo,bin_hi,count_per_point\n";
    for (std::size_t b = 0; b < rep.count.size(); ++b)
      body << num15(rep.bin_lo[b]) << "," << num15(rep.bin_lo[b] + rep.bin_width) << ","
           << num15(rep.count[b]) << "\n";
    out.write(body.str(), true);
  } else {
    json j;
    j["which"] = which;
    j["n_points"] = rep.n_points;
    j["nn_mean"] = rep.nn_mean;
    j["nn_cv"] = rep.nn_cv;
    j["bin_width"] = rep.bin_width;
    j["max_gap"] = rep.max_gap;
    j["count_per_point"] = rep.count;
    out.write(j.dump(2) + "\n", false);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eisenlab: scattering ratios, Maass-Selberg norms, and the "
               "theta_v interlacing solver for the GL(2) desk model"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output, format, theta_name = "delta-at-i";
  std::string precision = "double";
  bool no_timestamp = false;
  double a = 3.0, t_max = 60.0, t = 12.5;
  int tail_terms = 96;
  app.add_option("--output", output, "output file (default stdout)");
  app.add_flag("--no-timestamp", no_timestamp, "suppress the CSV timestamp header");
  app.add_option("--precision", precision, "double | extended")
      ->check(CLI::IsMember({"double", "extended"}));

  auto add_a = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "truncation height a > 1")->check(CLI::Range(1.0 + 1e-9, 1e9));
  };
  auto add_tmax = [&](CLI::App* cmd) {
    cmd->add_option("--t-max", t_max, "spectral-parameter range cap (<= 300)")
        ->check(CLI::Range(1.0, 300.0));
  };

  // specfun
  auto* sf = app.add_subcommand("specfun", "evaluate a special function");
  std::string fn = "zeta", spec_file;
  double re = 2.0, im = 0.0;
  sf->add_option("--function", fn,
                 "zeta|lngamma|chi4|dedekind|xi|completed-chi4|c|theta|user");
  sf->add_option("--re", re, "Re s");
  sf->add_option("--im", im, "Im s");
  sf->add_option("--spec-file", spec_file, "user LFunctionSpec coefficient file");

  auto* zr = app.add_subcommand("scattering-zeros", "constant-term zeros on (t_min, t_max]");
  add_a(zr);
  add_tmax(zr);
  zr->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* ct = app.add_subcommand("count", "observed vs predicted zero counts");
  add_a(ct);
  add_tmax(ct);

  auto* gp = app.add_subcommand("gaps", "nearest-neighbor gap report");
  double window_lo = 0.0;
  add_a(gp);
  add_tmax(gp);
  gp->add_option("--window-lo", window_lo, "discard zeros below this height");
  gp->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* cs = app.add_subcommand("casimir", "exact Casimir scalar and split check");
  int n = 4;
  std::string preset = "section5";
  cs->add_option("--n", n, "gl_n rank (2, 3, 4)")->check(CLI::Range(2, 4));
  cs->add_option("--preset", preset, "generic | section5");

  auto* iw = app.add_subcommand("intertwine", "simple-reflection chain on parameters");
  std::string word = "2,1,3,2", tuple_preset = "generic";
  iw->add_option("--word", word, "comma-separated reflections, applied first to last");
  iw->add_option("--tuple", tuple_preset, "generic | rankin-selberg | balanced")
      ->check(CLI::IsMember({"generic", "rankin-selberg", "balanced"}));

  auto* ms = app.add_subcommand("ms-norm", "truncated norm: closed form vs extrapolation");
  add_a(ms);
  ms->add_option("--t", t, "critical-line ordinate");

  auto* sp = app.add_subcommand("spectrum-solve", "build the line and solve theta_v = 0");
  add_a(sp);
  add_tmax(sp);
  sp->add_option("--theta", theta_name, "theta provider (delta-at-i)");
  sp->add_option("--tail-terms", tail_terms, "tail quadrature nodes");
  std::string lambda_model = "gl2";
  sp->add_option("--lambda-model", lambda_model,
                 "gl2 | gl4 (exact factor-4 rescaling; roots cannot move)")
      ->check(CLI::IsMember({"gl2", "gl4"}));
  sp->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* il = app.add_subcommand("interlace", "interlacing verdict (exit 2 if falsified)");
  add_a(il);
  add_tmax(il);
  il->add_option("--theta", theta_name, "theta provider (delta-at-i)");
  il->add_option("--tail-terms", tail_terms, "tail quadrature nodes");

  auto* co = app.add_subcommand("correlate", "pair-correlation histogram");
  std::string which = "line";
  double bin_width = 0.1, max_gap = 8.0;
  add_a(co);
  add_tmax(co);
  co->add_option("--which", which, "line | theta");
  co->add_option("--bin-width", bin_width, "histogram bin width");
  co->add_option("--max-gap", max_gap, "largest normalized gap kept");
  co->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1
  }

  Output out{output, !no_timestamp};
  auto fmt = [&](const char* dflt) { return format.empty() ? std::string(dflt) : format; };
  const bool extended = precision == "extended";
  try {
    if (*sf) return cmd_specfun(fn, re, im, extended, spec_file, out);
    if (*zr) return cmd_zeros(a, t_max, out, fmt("csv"));
    if (*ct) return cmd_count(a, t_max, out);
    if (*gp) return cmd_gaps(a, t_max, window_lo, out, fmt("csv"));
    if (*cs) return cmd_casimir(n, preset, out);
    if (*iw) return cmd_intertwine(word, tuple_preset, out);
    if (*ms) return cmd_ms_norm(a, t, extended, out);
    if (*sp) return cmd_spectrum_solve(a, t_max, theta_name, tail_terms, extended,
                                       lambda_model, out, fmt("csv"));
    if (*il) return cmd_interlace(a, t_max, theta_name, tail_terms, out);
    if (*co) return cmd_correlate(a, t_max, which, bin_width, max_gap, out, fmt("csv"));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // bad inputs exit 1; falsified model invariants exit 2
    switch (e.kind) {
      case Error::Kind::usage:
      case Error::Kind::format:
      case Error::Kind::pole:
      case Error::Kind::too_close_to_pole:
      case Error::Kind::degenerate_exponent:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return +1;
}
