#include "eisenlab/analytic.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace eisenlab::analytic {

const LFunctionSpec& zeta_spec() {
  static const LFunctionSpec spec = [] {
    LFunctionSpec s;
    s.name = "zeta";
    s.degree = 1;
    s.gamma_factors = {{0.5, Complex(0.0)}};
    s.conductor_power_base = 1.0 / std::sqrt(std::numbers::pi);
    s.value = [](Complex z) { return zeta(z); };
    s.coefficient = [](int) { return 1.0; };
    s.pole_locations = {Complex(1.0)};
    return s;
  }();
  return spec;
}

const LFunctionSpec& chi4_spec() {
  static const LFunctionSpec spec = [] {
    LFunctionSpec s;
    s.name = "chi4";
    s.degree = 1;
    s.gamma_factors = {{0.5, Complex(0.5)}};
    s.conductor_power_base = 2.0 / std::sqrt(std::numbers::pi);
    s.value = [](Complex z) { return dirichlet_L_chi4(z); };
    s.coefficient = [](int n) {
      int r = n % 4;
      return r == 1 ? 1.0 : (r == 3 ? -1.0 : 0.0);
    };
    return s;
  }();
  return spec;
}

const LFunctionSpec& dedekind_spec() {
  static const LFunctionSpec spec = [] {
    LFunctionSpec s;
    s.name = "dedekind_gaussian";
    s.degree = 2;
    s.gamma_factors = {{0.5, Complex(0.0)}, {0.5, Complex(0.5)}};
    s.conductor_power_base = 2.0 / std::numbers::pi;
    s.value = [](Complex z) { return dedekind_gaussian(z); };
    s.coefficient = [](int n) {
      // number of Gaussian-integer ideals of norm n
      int c = 0;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) {
          int r = d % 4;
          c += r == 1 ? 1 : (r == 3 ? -1 : 0);
        }
      return double(c);
    };
    s.pole_locations = {Complex(1.0)};
    return s;
  }();
  return spec;
}

Complex completed_log(const LFunctionSpec& spec, Complex s) {
  for (const auto& p : spec.pole_locations)
    if (std::abs(s - p) < 1e-12)
      throw Error(Error::Kind::pole, spec.name + ": L-pole at s = " +
                                         std::to_string(p.real()));
  Complex lg = s * std::log(Complex(spec.conductor_power_base));
  for (const auto& [lambda, mu] : spec.gamma_factors) lg += lngamma(lambda * s + mu);
  Complex v = spec.value(s);
  if (std::abs(v) == 0.0)
    throw Error(Error::Kind::nonfinite, spec.name + ": log of zero L-value");
  return lg + std::log(v);
}

Complex completed(const LFunctionSpec& spec, Complex s) {
  for (const auto& p : spec.pole_locations)
    if (std::abs(s - p) < 1e-12)
      throw Error(Error::Kind::pole,
                  spec.name + ": L-pole at s = " + std::to_string(p.real()));
  Complex g(1.0);
  for (const auto& [lambda, mu] : spec.gamma_factors) {
    // lngamma throws the gamma-pole error with the location baked in
    try {
      g *= std::exp(lngamma(lambda * s + mu));
    } catch (const Error& e) {
      if (e.kind == Error::Kind::pole)
        throw Error(Error::Kind::pole,
                    spec.name + ": gamma pole at argument " +
                        std::to_string((lambda * s + mu).real()));
      throw;
    }
  }
  Complex out = std::pow(Complex(spec.conductor_power_base), s) * g * spec.value(s);
  ensure_finite(out, "completed");
  return out;
}

namespace {

double completed_phase(const LFunctionSpec& spec, double t) {
  const Complex s(0.5, t);
  Complex lg = s * std::log(Complex(spec.conductor_power_base));
  for (const auto& [lambda, mu] : spec.gamma_factors) lg += lngamma(lambda * s + mu);
  return lg.imag();
}

}  // namespace

double z_function(const LFunctionSpec& spec, double t) {
  const Complex s(0.5, t);
  const double phi = completed_phase(spec, t);
  return (std::exp(Complex(0.0, phi)) * spec.value(s)).real();
}

double smooth_zero_count(const LFunctionSpec& spec, double t) {
  return completed_phase(spec, t) / std::numbers::pi;
}

LFunctionSpec parse_lfunction_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::format, "cannot open " + path);
  LFunctionSpec spec;
  spec.name = path;
  spec.conductor_power_base = 1.0;
  auto coeffs = std::make_shared<std::vector<double>>();
  coeffs->push_back(0.0);  // 1-based
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1);
      std::string val = line.substr(colon + 1);
      auto trim = [](std::string& s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
      };
      trim(key);
      trim(val);
      if (key == "name") spec.name = val;
      else if (key == "degree") spec.degree = std::stoi(val);
      else if (key == "conductor") spec.conductor_power_base = std::stod(val);
      else if (key == "gamma") {
        std::istringstream gs(val);
        std::string tok;
        std::vector<double> nums;
        while (std::getline(gs, tok, ',')) nums.push_back(std::stod(tok));
        if (nums.size() < 2)
          throw Error(Error::Kind::format, "gamma line needs lambda,mu_re[,mu_im]");
        spec.gamma_factors.emplace_back(
            nums[0], Complex(nums[1], nums.size() > 2 ? nums[2] : 0.0));
      } else if (key == "poles") {
        std::istringstream ps(val);
        std::string tok;
        while (std::getline(ps, tok, ','))
          spec.pole_locations.push_back(Complex(std::stod(tok)));
      }
      continue;
    }
    std::istringstream row(line);
    std::string ntok, atok;
    if (!std::getline(row, ntok, ',') || !std::getline(row, atok))
      throw Error(Error::Kind::format, "bad coefficient row: " + line);
    int n = std::stoi(ntok);
    double a = std::stod(atok);
    if (static_cast<int>(coeffs->size()) != n)
      throw Error(Error::Kind::format, "coefficient rows must be 1,2,3,...");
    coeffs->push_back(a);
  }
  if (coeffs->size() < 2 || std::abs((*coeffs)[1] - 1.0) > 1e-12)
    throw Error(Error::Kind::format, "coefficient a(1) must equal 1");
  if (spec.degree != static_cast<int>(spec.gamma_factors.size()))
    throw Error(Error::Kind::format, "degree must equal the number of gamma factors");
  spec.coefficient = [coeffs](int n) {
    return n < static_cast<int>(coeffs->size()) ? (*coeffs)[n] : 0.0;
  };
  // truncated Dirichlet series; for experimentation on Re s > 1
  spec.value = [coeffs](Complex s) {
    Complex tot(0.0);
    for (std::size_t n = 1; n < coeffs->size(); ++n)
      tot += (*coeffs)[n] * std::exp(-s * std::log(double(n)));
    return tot;
  };
  return spec;
}

}  // namespace eisenlab::analytic
