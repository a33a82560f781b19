// Exact rational linear forms and sparse multivariate polynomials over
// named symbols. Shared by the enveloping-algebra and intertwining engines.
#ifndef EISENLAB_POLY_HPP
#define EISENLAB_POLY_HPP

#include <map>
#include <string>
#include <vector>
#include <stdexcept>
#include <boost/multiprecision/cpp_int.hpp>

namespace eisenlab {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& q);

/// Linear form c0 + sum c_i * sym_i with exact rational coefficients.
class LinForm {
public:
  LinForm() = default;
  explicit LinForm(Rational constant) : constant_(std::move(constant)) {}
  static LinForm symbol(const std::string& name, Rational coeff = 1) {
    LinForm f;
    f.coeffs_[name] = std::move(coeff);
    f.normalize();
    return f;
  }

  const Rational& constant() const { return constant_; }
  Rational coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(const Rational& q);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Rational& q) { return a *= q; }
  friend LinForm operator-(const LinForm& a) { return a * Rational(-1); }
  friend LinForm operator+(LinForm a, const Rational& q) {
    a.constant_ += q;
    return a;
  }
  friend LinForm operator-(LinForm a, const Rational& q) {
    a.constant_ -= q;
    return a;
  }
  bool operator==(const LinForm& o) const {
    return constant_ == o.constant_ && coeffs_ == o.coeffs_;
  }
  bool operator<(const LinForm& o) const {
    if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
    return constant_ < o.constant_;
  }

  /// Replace each symbol by another linear form.
  LinForm substitute(const std::map<std::string, LinForm>& table) const;

  std::string str() const;

private:
  void normalize();
  std::map<std::string, Rational> coeffs_;
  Rational constant_ = 0;
};

/// Sparse polynomial with rational coefficients; monomial = symbol -> exponent.
class RationalPoly {
public:
  using Monomial = std::map<std::string, int>;

  RationalPoly() = default;
  explicit RationalPoly(Rational constant) {
    if (constant != 0) terms_[{}] = std::move(constant);
  }
  static RationalPoly symbol(const std::string& name) {
    RationalPoly p;
    p.terms_[{{name, 1}}] = 1;
    return p;
  }
  static RationalPoly from_linform(const LinForm& f);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& q);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& q) { return a *= q; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a) { return a * Rational(-1); }
  bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }

  RationalPoly pow(int e) const;
  /// Replace symbols by linear forms and expand.
  RationalPoly substitute(const std::map<std::string, LinForm>& table) const;

  /// Canonical display: total degree descending, then lexicographic.
  std::string str() const;
  /// Display with caller-chosen leading monomials, remaining terms canonical.
  std::string str_ordered(const std::vector<Monomial>& lead) const;

private:
  void prune();
  std::map<Monomial, Rational> terms_;
};

}  // namespace eisenlab

#endif
