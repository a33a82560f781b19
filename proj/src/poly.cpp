#include "eisenlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace eisenlab {

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

void LinForm::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LinForm& LinForm::operator+=(const LinForm& o) {
  constant_ += o.constant_;
  for (const auto& [k, v] : o.coeffs_) coeffs_[k] += v;
  normalize();
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  constant_ -= o.constant_;
  for (const auto& [k, v] : o.coeffs_) coeffs_[k] -= v;
  normalize();
  return *this;
}

LinForm& LinForm::operator*=(const Rational& q) {
  constant_ *= q;
  for (auto& [k, v] : coeffs_) v *= q;
  normalize();
  return *this;
}

LinForm LinForm::substitute(const std::map<std::string, LinForm>& table) const {
  LinForm out(constant_);
  for (const auto& [k, v] : coeffs_) {
    auto it = table.find(k);
    if (it == table.end())
      out += LinForm::symbol(k, v);
    else
      out += it->second * v;
  }
  return out;
}

namespace {

// one signed term, e.g. "4*s^2" or "s*sf"
std::string term_str(const std::map<std::string, int>& mono, const Rational& coeff,
                     bool leading) {
  std::ostringstream os;
  Rational a = coeff < 0 ? Rational(-coeff) : coeff;
  if (!leading)
    os << (coeff < 0 ? " - " : " + ");
  else if (coeff < 0)
    os << "-";
  bool wrote = false;
  if (a != 1 || mono.empty()) {
    os << a;
    wrote = true;
  }
  for (const auto& [sym, e] : mono) {
    if (wrote) os << "*";
    os << sym;
    if (e != 1) os << "^" << e;
    wrote = true;
  }
  return os.str();
}

}  // namespace

std::string LinForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    os << term_str({{k, 1}}, v, first);
    first = false;
  }
  if (constant_ != 0 || first) os << term_str({}, constant_, first);
  return os.str();
}

RationalPoly RationalPoly::from_linform(const LinForm& f) {
  RationalPoly p(f.constant());
  for (const auto& [k, v] : f.coeffs()) p += RationalPoly::symbol(k) * v;
  return p;
}

int RationalPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& [sym, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

void RationalPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  prune();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  prune();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& q) {
  for (auto& [m, c] : terms_) c *= q;
  prune();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      RationalPoly::Monomial m = ma;
      for (const auto& [sym, e] : mb) m[sym] += e;
      out.terms_[m] += ca * cb;
    }
  }
  out.prune();
  return out;
}

RationalPoly RationalPoly::pow(int e) const {
  RationalPoly out{Rational(1)};
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

RationalPoly RationalPoly::substitute(const std::map<std::string, LinForm>& table) const {
  RationalPoly out;
  for (const auto& [m, c] : terms_) {
    RationalPoly t{c};
    for (const auto& [sym, e] : m) {
      auto it = table.find(sym);
      RationalPoly base = it == table.end() ? RationalPoly::symbol(sym)
                                            : RationalPoly::from_linform(it->second);
      t = t * base.pow(e);
    }
    out += t;
  }
  return out;
}

std::string RationalPoly::str() const {
  return str_ordered({});
}

std::string RationalPoly::str_ordered(const std::vector<Monomial>& lead) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> rest(terms_.begin(), terms_.end());
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Monomial& m, const Rational& c) {
    os << term_str(m, c, first);
    first = false;
  };
  for (const auto& m : lead) {
    auto it = std::find_if(rest.begin(), rest.end(),
                           [&](const auto& p) { return p.first == m; });
    if (it != rest.end()) {
      emit(it->first, it->second);
      rest.erase(it);
    }
  }
  auto total = [](const Monomial& m) {
    int t = 0;
    for (const auto& [sym, e] : m) t += e;
    return t;
  };
  std::stable_sort(rest.begin(), rest.end(), [&](const auto& x, const auto& y) {
    int tx = total(x.first), ty = total(y.first);
    if (tx != ty) return tx > ty;
    return x.first < y.first;
  });
  for (const auto& [m, c] : rest) emit(m, c);
  return os.str();
}

}  // namespace eisenlab
