// Exact universal-enveloping-algebra engine for gl_n over the rationals:
// PBW normal forms, Casimir elements, infinitesimal characters, and the
// Levi-block split of the gl_4 Casimir.
#ifndef EISENLAB_LIEALG_HPP
#define EISENLAB_LIEALG_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eisenlab/poly.hpp"

namespace eisenlab::liealg {

/// E(i,j) for i != j; H(i) when i == j. Indices are 1-based.
struct BasisElement {
  std::uint8_t i = 0, j = 0;
  bool is_cartan() const { return i == j; }
  bool is_lower() const { return i > j; }
  bool is_upper() const { return i < j; }
  bool operator==(const BasisElement&) const = default;
};

inline BasisElement E(int i, int j) {
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline BasisElement H(int i) { return E(i, i); }

/// Which side of the Cartan block picks up the commutator correction when
/// straightening: the canonical storage order is lower < Cartan < upper;
/// the reversed order puts the corrections in with minus signs.
enum class PbwOrder { LowerCartanUpper, UpperCartanLower };

/// Monomial key: one byte (i<<4|j) per factor, PBW-sorted.
using Monomial = std::string;

Monomial encode(const std::vector<BasisElement>& word);
std::vector<BasisElement> decode(const Monomial& m);

bool basis_less(BasisElement a, BasisElement b, PbwOrder order);

/// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, as (basis, coeff) pairs.
std::vector<std::pair<BasisElement, Rational>> bracket(BasisElement a, BasisElement b);

class UEAElement {
public:
  explicit UEAElement(int n = 4) : n_(n) {}

  int rank() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  static UEAElement zero(int n) { return UEAElement(n); }
  /// A single generator as an element.
  static UEAElement generator(int n, BasisElement b);
  /// Straighten an arbitrary word into canonical PBW normal form.
  static UEAElement from_word(int n, const std::vector<BasisElement>& word,
                              Rational coeff = 1,
                              PbwOrder order = PbwOrder::LowerCartanUpper);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rational& q);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rational& q) { return a *= q; }
  bool operator==(const UEAElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  /// PBW-normal-ordered product (canonical order).
  friend UEAElement multiply(const UEAElement& x, const UEAElement& y);
  friend UEAElement operator*(const UEAElement& x, const UEAElement& y) {
    return multiply(x, y);
  }

  /// Re-expand this element in the PBW basis of the given order.
  std::map<Monomial, Rational> normal_form(PbwOrder order) const;

  /// True when every monomial is sorted for the given order.
  bool is_normal_ordered(PbwOrder order) const;

  std::string str() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  int n_;
  std::map<Monomial, Rational> terms_;
};

/// H(i,j) = H(i) - H(j).
UEAElement h_diff(int n, int i, int j);
/// H(1,2,3,4) = diag(1,1,-1,-1).
UEAElement h_1234();

/// Trace-form dual-basis Casimir of gl_n: sum_i H(i)^2 + sum_{i!=j} E(i,j)E(j,i).
UEAElement casimir(int n);
/// Number of dual-pair products before normal ordering (n^2).
int casimir_raw_term_count(int n);

/// sl_4-style rearrangement 1/2 H12^2 + 1/2 H23^2 + 1/2 H34^2 + sum E-pairs,
/// kept for comparison with the second Casimir display.
UEAElement casimir_sl4_variant();

enum class CharacterBranch {
  Minus,  // corrections -H(i,j): reproduces 4s^2+4sf^2-8sf-4s
  Plus,   // corrections +H(i,j) (canonical storage order)
};

/// Principal-series evaluation rules: after straightening in the branch's
/// order, monomials with any off-diagonal factor act by 0 and H(i) acts by
/// the assigned linear form.
RationalPoly infinitesimal_character(const UEAElement& x,
                                     const std::vector<LinForm>& assignment,
                                     CharacterBranch branch = CharacterBranch::Minus);

/// Generic assignment H(i) -> s_i.
std::vector<LinForm> generic_params(int n);
/// Balanced eigenvalue tuple (s+sf, -s+sf, s-sf, -s-sf).
std::vector<LinForm> eigenvalue_params();

struct SplitCheck {
  bool ok = false;
  UEAElement residual{4};
  // residual monomials that are pure Cartan but not among the allowed
  // correction terms (center + normal-ordering H corrections)
  std::vector<std::string> offending;
};

/// Residual of Omega - Omega1 - Omega2 - Omega3 for gl_4: every term must
/// carry an off-Levi-block factor, apart from the central (sum H)^2/4 and
/// the H corrections produced by normal ordering.
SplitCheck casimir_split_check();

UEAElement split_omega1();
UEAElement split_omega2();
UEAElement split_omega3();

}  // namespace eisenlab::liealg

#endif
