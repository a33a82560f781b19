#include "eisenlab/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eisenlab::liealg {

Monomial encode(const std::vector<BasisElement>& word) {
  Monomial m;
  m.reserve(word.size());
  for (auto b : word) m.push_back(static_cast<char>((b.i << 4) | b.j));
  return m;
}

std::vector<BasisElement> decode(const Monomial& m) {
  std::vector<BasisElement> word;
  word.reserve(m.size());
  for (char c : m) {
    auto u = static_cast<std::uint8_t>(c);
    word.push_back({static_cast<std::uint8_t>(u >> 4), static_cast<std::uint8_t>(u & 0xf)});
  }
  return word;
}

// block rank: 0 = first block, 1 = Cartan, 2 = last block
static int block_of(BasisElement b, PbwOrder order) {
  if (b.is_cartan()) return 1;
  bool lower_first = order == PbwOrder::LowerCartanUpper;
  if (b.is_lower()) return lower_first ? 0 : 2;
  return lower_first ? 2 : 0;
}

bool basis_less(BasisElement a, BasisElement b, PbwOrder order) {
  int ba = block_of(a, order), bb = block_of(b, order);
  if (ba != bb) return ba < bb;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::vector<std::pair<BasisElement, Rational>> bracket(BasisElement a, BasisElement b) {
  std::vector<std::pair<BasisElement, Rational>> out;
  if (a.j == b.i) out.emplace_back(E(a.i, b.j), 1);
  if (b.j == a.i) out.emplace_back(E(b.i, a.j), -1);
  // cancel E_xy appearing with both signs ([H_i,H_j], [E_ab,E_ab], ...)
  if (out.size() == 2 && out[0].first == out[1].first) out.clear();
  return out;
}

UEAElement UEAElement::generator(int n, BasisElement b) {
  UEAElement e(n);
  e.terms_[encode({b})] = 1;
  return e;
}

void UEAElement::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

namespace {

// PBW straightening: repeatedly swap out-of-order adjacent factors,
// spawning the bracket's lower-degree words. Terminates since each swap
// reduces inversions and each bracket reduces degree.
void straighten(std::vector<BasisElement> word, Rational coeff, PbwOrder order,
                std::map<Monomial, Rational>& out) {
  std::vector<std::pair<std::vector<BasisElement>, Rational>> stack;
  stack.emplace_back(std::move(word), std::move(coeff));
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    std::size_t k = 0;
    bool sorted = true;
    for (; k + 1 < w.size(); ++k) {
      if (basis_less(w[k + 1], w[k], order)) {
        sorted = false;
        break;
      }
    }
    if (sorted) {
      auto key = encode(w);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(std::move(key), c);
      else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
      continue;
    }
    for (const auto& [b, cb] : bracket(w[k], w[k + 1])) {
      std::vector<BasisElement> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + k);
      shorter.push_back(b);
      shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
      stack.emplace_back(std::move(shorter), c * cb);
    }
    std::swap(w[k], w[k + 1]);
    stack.emplace_back(std::move(w), std::move(c));
  }
}

}  // namespace

UEAElement UEAElement::from_word(int n, const std::vector<BasisElement>& word,
                                 Rational coeff, PbwOrder order) {
  for (auto b : word)
    if (b.i < 1 || b.j < 1 || b.i > n || b.j > n)
      throw std::invalid_argument("basis index out of range");
  UEAElement e(n);
  straighten(word, std::move(coeff), order, e.terms_);
  return e;
}

UEAElement multiply(const UEAElement& x, const UEAElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("rank mismatch");
  UEAElement out(x.n_);
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      auto word = decode(mx);
      auto wy = decode(my);
      word.insert(word.end(), wy.begin(), wy.end());
      straighten(std::move(word), cx * cy, PbwOrder::LowerCartanUpper, out.terms_);
    }
  }
  return out;
}

std::map<Monomial, Rational> UEAElement::normal_form(PbwOrder order) const {
  std::map<Monomial, Rational> out;
  for (const auto& [m, c] : terms_) straighten(decode(m), c, order, out);
  return out;
}

bool UEAElement::is_normal_ordered(PbwOrder order) const {
  for (const auto& [m, c] : terms_) {
    auto w = decode(m);
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (basis_less(w[k + 1], w[k], order)) return false;
  }
  return true;
}

std::string UEAElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    auto w = decode(m);
    if (a != 1 || w.empty()) os << a;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0 || a != 1) os << "*";
      if (w[k].is_cartan())
        os << "H(" << int(w[k].i) << ")";
      else
        os << "E(" << int(w[k].i) << "," << int(w[k].j) << ")";
    }
    first = false;
  }
  return os.str();
}

UEAElement h_diff(int n, int i, int j) {
  return UEAElement::generator(n, H(i)) - UEAElement::generator(n, H(j));
}

UEAElement h_1234() {
  return h_diff(4, 1, 3) + h_diff(4, 2, 4);
}

UEAElement casimir(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("casimir: n in {2,3,4}");
  UEAElement out(n);
  for (int i = 1; i <= n; ++i) out += UEAElement::from_word(n, {H(i), H(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out += UEAElement::from_word(n, {E(i, j), E(j, i)});
  return out;
}

int casimir_raw_term_count(int n) { return n * n; }

UEAElement casimir_sl4_variant() {
  const int n = 4;
  UEAElement out(n);
  for (int i = 1; i <= 3; ++i)
    out += multiply(h_diff(n, i, i + 1), h_diff(n, i, i + 1)) * Rational(1, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out += UEAElement::from_word(n, {E(i, j), E(j, i)});
      out += UEAElement::from_word(n, {E(j, i), E(i, j)});
    }
  return out;
}

RationalPoly infinitesimal_character(const UEAElement& x,
                                     const std::vector<LinForm>& assignment,
                                     CharacterBranch branch) {
  if (static_cast<int>(assignment.size()) != x.rank())
    throw std::invalid_argument("assignment size must equal rank");
  PbwOrder order = branch == CharacterBranch::Plus ? PbwOrder::LowerCartanUpper
                                                   : PbwOrder::UpperCartanLower;
  RationalPoly out;
  for (const auto& [m, c] : x.normal_form(order)) {
    auto w = decode(m);
    bool pure = std::all_of(w.begin(), w.end(),
                            [](BasisElement b) { return b.is_cartan(); });
    if (!pure) continue;
    RationalPoly t{c};
    for (auto b : w) t = t * RationalPoly::from_linform(assignment[b.i - 1]);
    out += t;
  }
  return out;
}

std::vector<LinForm> generic_params(int n) {
  std::vector<LinForm> out;
  for (int i = 1; i <= n; ++i) out.push_back(LinForm::symbol("s" + std::to_string(i)));
  return out;
}

std::vector<LinForm> eigenvalue_params() {
  auto s = LinForm::symbol("s");
  auto sf = LinForm::symbol("sf");
  return {s + sf, -s + sf, s - sf, -s - sf};
}

UEAElement split_omega1() {
  auto h12 = h_diff(4, 1, 2);
  return multiply(h12, h12) * Rational(1, 2) +
         UEAElement::from_word(4, {E(1, 2), E(2, 1)}) +
         UEAElement::from_word(4, {E(2, 1), E(1, 2)});
}

UEAElement split_omega2() {
  auto h34 = h_diff(4, 3, 4);
  return multiply(h34, h34) * Rational(1, 2) +
         UEAElement::from_word(4, {E(3, 4), E(4, 3)}) +
         UEAElement::from_word(4, {E(4, 3), E(3, 4)});
}

UEAElement split_omega3() {
  auto h = h_1234();
  return multiply(h, h) * Rational(1, 4);
}

SplitCheck casimir_split_check() {
  SplitCheck r;
  r.residual = casimir(4) - split_omega1() - split_omega2() - split_omega3();

  // allowed pure-Cartan part: (H1+H2+H3+H4)^2/4 (center) plus the
  // straightening corrections H(i,j) of the four off-block dual pairs
  UEAElement allowed(4);
  UEAElement hsum(4);
  for (int i = 1; i <= 4; ++i) hsum += UEAElement::generator(4, H(i));
  allowed += multiply(hsum, hsum) * Rational(1, 4);
  for (int i : {1, 2})
    for (int j : {3, 4}) allowed += h_diff(4, i, j);

  UEAElement cartan_part(4);
  r.ok = true;
  for (const auto& [m, c] : r.residual.terms()) {
    auto w = decode(m);
    bool off_block = false;
    bool pure_cartan = true;
    for (auto b : w) {
      if (!b.is_cartan()) pure_cartan = false;
      bool cross = (b.i <= 2 && b.j >= 3) || (b.i >= 3 && b.j <= 2);
      if (!b.is_cartan() && cross) off_block = true;
    }
    if (off_block) continue;
    if (!pure_cartan) {
      // E factor entirely inside one Levi block: would falsify the split
      r.ok = false;
      UEAElement bad(4);
      bad += UEAElement::from_word(4, w, c);
      r.offending.push_back(bad.str());
      continue;
    }
    UEAElement term(4);
    term += UEAElement::from_word(4, w, c);
    cartan_part += term;
  }
  if (!(cartan_part == allowed)) {
    r.ok = false;
    r.offending.push_back((cartan_part - allowed).str());
  }
  return r;
}

}  // namespace eisenlab::liealg
