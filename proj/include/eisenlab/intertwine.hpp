// Simple-reflection intertwining operators on unramified principal-series
// parameters: parameter bookkeeping, accumulated local zeta-ratio factors,
// and the Rankin-Selberg specialization of the sigma2.sigma3.sigma1.sigma2
// chain.
#ifndef EISENLAB_INTERTWINE_HPP
#define EISENLAB_INTERTWINE_HPP

#include <string>
#include <vector>

#include "eisenlab/poly.hpp"

namespace eisenlab::intertwine {

/// Ordered tuple of principal-series parameters.
using ParamTuple = std::vector<LinForm>;

/// One emitted ratio zeta(numerator)/zeta(denominator); numerator is always
/// denominator - 1 when produced by a reflection.
struct ZetaRatio {
  LinForm numerator;
  LinForm denominator;
  bool operator==(const ZetaRatio&) const = default;
  std::string str() const;
  ZetaRatio inverted() const { return {denominator, numerator}; }
};

/// Multiset of formal ratios; factors are never cancelled implicitly.
struct FactorProduct {
  std::vector<ZetaRatio> factors;
  /// Explicit cancellation of matching numerator/denominator arguments
  /// across factors; returns the reduced product.
  FactorProduct cancelled() const;
  FactorProduct inverted() const;
  std::string str() const;
};

/// Generic starting tuple (s1, s2, s3, s4) [or s1..sn].
ParamTuple generic_tuple(int n = 4);
/// Rankin-Selberg specialization (s+sf1, s-sf1, -s+sf2, -s-sf2).
ParamTuple rankin_selberg_tuple();
/// Balanced single-parameter specialization (s+sf, -s+sf, s-sf, -s-sf).
ParamTuple balanced_tuple();

struct ReflectionResult {
  ParamTuple params;
  FactorProduct factors;
};

/// sigma_k swaps slots k,k+1 with +1 on the incoming entry and -1 on the
/// outgoing one, emitting zeta(d-1)/zeta(d) for d = p_k - p_{k+1}.
ReflectionResult apply_reflection(int k, const ParamTuple& p);

struct ChainStep {
  int reflection;
  ParamTuple params;   // tuple after this step
  ZetaRatio factor;    // factor emitted by this step
};

struct ChainResult {
  ParamTuple params;
  FactorProduct factors;
  std::vector<ChainStep> steps;
  std::vector<int> permutation;  // slot i of result holds symbol from slot perm[i]
};

/// Apply the word left to right (word[0] acts first; equivalently the
/// operator composition read right to left).
ChainResult compose_word(const std::vector<int>& word, const ParamTuple& p);

struct SpecializationReport {
  bool all_pass = false;
  std::vector<bool> factor_pass;
  std::vector<LinForm> expected_args;
  std::vector<LinForm> actual_args;
  bool reciprocal_ok = false;   // P(s) * P(2-s) == 1 modulo x ~ 1-x
  std::string note;
};

/// Substitute the Rankin-Selberg tuple into the [2,1,3,2] chain result and verify
/// the four factor arguments against the Rankin-Selberg pattern
/// {2s-sf1-sf2, 2s+sf1-sf2-1, 2s-sf1+sf2-1, 2s+sf1+sf2-2}.
SpecializationReport specialize_rankin_selberg(const ChainResult& generic_chain);

/// The involution under which the chain's factor product formally inverts
/// (modulo the per-symbol reflection x -> 1-x) is s -> 2-s; see report note.
bool reciprocal_check(const ChainResult& generic_chain);

}  // namespace eisenlab::intertwine

#endif
