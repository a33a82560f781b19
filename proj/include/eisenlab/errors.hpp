#ifndef EISENLAB_ERRORS_HPP
#define EISENLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eisenlab {

struct Error : std::runtime_error {
  enum class Kind {
    pole,
    nonfinite,
    step_too_coarse,
    monotonicity_violation,
    no_sign_change,
    adjustment_exhausted,
    too_close_to_pole,
    degenerate_exponent,
    extrapolation_unstable,
    mismatch,
    format,
    usage,
  };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

}  // namespace eisenlab

#endif
