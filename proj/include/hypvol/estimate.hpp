#ifndef HYPVOL_ESTIMATE_HPP
#define HYPVOL_ESTIMATE_HPP

#include <cmath>
#include <cstdint>

#include "hypvol/errors.hpp"

namespace hypvol {

// Uncertainty-carrying scalar. `exact` estimates have stderr 0 and come from
// closed-form paths; Monte Carlo estimates carry a binomial/sample stderr.
struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  bool exact = false;

  static Estimate exactly(double v) { return Estimate{v, 0.0, 0, true}; }
  static Estimate measured(double v, double se, long n) { return Estimate{v, se, n, false}; }
};

// Angle fraction in [0,1].
struct AngleEstimate : Estimate {
  AngleEstimate() = default;
  AngleEstimate(const Estimate& e) : Estimate(e) {
    if (!(value >= -1e-12 && value <= 1.0 + 1e-12))
      fail(ErrorCode::bad_input, "angle fraction outside [0,1]");
    if (exact && stderr_ != 0.0) fail(ErrorCode::bad_input, "exact estimate with nonzero stderr");
    if (value < 0.0) value = 0.0;
    if (value > 1.0) value = 1.0;
  }
};

inline Estimate operator+(const Estimate& a, const Estimate& b) {
  return Estimate{a.value + b.value, std::hypot(a.stderr_, b.stderr_), a.samples + b.samples,
                  a.exact && b.exact};
}

inline Estimate operator-(const Estimate& a, const Estimate& b) {
  return Estimate{a.value - b.value, std::hypot(a.stderr_, b.stderr_), a.samples + b.samples,
                  a.exact && b.exact};
}

inline Estimate scale(const Estimate& a, double f) {
  return Estimate{f * a.value, std::fabs(f) * a.stderr_, a.samples, a.exact};
}

// |a - b| within 3 combined standard errors (plus a crumb of float slack so
// exact-vs-exact comparisons do not demand literal equality).
inline bool agrees_3sigma(const Estimate& a, const Estimate& b, double slack = 1e-9) {
  return std::fabs(a.value - b.value) <= 3.0 * std::hypot(a.stderr_, b.stderr_) + slack;
}

}  // namespace hypvol

#endif
