#ifndef HYPVOL_ERRORS_HPP
#define HYPVOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypvol {

enum class ErrorCode {
  dimension_mismatch,
  invalid_point,
  invalid_isometry,
  degenerate_direction,
  degenerate_simplex,
  no_basepoint,
  unsupported_by_oracle,
  odd_dimension,
  non_manifold_star,
  equivariance_violation,
  validation_failed,
  covering_invalid,
  retry_exhausted,
  bad_input,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hypvol

#endif
