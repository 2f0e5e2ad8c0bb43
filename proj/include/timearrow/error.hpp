#pragma once

#include <stdexcept>
#include <string>

namespace timearrow {

/// Failure modes of the public operations, one code per documented error.
enum class errc {
  pole_in_disk,
  empty_numerator,
  zero_alpha,
  empty_channels,
  negative_density,
  truncation_too_short,
  lag_unavailable,
  window_exceeds_lags,
  degenerate_gamma0,
  empty_labels,
  lag_too_large,
  window_exceeds_path,
  invalid_argument,
};

const char* to_string(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace timearrow
