#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charpoly {

enum class ErrorKind {
  bad_params,
  bad_rank,
  bad_type,
  dimension_mismatch,
  zero_row,
  not_proper,
  not_prime,
  not_embedded,
  prime_too_small,
  scale,
  surplus_mismatch,
  verification_failure,
  rank_too_large,
  negative_coefficient,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace charpoly
