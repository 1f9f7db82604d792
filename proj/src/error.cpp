#include "charpoly/error.hpp"

namespace charpoly {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::bad_params: return "BadParams";
    case ErrorKind::bad_rank: return "BadRank";
    case ErrorKind::bad_type: return "BadType";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::zero_row: return "ZeroRow";
    case ErrorKind::not_proper: return "NotProper";
    case ErrorKind::not_prime: return "NotPrime";
    case ErrorKind::not_embedded: return "NotEmbedded";
    case ErrorKind::prime_too_small: return "PrimeTooSmall";
    case ErrorKind::scale: return "ScaleError";
    case ErrorKind::surplus_mismatch: return "SurplusMismatch";
    case ErrorKind::verification_failure: return "VerificationFailure";
    case ErrorKind::rank_too_large: return "RankTooLarge";
    case ErrorKind::negative_coefficient: return "NegativeCoefficient";
  }
  return "Error";
}

}  // namespace charpoly
