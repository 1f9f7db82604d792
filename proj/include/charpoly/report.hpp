#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charpoly/polynomial.hpp"

namespace charpoly {

/// One evaluated identity; lhs and rhs are the two independently computed
/// sides, rendered as text (integers in decimal, polynomials in t).
struct Check {
  std::string instance;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string instance, const Integer& lhs, const Integer& rhs) {
    checks.push_back(Check{std::move(instance), lhs.get_str(), rhs.get_str(), lhs == rhs});
  }

  void add(std::string instance, std::string lhs, std::string rhs, bool ok) {
    checks.push_back(Check{std::move(instance), std::move(lhs), std::move(rhs), ok});
  }

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

}  // namespace charpoly
