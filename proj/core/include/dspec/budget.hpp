#pragma once

#include <cstdint>
#include <string>

namespace dspec {

// Gate for the O(q^2) oracles.
struct Budget {
  std::uint64_t max_q = 8000;
  bool force = false;

  bool allows(std::uint64_t q) const { return force || q <= max_q; }
  // Throws BudgetExceeded unless allows(q).
  void require(std::uint64_t q, const std::string& what) const;
};

}  // namespace dspec
