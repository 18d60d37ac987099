#ifndef REGEQ_ERRORS_HPP
#define REGEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regeq {

// Thrown when an exploration or decision procedure exceeds its resource cap.
// `reached()` reports how many units (states, pairs) had been discovered when
// the cap was hit.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace regeq

#endif  // REGEQ_ERRORS_HPP
