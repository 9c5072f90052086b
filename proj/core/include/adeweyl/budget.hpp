#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adeweyl {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Step counter shared by the enumeration routines.  Charging past the
// limit throws BudgetExceeded so unbounded sweeps fail with a clear
// diagnostic instead of running forever.  Safe to share across threads.
class Budget {
 public:
  explicit Budget(uint64_t max_steps) : limit_(max_steps) {}

  void charge(uint64_t steps = 1) const {
    uint64_t total = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
    if (total > limit_) {
      throw BudgetExceeded("enumeration budget exceeded: " +
                           std::to_string(total) + " steps requested, limit " +
                           std::to_string(limit_) +
                           " (raise --max-terms to allow larger sweeps)");
    }
  }

  uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  uint64_t limit() const { return limit_; }

 private:
  mutable std::atomic<uint64_t> used_{0};
  uint64_t limit_;
};

class CharacterCache;

// Optional knobs threaded through the computational entry points.
// A null cache means the process-wide character cache; a null budget
// means unlimited enumeration.
struct ComputeOptions {
  CharacterCache* cache = nullptr;
  const Budget* budget = nullptr;
};

inline void charge_budget(const ComputeOptions& opts, uint64_t steps = 1) {
  if (opts.budget != nullptr) opts.budget->charge(steps);
}

}  // namespace adeweyl
