#pragma once

// Optional cap on enumeration work.  Kernels call budget::tick() once per
// unit of work; when a ScopedBudget is active on the calling thread and its
// limit is exhausted, BudgetExceeded is thrown.  Without an active scope
// tick() is a counter increment and never throws.

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace schubert {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace budget {

void tick(std::uint64_t units = 1);

/// Reads SCHUBERT_NODE_BUDGET; nullopt when unset.  Throws InvalidInput
/// on a malformed value.
std::optional<std::uint64_t> from_environment();

class ScopedBudget {
 public:
  explicit ScopedBudget(std::optional<std::uint64_t> limit);
  ~ScopedBudget();
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

  std::uint64_t used() const;

 private:
  std::optional<std::uint64_t> saved_limit_;
  std::uint64_t saved_used_;
};

}  // namespace budget
}  // namespace schubert
