#include "schubert/budget.hpp"

#include <cstdlib>
#include <string>

#include "schubert/grassmann.hpp"

namespace schubert::budget {

namespace {

thread_local std::optional<std::uint64_t> t_limit;
thread_local std::uint64_t t_used = 0;

}  // namespace

void tick(std::uint64_t units) {
  t_used += units;
  if (t_limit && t_used > *t_limit)
    throw BudgetExceeded("budget exceeded: more than " + std::to_string(*t_limit) + " work units");
}

std::optional<std::uint64_t> from_environment() {
  const char* raw = std::getenv("SCHUBERT_NODE_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("SCHUBERT_NODE_BUDGET must be a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw InvalidInput("SCHUBERT_NODE_BUDGET out of range: '" + text + "'");
  }
}

ScopedBudget::ScopedBudget(std::optional<std::uint64_t> limit) : saved_limit_(t_limit), saved_used_(t_used) {
  t_limit = limit;
  t_used = 0;
}

ScopedBudget::~ScopedBudget() {
  t_limit = saved_limit_;
  t_used = saved_used_;
}

std::uint64_t ScopedBudget::used() const { return t_used; }

}  // namespace schubert::budget
