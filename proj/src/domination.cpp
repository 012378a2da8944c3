#include "schubert/domination.hpp"

#include <algorithm>
#include <bit>

#include "schubert/budget.hpp"

namespace schubert {

namespace {

int highest_bit(std::uint64_t x) { return 63 - std::countl_zero(x); }

}  // namespace

bool dominates_chain_matching(const GrassmannIndex& w, const GrassmannIndex& v, const VChain& chain) {
  if (!(chain.ambient() == v)) throw InvalidInput("chain belongs to a different ambient index");
  const DistinguishedSet dist = distinguished_of(w, v);
  const auto ds = dist.elements();
  const Root* prev = nullptr;
  for (const Root& beta : chain.elements()) {
    // Covering elements of a distinguished set form a chain; take its head
    // among those still below the previous match.
    const Root* head = nullptr;
    for (const Root& alpha : ds) {
      if (alpha.col > beta.col || beta.row > alpha.row) continue;
      if (prev && !above(*prev, alpha)) continue;
      if (!head || alpha.row > head->row) head = &alpha;
    }
    if (!head) return false;
    prev = head;
  }
  return true;
}

DominationChecker::DominationChecker(GrassmannIndex v, GrassmannIndex w)
    : v_(std::move(v)), w_(std::move(w)), positive_(positive_roots(v_)), distinguished_(distinguished_of(w_, v_)) {
  if (positive_.size() > 64) throw InvalidInput("too many positive roots for a 64-bit mask");
  const auto ds = distinguished_.elements();
  const std::size_t k = positive_.size();
  cover_.assign(k, 0);
  above_.assign(k, 0);
  below_.assign(ds.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < ds.size(); ++t)
      if (ds[t].col <= positive_[i].col && positive_[i].row <= ds[t].row) cover_[i] |= std::uint64_t{1} << t;
    for (std::size_t j = 0; j < k; ++j)
      if (above(positive_[j], positive_[i])) above_[i] |= std::uint64_t{1} << j;
  }
  for (std::size_t t = 0; t < ds.size(); ++t)
    for (std::size_t s = 0; s < ds.size(); ++s)
      if (above(ds[t], ds[s])) below_[t] |= std::uint64_t{1} << s;
  order_.resize(k);
  for (std::size_t i = 0; i < k; ++i) order_[i] = static_cast<int>(i);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return positive_[a].row > positive_[b].row; });
}

bool DominationChecker::dominates_mask(std::uint64_t mask) const {
  budget::tick();
  // states[i]: the greedy last match over all chains in the set ending at i.
  std::uint64_t states[64];
  for (int i : order_) {
    if (!((mask >> i) & 1U)) continue;
    const std::uint64_t cov = cover_[i];
    if (cov == 0) return false;
    std::uint64_t st = std::uint64_t{1} << highest_bit(cov);
    std::uint64_t preds = above_[i] & mask;
    while (preds) {
      const int j = std::countr_zero(preds);
      preds &= preds - 1;
      std::uint64_t prev = states[j];
      while (prev) {
        const int a = std::countr_zero(prev);
        prev &= prev - 1;
        const std::uint64_t cand = cov & below_[a];
        if (cand == 0) return false;
        st |= std::uint64_t{1} << highest_bit(cand);
      }
    }
    states[i] = st;
  }
  return true;
}

bool DominationChecker::operator()(std::span<const Root> s) const {
  std::uint64_t mask = 0;
  for (const Root& r : s) {
    if (!is_root_of(r, v_)) throw InvalidInput(r.str() + " is not a root of " + v_.str());
    if (!r.positive()) continue;
    const auto it = std::lower_bound(positive_.begin(), positive_.end(), r);
    mask |= std::uint64_t{1} << (it - positive_.begin());
  }
  return dominates_mask(mask);
}

bool dominates_set(const GrassmannIndex& w, const GrassmannIndex& v, std::span<const Root> s) {
  return DominationChecker(v, w)(s);
}

bool dominates_monomial(const GrassmannIndex& w, const GrassmannIndex& v, const RootMonomial& m) {
  if (!(m.ambient() == v)) throw InvalidInput("monomial belongs to a different ambient index");
  return dominates_set(w, v, m.support());
}

}  // namespace schubert
