#pragma once

// Domination of v-chains and monomials via matching against the
// distinguished set of w: w dominates beta_1 > ... > beta_t iff the
// distinguished set contains a chain alpha_1 > ... > alpha_t with
// alpha_j = (R_j, C_j), C_j <= c_j and r_j <= R_j.

#include <cstdint>
#include <span>
#include <vector>

#include "schubert/grassmann.hpp"

namespace schubert {

/// Chain domination by greedy matching.  Agrees with dominates_chain.
bool dominates_chain_matching(const GrassmannIndex& w, const GrassmannIndex& v,
                              const VChain& chain);

/// True iff w dominates every v-chain in the monomial.  Multiplicities
/// and roots outside N^v are ignored.  Requires v <= w.
bool dominates_monomial(const GrassmannIndex& w, const GrassmannIndex& v, const RootMonomial& m);

/// Same, for a plain set of roots of v.
bool dominates_set(const GrassmannIndex& w, const GrassmannIndex& v, std::span<const Root> s);

/// Precomputed domination test for a fixed pair v <= w.  Sets are given
/// either as root lists or as bitmasks over positive_roots(v).
class DominationChecker {
 public:
  DominationChecker(GrassmannIndex v, GrassmannIndex w);

  const GrassmannIndex& v() const { return v_; }
  const GrassmannIndex& w() const { return w_; }
  const std::vector<Root>& positive() const { return positive_; }
  const DistinguishedSet& distinguished() const { return distinguished_; }

  bool operator()(std::span<const Root> s) const;
  bool dominates_mask(std::uint64_t mask) const;

 private:
  GrassmannIndex v_;
  GrassmannIndex w_;
  std::vector<Root> positive_;
  DistinguishedSet distinguished_;
  // cover_[i]: bitmask over distinguished elements (t) with
  // C_t <= c_i and r_i <= R_t.
  std::vector<std::uint64_t> cover_;
  // below_[t]: distinguished elements strictly below element t.
  std::vector<std::uint64_t> below_;
  // above_[i]: positive roots strictly above positive root i.
  std::vector<std::uint64_t> above_;
  // Positive-root indices sorted by row descending.
  std::vector<int> order_;
};

}  // namespace schubert
