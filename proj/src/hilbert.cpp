#include "schubert/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "schubert/budget.hpp"
#include "schubert/domination.hpp"

namespace schubert {

namespace {

void require_leq(const GrassmannIndex& v, const GrassmannIndex& w) {
  if (!bruhat_leq(v, w)) throw InvalidInput("requires v <= w, got v = " + v.str() + ", w = " + w.str());
}

// Monomials of degree m whose support is exactly a fixed s-element set.
BigInt exact_support_count(int s, int m) {
  if (s == 0) return m == 0 ? 1 : 0;
  if (m < s) return 0;
  return binomial(m - 1, s - 1);
}

void collect_faces(const DominationChecker& dom, int next, std::uint64_t current, std::vector<std::uint64_t>& out) {
  out.push_back(current);
  const int k = static_cast<int>(dom.positive().size());
  for (int i = next; i < k; ++i) {
    const std::uint64_t grown = current | (std::uint64_t{1} << i);
    if (dom.dominates_mask(grown)) collect_faces(dom, i + 1, grown, out);
  }
}

class MaximalFaceSearch {
 public:
  explicit MaximalFaceSearch(const DominationChecker& dom) : dom_(dom) {}

  std::vector<std::uint64_t> run() {
    const int k = static_cast<int>(dom_.positive().size());
    const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    search(0, all, 0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  // current: chosen, open: undecided, closed: excluded elements that a
  // maximal result must be unable to absorb.
  void search(std::uint64_t current, std::uint64_t open, std::uint64_t closed) {
    budget::tick();
    const std::uint64_t reach = current | open;
    for (std::uint64_t x = closed; x; x &= x - 1)
      if (dom_.dominates_mask(reach | (x & -x))) return;
    if (dom_.dominates_mask(reach)) {
      found_.push_back(reach);
      return;
    }
    const std::uint64_t bit = open & -open;
    const std::uint64_t rest = open & ~bit;
    if (dom_.dominates_mask(current | bit)) search(current | bit, rest, closed);
    search(current, rest, closed | bit);
  }

  const DominationChecker& dom_;
  std::vector<std::uint64_t> found_;
};

std::vector<Root> face_roots(const DominationChecker& dom, std::uint64_t mask, const std::vector<Root>& nonpositive) {
  std::vector<Root> out = nonpositive;
  for (std::uint64_t x = mask; x; x &= x - 1) out.push_back(dom.positive()[std::countr_zero(x)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> DominatedFaceFamily::cardinalities() const {
  std::vector<int> out;
  for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
  return out;
}

std::vector<std::uint64_t> dominated_positive_subsets(const GrassmannIndex& v, const GrassmannIndex& w) {
  require_leq(v, w);
  const DominationChecker dom(v, w);
  std::vector<std::uint64_t> out;
  collect_faces(dom, 0, 0, out);
  return out;
}

std::vector<BigInt> hilbert_direct_series(const GrassmannIndex& v, const GrassmannIndex& w, int max_m) {
  require_leq(v, w);
  if (max_m < 0) throw InvalidInput("degree must be non-negative");
  const int nonpositive = static_cast<int>(nonpositive_roots(v).size());
  // Faces of the full complex are (dominated positive set) x (any subset of
  // the non-positive roots); tally them by size.
  std::vector<BigInt> by_size(positive_roots(v).size() + nonpositive + 1, 0);
  for (std::uint64_t mask : dominated_positive_subsets(v, w)) {
    const int s = std::popcount(mask);
    for (int q = 0; q <= nonpositive; ++q) by_size[s + q] += binomial(nonpositive, q);
  }
  std::vector<BigInt> out;
  for (int m = 0; m <= max_m; ++m) {
    BigInt total = 0;
    for (std::size_t s = 0; s < by_size.size(); ++s)
      if (by_size[s] != 0) total += by_size[s] * exact_support_count(static_cast<int>(s), m);
    out.push_back(total);
  }
  return out;
}

BigInt hilbert_direct(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  return hilbert_direct_series(v, w, m).back();
}

std::vector<RootMonomial> enumerate_dominated_monomials(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  require_leq(v, w);
  if (m < 0) throw InvalidInput("degree must be non-negative");
  const DominationChecker dom(v, w);
  const std::vector<Root> all = roots(v);
  const std::vector<Root>& pos = dom.positive();
  std::vector<RootMonomial> out;
  std::vector<int> exps(all.size(), 0);

  auto positive_mask = [&] {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (exps[i] > 0 && all[i].positive()) {
        const auto it = std::lower_bound(pos.begin(), pos.end(), all[i]);
        mask |= std::uint64_t{1} << (it - pos.begin());
      }
    return mask;
  };

  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    budget::tick();
    if (i == all.size()) {
      if (remaining != 0) return;
      std::map<Root, int> terms;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (exps[j] > 0) terms[all[j]] = exps[j];
      out.emplace_back(v, terms);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[i] = e;
      if (e > 0 && all[i].positive() && !dom.dominates_mask(positive_mask())) break;
      self(self, i + 1, remaining - e);
    }
    exps[i] = 0;
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

DominatedFaceFamily maximal_dominated(const GrassmannIndex& v, const GrassmannIndex& w) {
  require_leq(v, w);
  const DominationChecker dom(v, w);
  const std::vector<Root> nonpositive = nonpositive_roots(v);
  DominatedFaceFamily family{v, w, {}};
  for (std::uint64_t mask : MaximalFaceSearch(dom).run()) family.faces.push_back(face_roots(dom, mask, nonpositive));
  std::sort(family.faces.begin(), family.faces.end());
  const std::vector<int> sizes = family.cardinalities();
  if (!sizes.empty() && std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
    throw VerificationFailure("maximal dominated sets of unequal cardinality for v = " + v.str() + ", w = " + w.str());
  return family;
}

std::vector<BigInt> hilbert_inclusion_exclusion_series(const DominatedFaceFamily& family, int max_m) {
  if (max_m < 0) throw InvalidInput("degree must be non-negative");
  // Signed multiplicity of each intersection A_{i_1} n ... n A_{i_j},
  // accumulated one face at a time; sizes are what the formula needs.
  std::map<std::vector<Root>, BigInt> terms;
  for (const auto& face : family.faces) {
    budget::tick(terms.size() + 1);
    std::map<std::vector<Root>, BigInt> next = terms;
    for (const auto& [inter, coef] : terms) {
      std::vector<Root> meet;
      std::set_intersection(inter.begin(), inter.end(), face.begin(), face.end(), std::back_inserter(meet));
      next[meet] -= coef;
    }
    next[face] += 1;
    terms.clear();
    for (auto& [k, c] : next)
      if (c != 0) terms.emplace(k, std::move(c));
  }
  std::vector<BigInt> out;
  for (int m = 0; m <= max_m; ++m) {
    BigInt total = 0;
    for (const auto& [inter, coef] : terms) total += coef * monomial_count(static_cast<long long>(inter.size()), m);
    out.push_back(total);
  }
  return out;
}

BigInt hilbert_inclusion_exclusion(const DominatedFaceFamily& family, int m) {
  return hilbert_inclusion_exclusion_series(family, m).back();
}

BigInt hilbert_inclusion_exclusion(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  return hilbert_inclusion_exclusion(maximal_dominated(v, w), m);
}

std::size_t max_cardinality_count(const DominatedFaceFamily& family) {
  std::size_t best = 0;
  std::size_t count = 0;
  for (const auto& f : family.faces) {
    if (f.size() > best) {
      best = f.size();
      count = 0;
    }
    if (f.size() == best) ++count;
  }
  return count;
}

std::size_t multiplicity(const GrassmannIndex& v, const GrassmannIndex& w) {
  return maximal_dominated(v, w).faces.size();
}

}  // namespace schubert
