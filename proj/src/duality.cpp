#include "schubert/duality.hpp"

#include <algorithm>

namespace schubert {

int dual_index(int x, int n) {
  if (x < 1 || x > n) throw InvalidInput("index " + std::to_string(x) + " outside 1.." + std::to_string(n));
  return n - x + 1;
}

GrassmannIndex dual_grassmann(const GrassmannIndex& v) {
  std::vector<int> xs;
  xs.reserve(v.d());
  for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) xs.push_back(dual_index(*it, v.n()));
  return GrassmannIndex(v.n(), std::move(xs));
}

Root dual_root(const Root& r, int n) { return {dual_index(r.row, n), dual_index(r.col, n)}; }

RootMonomial dual_monomial(const RootMonomial& m) {
  RootMonomial out(dual_grassmann(m.ambient()));
  for (const auto& [r, k] : m.terms()) out.add(dual_root(r, m.ambient().n()), k);
  return out;
}

}  // namespace schubert
