#include "schubert/full_bijection.hpp"

#include <algorithm>
#include <set>

#include "schubert/bijection.hpp"
#include "schubert/duality.hpp"
#include "schubert/hilbert.hpp"

namespace schubert {

StandardMonomial monomial_to_standard(const RootMonomial& mu) {
  const GrassmannIndex& v = mu.ambient();
  const StandardMonomial upper = pi_tilde(mu.positive_part());
  // R^v \ N^v mirrors onto N^{v*}.
  const StandardMonomial lower = mirror(pi_tilde(dual_monomial(mu.nonpositive_part())));
  std::vector<GrassmannIndex> seq(upper.indices().begin(), upper.indices().end());
  seq.insert(seq.end(), lower.indices().begin(), lower.indices().end());
  return StandardMonomial(v.d(), v.n(), std::move(seq));
}

RootMonomial standard_to_monomial(const StandardMonomial& s, const GrassmannIndex& v) {
  const SplitStandard parts = split(s, v);
  RootMonomial out = phi_tilde(parts.upper, v);
  const RootMonomial lower = dual_monomial(phi_tilde(mirror(parts.lower), dual_grassmann(v)));
  for (const auto& [r, k] : lower.terms()) out.add(r, k);
  return out;
}

BijectionReport full_bijection(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  if (!bruhat_leq(v, w)) throw InvalidInput("requires v <= w, got v = " + v.str() + ", w = " + w.str());
  const std::vector<RootMonomial> monomials = enumerate_dominated_monomials(v, w, m);
  const std::vector<StandardMonomial> standard = enumerate_standard(v, w, m);
  const std::set<StandardMonomial> target(standard.begin(), standard.end());

  BijectionReport report;
  report.monomials = monomials.size();
  report.standard = standard.size();
  std::set<StandardMonomial> image;
  for (const RootMonomial& mu : monomials) {
    const StandardMonomial s = monomial_to_standard(mu);
    if (s.degree(v) != m || !target.contains(s)) report.images_valid = false;
    if (!image.insert(s).second) report.injective = false;
    if (!(standard_to_monomial(s, v) == mu)) report.round_trip = false;
  }
  report.surjective = image == target;
  return report;
}

}  // namespace schubert
