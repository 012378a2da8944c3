#pragma once

// Hilbert function and multiplicity of the tangent cone at e^v of the
// Schubert variety X_w, through w-dominated monomials in R^v.

#include <cstdint>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/grassmann.hpp"

namespace schubert {

/// The maximal square-free w-dominated subsets A_1..A_k of R^v, each
/// sorted by (row, col), the family sorted lexicographically.
struct DominatedFaceFamily {
  GrassmannIndex v;
  GrassmannIndex w;
  std::vector<std::vector<Root>> faces;

  std::vector<int> cardinalities() const;
};

/// Every w-dominated subset of N^v, as bitmasks over positive_roots(v),
/// in depth-first order.  Includes the empty set.
std::vector<std::uint64_t> dominated_positive_subsets(const GrassmannIndex& v, const GrassmannIndex& w);

/// |S^v_w(m)|, summing over dominated square-free supports.
BigInt hilbert_direct(const GrassmannIndex& v, const GrassmannIndex& w, int m);
/// h(0..max_m) in one pass over the dominated supports.
std::vector<BigInt> hilbert_direct_series(const GrassmannIndex& v, const GrassmannIndex& w, int max_m);

/// S^v_w(m) listed explicitly, sorted.
std::vector<RootMonomial> enumerate_dominated_monomials(const GrassmannIndex& v, const GrassmannIndex& w, int m);

/// Maximal faces of the complex of dominated square-free sets, by a
/// pruned include/exclude search.  Throws VerificationFailure if the
/// maximal faces do not all have the same cardinality.
DominatedFaceFamily maximal_dominated(const GrassmannIndex& v, const GrassmannIndex& w);

/// Alternating sum over intersections of the maximal faces.
BigInt hilbert_inclusion_exclusion(const DominatedFaceFamily& family, int m);
BigInt hilbert_inclusion_exclusion(const GrassmannIndex& v, const GrassmannIndex& w, int m);
std::vector<BigInt> hilbert_inclusion_exclusion_series(const DominatedFaceFamily& family, int max_m);

/// Number of maximal faces of maximum cardinality.
std::size_t max_cardinality_count(const DominatedFaceFamily& family);
/// Multiplicity of the tangent cone: the number of maximal faces.
std::size_t multiplicity(const GrassmannIndex& v, const GrassmannIndex& w);

}  // namespace schubert
