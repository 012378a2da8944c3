#pragma once

// The degree preserving bijection S^v_w(m) <-> SM^v_w(m).  A monomial in
// R^v splits into its N^v part, sent through pi_tilde, and its remaining
// part, mirrored into N^{v*}, sent through pi_tilde for v* and mirrored
// back.  The two standard monomials concatenate at the split point.

#include <cstddef>

#include "schubert/grassmann.hpp"
#include "schubert/standard_monomial.hpp"

namespace schubert {

/// Monomial in R^v  ->  v-compatible standard monomial of the same degree.
StandardMonomial monomial_to_standard(const RootMonomial& mu);
/// Inverse of monomial_to_standard.  Requires s v-compatible.
RootMonomial standard_to_monomial(const StandardMonomial& s, const GrassmannIndex& v);

struct BijectionReport {
  std::size_t monomials = 0;         // |S^v_w(m)|
  std::size_t standard = 0;          // |SM^v_w(m)|
  bool images_valid = true;          // every image is in SM^v_w(m)
  bool injective = true;
  bool surjective = true;
  bool round_trip = true;            // inverse o forward = id on S^v_w(m)

  bool ok() const { return images_valid && injective && surjective && round_trip && monomials == standard; }
};

/// Enumerates both sides for degree m and checks the pairing.  Requires v <= w.
BijectionReport full_bijection(const GrassmannIndex& v, const GrassmannIndex& w, int m);

}  // namespace schubert
