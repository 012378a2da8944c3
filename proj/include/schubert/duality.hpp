#pragma once

// The mirror x* = n - x + 1 and its action on index sets, roots and
// monomials.  All maps are involutions; on I(d,n) the mirror reverses
// the Bruhat order.

#include "schubert/grassmann.hpp"

namespace schubert {

int dual_index(int x, int n);
GrassmannIndex dual_grassmann(const GrassmannIndex& v);
/// (r, c) |-> (r*, c*).  Sends N^{v*} onto R^v \ N^v and R^v onto R^{v*}.
Root dual_root(const Root& r, int n);
/// Mirrors every root of m into the monomial over dual_grassmann(v).
RootMonomial dual_monomial(const RootMonomial& m);

}  // namespace schubert
