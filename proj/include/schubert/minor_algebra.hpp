#pragma once

// Minors of the generic matrix of the affine patch around e^v, the four
// term-order families under which their initial terms are the monomials of
// the distinguished sets, and exact checks of the Groebner-basis claims.
//
// The generic matrix has n rows and d columns (one per entry of v).  Row
// i is the unit row with a 1 in the column of i when i is an entry of v,
// and the variables X_(i,c), c in v, otherwise.  f_theta is the
// determinant of the rows theta_1 < ... < theta_d.

#include <optional>
#include <string>
#include <vector>

#include "schubert/grassmann.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Entries of the generic matrix: 0, 1 or a variable.
class GenericMatrix {
 public:
  explicit GenericMatrix(const GrassmannIndex& v);

  const VariableIndex& variables() const { return vars_; }
  int rows() const { return vars_.ambient().n(); }
  int cols() const { return vars_.ambient().d(); }
  /// 1-based row i, 0-based column j.  Throws on out-of-range positions.
  Polynomial entry(int i, int j) const;
  std::string str() const;

 private:
  VariableIndex vars_;
};

/// f_theta, computed by Laplace expansion along the rows of theta.
Polynomial minor(const GrassmannIndex& theta, const GrassmannIndex& v);

/// Families 1 and 2 compare homogeneous-lexicographically, 3 and 4
/// reverse-lexicographically, each over its own total order on variables.
/// Every N^v variable exceeds every other one.
class TermOrder {
 public:
  TermOrder(const GrassmannIndex& v, int family);

  int family() const { return family_; }
  /// a >_family b on variables.
  bool greater_variable(const Root& a, const Root& b) const;
  /// Variable positions from greatest to least.
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  /// Negative, zero or positive as a <, =, > b.
  int compare(const Exponents& a, const Exponents& b) const;

 private:
  int family_;
  std::vector<std::size_t> ranking_;
};

/// Throws InvalidInput for families other than 1..4.
void require_family(int family);

/// Greatest monomial of f under the order, coefficient ignored.  Throws
/// InvalidInput for the zero polynomial.
Exponents initial_term(const Polynomial& f, const TermOrder& order);

struct InitialTermViolation {
  GrassmannIndex theta;
  int family;
  RootMonomial expected;
  RootMonomial actual;
};

struct InitialTermReport {
  GrassmannIndex v;
  std::vector<int> families;
  std::size_t minors_checked = 0;
  std::vector<InitialTermViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Compares in(f_theta) with the monomial of the distinguished set of theta
/// for every theta >= v, restricted to theta not <= w when w is given.
InitialTermReport check_initial_terms(const GrassmannIndex& v, const std::optional<GrassmannIndex>& w,
                                      const std::vector<int>& families = {1, 2, 3, 4});

/// Some distinguished-set monomial of theta with v <= theta, theta not <= w
/// divides mu.  Requires v <= w.
bool monomial_ideal_member(const RootMonomial& mu, const GrassmannIndex& v, const GrassmannIndex& w);

/// Degree-m monomials in R^v outside the ideal generated by in(f_theta),
/// v <= theta, theta not <= w, with the initial terms taken under the
/// given family (computed from the minors, not from the distinguished sets).
BigInt count_initial_ideal_complement(const GrassmannIndex& v, const GrassmannIndex& w, int family, int m);

/// denominator * f_theta = sum of coefficient * f_mu over the listed
/// generators.  The solve runs over the rationals, so a common
/// denominator is carried instead of rational coefficients.
struct ReductionCertificate {
  GrassmannIndex theta;
  bool trivial = false;
  /// "trivial", "reduction_family" or "all_generators".
  std::string source;
  BigInt denominator = 1;
  std::vector<std::pair<GrassmannIndex, Polynomial>> terms;
};

/// The generators f_mu used to reduce f_theta: unions of k-1 of the first
/// a entries of v, the entries of v after position a, and a-k+1 entries of
/// theta from position k on, where theta_k > w_k is the first violation and
/// a is the last position with v_a <= w_k.
std::vector<GrassmannIndex> reduction_family(const GrassmannIndex& v, const GrassmannIndex& w,
                                             const GrassmannIndex& theta);

/// Writes f_theta (theta not <= w) as a combination of f_mu with
/// v <= mu, mu not <= w, by an exact rational solve in degree
/// v_degree(theta), and checks the identity.  Throws VerificationFailure
/// if no combination exists.
ReductionCertificate verify_generator_reduction(const GrassmannIndex& v, const GrassmannIndex& w,
                                                const GrassmannIndex& theta);

/// Recomputes the combination and compares it with f_theta.
bool check_certificate(const GrassmannIndex& v, const ReductionCertificate& cert);

}  // namespace schubert
