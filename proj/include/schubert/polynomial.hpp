#pragma once

// Sparse polynomials with integer coefficients in the variables X_beta,
// beta in R^v.

#include <map>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/grassmann.hpp"

namespace schubert {

/// Fixes the numbering of the variables: position i is roots(v)[i].
class VariableIndex {
 public:
  explicit VariableIndex(const GrassmannIndex& v);

  const GrassmannIndex& ambient() const { return v_; }
  std::size_t size() const { return vars_.size(); }
  const Root& root(std::size_t i) const { return vars_[i]; }
  const std::vector<Root>& roots() const { return vars_; }
  /// Throws InvalidInput for a pair outside R^v.
  std::size_t index_of(const Root& r) const;

 private:
  GrassmannIndex v_;
  std::vector<Root> vars_;
};

using Exponents = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, BigInt c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(Exponents e, BigInt c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const BigInt& c);
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  std::string str(const VariableIndex& vars) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_;
  std::map<Exponents, BigInt> terms_;
};

int total_degree(const Exponents& e);
/// a divides b.
bool divides(const Exponents& a, const Exponents& b);

/// Every exponent vector of total degree m supported on the listed
/// variable positions, in lexicographic order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& allowed, int m);

Exponents to_exponents(const VariableIndex& vars, const RootMonomial& m);
RootMonomial to_root_monomial(const VariableIndex& vars, const Exponents& e);

}  // namespace schubert
