#pragma once

// Standard monomials theta_1 >= ... >= theta_t in I(d,n) and the sets
// SM^v_w(m) of v-compatible, w-dominated standard monomials of degree m.

#include <span>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/grassmann.hpp"

namespace schubert {

class StandardMonomial {
 public:
  /// The empty standard monomial in I(d,n).
  StandardMonomial(int d, int n) : d_(d), n_(n) {}
  /// Throws unless the sequence is Bruhat non-increasing and lies in I(d,n).
  StandardMonomial(int d, int n, std::vector<GrassmannIndex> indices);

  int d() const { return d_; }
  int n() const { return n_; }
  std::span<const GrassmannIndex> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const GrassmannIndex& front() const { return indices_.front(); }
  const GrassmannIndex& back() const { return indices_.back(); }

  /// Sum of v-degrees.
  int degree(const GrassmannIndex& v) const;

  std::string str() const;

  friend bool operator==(const StandardMonomial&, const StandardMonomial&) = default;
  friend auto operator<=>(const StandardMonomial& a, const StandardMonomial& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.indices_ <=> b.indices_;
  }

 private:
  int d_;
  int n_;
  std::vector<GrassmannIndex> indices_;
};

bool is_v_compatible(const StandardMonomial& s, const GrassmannIndex& v);
bool is_w_dominated(const StandardMonomial& s, const GrassmannIndex& w);
/// Empty, or theta_t > v.
bool is_anti_dominated(const StandardMonomial& s, const GrassmannIndex& v);

/// SM^v_w(m), each element listed once, deterministic order.  Requires v <= w.
std::vector<StandardMonomial> enumerate_standard(const GrassmannIndex& v, const GrassmannIndex& w, int m);
/// |SM^v_w(m)| by memoized counting over (last index, remaining degree).
BigInt count_standard(const GrassmannIndex& v, const GrassmannIndex& w, int m);

/// SM^{v,v}_w(m): every theta_i > v.
std::vector<StandardMonomial> enumerate_upper(const GrassmannIndex& v, const GrassmannIndex& w, int m);
BigInt count_upper(const GrassmannIndex& v, const GrassmannIndex& w, int m);
/// SM^v_v(m): every theta_i < v.
std::vector<StandardMonomial> enumerate_lower(const GrassmannIndex& v, int m);
BigInt count_lower(const GrassmannIndex& v, int m);

struct SplitStandard {
  StandardMonomial upper;
  StandardMonomial lower;
};

/// Splits a v-compatible standard monomial at the last theta_p > v.
SplitStandard split(const StandardMonomial& s, const GrassmannIndex& v);

/// theta_1 >= ... >= theta_t  |->  theta_t* >= ... >= theta_1*.
StandardMonomial mirror(const StandardMonomial& s);

}  // namespace schubert
