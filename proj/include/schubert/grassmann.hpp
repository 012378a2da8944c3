#pragma once

// Ground types for the Grassmannian I(d,n): index sets, roots, root
// monomials, v-chains and distinguished sets.
//
// All values are validated on construction and immutable afterwards.
// Row/column/entry values are 1-based, as in the usual notation.

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

/// Raised for malformed or out-of-contract inputs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two computations of the same quantity disagree.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMaxN = 63;

/// A strictly increasing d-tuple drawn from {1..n}.
class GrassmannIndex {
 public:
  GrassmannIndex(int n, std::vector<int> entries);

  /// Parses "1,2,4" (whitespace tolerated).
  static GrassmannIndex parse(int n, const std::string& text);
  /// (1, 2, ..., d), the Bruhat-least element.
  static GrassmannIndex least(int d, int n);
  /// (n-d+1, ..., n), the Bruhat-greatest element.
  static GrassmannIndex greatest(int d, int n);

  int d() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  bool contains(int x) const { return x >= 1 && x <= n_ && ((mask_ >> x) & 1U); }
  /// Bit x is set iff x is an entry.
  std::uint64_t mask() const { return mask_; }

  /// Elements of {1..n} that are not entries, ascending.
  std::vector<int> complement() const;

  std::string str() const;

  friend bool operator==(const GrassmannIndex& a, const GrassmannIndex& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  /// Lexicographic on (n, entries); a total order for containers, not Bruhat.
  friend std::strong_ordering operator<=>(const GrassmannIndex& a, const GrassmannIndex& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_;
  std::vector<int> entries_;
  std::uint64_t mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GrassmannIndex& v);

/// All of I(d,n) in lexicographic order.
std::vector<GrassmannIndex> all_indices(int d, int n);

/// An ordered pair (row, col); relative to an ambient v the row is a
/// non-entry and the column an entry.
struct Root {
  int row = 0;
  int col = 0;

  bool positive() const { return row > col; }
  std::string str() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::ostream& operator<<(std::ostream& os, const Root& r);

/// The strict order on N^v: a > b iff a.row > b.row and a.col < b.col.
inline bool above(const Root& a, const Root& b) { return a.row > b.row && a.col < b.col; }
inline bool comparable(const Root& a, const Root& b) { return above(a, b) || above(b, a); }

bool is_root_of(const Root& r, const GrassmannIndex& v);

/// R^v sorted by (row, col).
std::vector<Root> roots(const GrassmannIndex& v);
/// N^v, the roots with row > col.
std::vector<Root> positive_roots(const GrassmannIndex& v);
/// R^v \ N^v.
std::vector<Root> nonpositive_roots(const GrassmannIndex& v);

/// A multiset of roots of a fixed v.  Keys are kept sorted by (row, col).
class RootMonomial {
 public:
  explicit RootMonomial(GrassmannIndex v) : v_(std::move(v)) {}
  RootMonomial(GrassmannIndex v, std::span<const Root> elements);
  RootMonomial(GrassmannIndex v, const std::map<Root, int>& terms);

  const GrassmannIndex& ambient() const { return v_; }
  const std::map<Root, int>& terms() const { return terms_; }

  void add(const Root& r, int times = 1);
  int multiplicity(const Root& r) const;
  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }
  bool square_free() const;
  /// The underlying set, sorted.
  std::vector<Root> support() const;
  /// Elements repeated by multiplicity, sorted.
  std::vector<Root> elements() const;

  /// The part supported on N^v, and the part on R^v \ N^v.
  RootMonomial positive_part() const;
  RootMonomial nonpositive_part() const;

  std::string str() const;

  friend bool operator==(const RootMonomial& a, const RootMonomial& b) {
    return a.v_ == b.v_ && a.terms_ == b.terms_;
  }
  friend auto operator<=>(const RootMonomial& a, const RootMonomial& b) {
    if (auto c = a.v_ <=> b.v_; c != 0) return c;
    return a.terms_ <=> b.terms_;
  }

 private:
  GrassmannIndex v_;
  std::map<Root, int> terms_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RootMonomial& m);

/// A strictly decreasing sequence beta_1 > ... > beta_t in N^v.
class VChain {
 public:
  VChain(GrassmannIndex v, std::vector<Root> elements);

  const GrassmannIndex& ambient() const { return v_; }
  std::span<const Root> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

 private:
  GrassmannIndex v_;
  std::vector<Root> elements_;
};

/// A subset of N^v satisfying (A) (distinct rows, distinct columns) and
/// (B*) (for (r,c),(R,C) with r < R: C < c or r < C).  Sorted by row.
class DistinguishedSet {
 public:
  DistinguishedSet(GrassmannIndex v, std::vector<Root> elements);

  const GrassmannIndex& ambient() const { return v_; }
  std::span<const Root> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

 private:
  GrassmannIndex v_;
  std::vector<Root> elements_;
};

bool satisfies_condition_a(std::span<const Root> s);
bool satisfies_condition_b(std::span<const Root> s);

// --- primitive predicates -------------------------------------------------

/// Componentwise comparison u_i <= y_i.
bool bruhat_leq(const GrassmannIndex& u, const GrassmannIndex& y);
inline bool bruhat_comparable(const GrassmannIndex& u, const GrassmannIndex& y) {
  return bruhat_leq(u, y) || bruhat_leq(y, u);
}

/// |theta \ v|.
int v_degree(const GrassmannIndex& theta, const GrassmannIndex& v);

/// (v \ {c_i}) u {r_i}, sorted.
GrassmannIndex apply_chain(const GrassmannIndex& v, const VChain& chain);

/// w >= apply_chain(v, chain).  Requires v <= w.
bool dominates_chain(const GrassmannIndex& w, const GrassmannIndex& v, const VChain& chain);

/// The distinguished subset of N^v attached to w >= v.
DistinguishedSet distinguished_of(const GrassmannIndex& w, const GrassmannIndex& v);

/// (v \ columns(S)) u rows(S).  S must satisfy condition (A).
GrassmannIndex index_of_distinguished(std::span<const Root> s, const GrassmannIndex& v);

/// Length of the longest chain inside s having beta as its tail.
int depth(const Root& beta, std::span<const Root> s);

/// Depth data for a subset of N^v.  layers[j-1] holds the j-deep elements,
/// strata[j-1] those of depth exactly j.  Both sorted by (row, col).
struct DepthLayers {
  std::vector<std::vector<Root>> layers;
  std::vector<std::vector<Root>> strata;

  int max_depth() const { return static_cast<int>(strata.size()); }
};

DepthLayers depth_layers(std::span<const Root> s);

/// Depth of every element of s, in the order of s.
std::vector<int> depths(std::span<const Root> s);

}  // namespace schubert
