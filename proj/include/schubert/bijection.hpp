#pragma once

// The maps between monomials in N^v and pairs (w, smaller monomial):
//
//   pi  : non-empty monomial  ->  (least dominating w, residual monomial)
//   phi : (w > v, w-dominated monomial)  ->  non-empty monomial
//
// pi cuts each depth stratum into blocks; phi regroups a monomial into
// pieces anchored at the distinguished set of w.  The two are mutually
// inverse.  Iterating them gives pi_tilde / phi_tilde, a degree preserving
// bijection between monomials in N^v and standard monomials anti-dominated
// by v.

#include <vector>

#include "schubert/grassmann.hpp"
#include "schubert/standard_monomial.hpp"

namespace schubert {

/// A block: roots arranged by non-decreasing (row, col), repeats kept.
struct Block {
  std::vector<Root> elements;

  /// (last row, first column).
  Root summary() const { return {elements.back().row, elements.front().col}; }
  /// {(r_1,c_2), (r_2,c_3), ..., (r_{p-1},c_p)}; empty for p = 1.
  std::vector<Root> residual() const;
};

struct BlockDecomposition {
  GrassmannIndex v;
  /// strata[j-1]: blocks of the depth-j stratum, left to right.
  std::vector<std::vector<Block>> strata;

  std::vector<Root> summaries() const;
  std::size_t block_count() const;
};

/// Requires a non-empty monomial supported on N^v.
BlockDecomposition block_decompose(const RootMonomial& m);

struct PiResult {
  GrassmannIndex w;
  RootMonomial residual;
};

PiResult pi(const RootMonomial& m);

/// A piece anchored at a distinguished element beta = (R, C).
struct Piece {
  Root anchor;
  std::vector<Root> elements;

  /// {(r_1,C), (r_2,c_1), ..., (r_p,c_{p-1}), (R,c_p)}; {beta} when empty.
  std::vector<Root> starred() const;
};

struct PieceDecomposition {
  GrassmannIndex v;
  GrassmannIndex w;
  /// strata[j-1]: one piece per depth-j element of the distinguished set
  /// of w, ordered by anchor.
  std::vector<std::vector<Piece>> strata;
};

/// Requires v <= w and t w-dominated, supported on N^v.
PieceDecomposition piece_decompose(const GrassmannIndex& w, const GrassmannIndex& v, const RootMonomial& t);
RootMonomial phi(const GrassmannIndex& w, const GrassmannIndex& v, const RootMonomial& t);

/// The Bruhat-least w dominating m (v itself for a monomial without
/// positive roots).  Only the N^v part of m matters.
GrassmannIndex least_dominating(const RootMonomial& m);

/// Iterated pi.  Requires support in N^v.
StandardMonomial pi_tilde(const RootMonomial& m);
/// Iterated phi.  Requires s v-compatible and anti-dominated by v.
RootMonomial phi_tilde(const StandardMonomial& s, const GrassmannIndex& v);

}  // namespace schubert
