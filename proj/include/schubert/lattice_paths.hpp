#pragma once

// Non-intersecting lattice paths in the grid of N^v.
//
// Rows of the grid are the non-entries of v, columns its entries, both
// ascending; grid points are the (r, c) with r > c.  A step moves to the
// next row or the next column of the grid (not necessarily r+1 / c+1 as
// integers).  Each element beta of the distinguished set of w gets one
// path from beta_start to beta_finish, and the tuples of pairwise
// vertex-disjoint paths correspond to the maximal square-free w-dominated
// monomials in N^v.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/grassmann.hpp"
#include "schubert/hilbert.hpp"

namespace schubert {

class PathGrid {
 public:
  explicit PathGrid(GrassmannIndex v);

  const GrassmannIndex& v() const { return v_; }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }

  bool contains(const Root& p) const;
  int row_rank(int r) const;
  int col_rank(int c) const;
  /// Next grid point down a row / across a column, if it is in N^v.
  std::optional<Root> row_step(const Root& p) const;
  std::optional<Root> col_step(const Root& p) const;
  bool is_step(const Root& from, const Root& to) const;

 private:
  GrassmannIndex v_;
  std::vector<int> rows_;
  std::vector<int> cols_;
};

struct LatticePath {
  Root start;
  Root finish;
  std::vector<Root> vertices;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

/// One path per element of the distinguished set of w, ordered by row.
using PathTuple = std::vector<LatticePath>;

/// (beta_start, beta_finish) = ((a, C), (R, B)) with a the least non-entry
/// of v above C and B the greatest entry of v below R.
std::pair<Root, Root> endpoints(const Root& beta, const GrassmannIndex& v);

/// Every monotone grid path between two points, in lexicographic order of
/// vertex sequences.
std::vector<std::vector<Root>> grid_paths(const PathGrid& grid, const Root& from, const Root& to);

/// All tuples of pairwise vertex-disjoint paths, in lexicographic order.
std::vector<PathTuple> enumerate_tuples(const GrassmannIndex& v, const GrassmannIndex& w);

/// Union of the paths as a square-free monomial in N^v.
RootMonomial tuple_to_monomial(const GrassmannIndex& v, const PathTuple& tuple);
/// Reads each block of a maximal square-free w-dominated monomial as a
/// path.  Throws InvalidInput if m is not of that form.
PathTuple monomial_to_tuple(const GrassmannIndex& v, const GrassmannIndex& w, const RootMonomial& m);

/// Maximal dominated faces of R^v built from the path tuples.
DominatedFaceFamily maximal_dominated_via_paths(const GrassmannIndex& v, const GrassmannIndex& w);

/// True when every path region of (v, w) uses integer-consecutive rows and
/// columns, so unit steps and grid steps coincide.
bool unit_steps_agree(const GrassmannIndex& v, const GrassmannIndex& w);

// --- rendering ------------------------------------------------------------

enum class RenderFormat { ascii, svg };

inline constexpr const char* kAsciiFormatVersion = "schubert-paths-ascii/1";
inline constexpr const char* kSvgFormatVersion = "schubert-paths-svg/1";

RenderFormat parse_render_format(const std::string& name);

/// The grid with path vertices and distinguished elements marked.
std::string render(const GrassmannIndex& v, const GrassmannIndex& w, const PathTuple& tuple, RenderFormat format);
/// All tuples as consecutive panels (one sheet).
std::string render_sheet(const GrassmannIndex& v, const GrassmannIndex& w, const std::vector<PathTuple>& tuples,
                         RenderFormat format);

}  // namespace schubert
