#include "schubert/lattice_paths.hpp"

#include <algorithm>
#include <set>

#include "schubert/bijection.hpp"
#include "schubert/budget.hpp"

namespace schubert {

PathGrid::PathGrid(GrassmannIndex v) : v_(std::move(v)), rows_(v_.complement()) {
  cols_.assign(v_.entries().begin(), v_.entries().end());
}

bool PathGrid::contains(const Root& p) const {
  return p.row > p.col && std::binary_search(rows_.begin(), rows_.end(), p.row) &&
         std::binary_search(cols_.begin(), cols_.end(), p.col);
}

int PathGrid::row_rank(int r) const {
  const auto it = std::lower_bound(rows_.begin(), rows_.end(), r);
  if (it == rows_.end() || *it != r) throw InvalidInput(std::to_string(r) + " is not a grid row");
  return static_cast<int>(it - rows_.begin());
}

int PathGrid::col_rank(int c) const {
  const auto it = std::lower_bound(cols_.begin(), cols_.end(), c);
  if (it == cols_.end() || *it != c) throw InvalidInput(std::to_string(c) + " is not a grid column");
  return static_cast<int>(it - cols_.begin());
}

std::optional<Root> PathGrid::row_step(const Root& p) const {
  const std::size_t i = static_cast<std::size_t>(row_rank(p.row)) + 1;
  if (i >= rows_.size()) return std::nullopt;
  return Root{rows_[i], p.col};
}

std::optional<Root> PathGrid::col_step(const Root& p) const {
  const std::size_t i = static_cast<std::size_t>(col_rank(p.col)) + 1;
  if (i >= cols_.size() || cols_[i] > p.row) return std::nullopt;
  return Root{p.row, cols_[i]};
}

bool PathGrid::is_step(const Root& from, const Root& to) const {
  if (!contains(from) || !contains(to)) return false;
  return row_step(from) == std::optional<Root>(to) || col_step(from) == std::optional<Root>(to);
}

std::pair<Root, Root> endpoints(const Root& beta, const GrassmannIndex& v) {
  if (!is_root_of(beta, v) || !beta.positive()) throw InvalidInput(beta.str() + " is not in N^v for v = " + v.str());
  int a = -1;
  for (int x = beta.col + 1; x <= v.n() && a < 0; ++x)
    if (!v.contains(x)) a = x;
  int b = -1;
  for (int x = beta.row - 1; x >= 1 && b < 0; --x)
    if (v.contains(x)) b = x;
  if (a < 0 || b < 0) throw VerificationFailure("no endpoints for " + beta.str());
  return {{a, beta.col}, {beta.row, b}};
}

std::vector<std::vector<Root>> grid_paths(const PathGrid& grid, const Root& from, const Root& to) {
  std::vector<std::vector<Root>> out;
  if (!grid.contains(from) || !grid.contains(to)) return out;
  std::vector<Root> stack{from};
  auto rec = [&](auto&& self, const Root& p) -> void {
    budget::tick();
    if (p == to) {
      out.push_back(stack);
      return;
    }
    // A column step (r, c') sorts before a row step (r', c).
    if (p.col < to.col)
      if (auto q = grid.col_step(p)) {
        stack.push_back(*q);
        self(self, *q);
        stack.pop_back();
      }
    if (p.row < to.row)
      if (auto q = grid.row_step(p)) {
        stack.push_back(*q);
        self(self, *q);
        stack.pop_back();
      }
  };
  rec(rec, from);
  return out;
}

std::vector<PathTuple> enumerate_tuples(const GrassmannIndex& v, const GrassmannIndex& w) {
  const DistinguishedSet dist = distinguished_of(w, v);
  const PathGrid grid(v);
  std::vector<std::pair<Root, Root>> ends;
  std::vector<std::vector<std::vector<Root>>> options;
  for (const Root& beta : dist.elements()) {
    ends.push_back(endpoints(beta, v));
    options.push_back(grid_paths(grid, ends.back().first, ends.back().second));
  }

  std::vector<PathTuple> out;
  PathTuple current;
  std::set<Root> claimed;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    budget::tick();
    if (j == options.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& path : options[j]) {
      if (std::any_of(path.begin(), path.end(), [&](const Root& p) { return claimed.contains(p); })) continue;
      claimed.insert(path.begin(), path.end());
      current.push_back(LatticePath{ends[j].first, ends[j].second, path});
      self(self, j + 1);
      current.pop_back();
      for (const Root& p : path) claimed.erase(p);
    }
  };
  rec(rec, 0);
  return out;
}

RootMonomial tuple_to_monomial(const GrassmannIndex& v, const PathTuple& tuple) {
  RootMonomial out(v);
  for (const LatticePath& path : tuple)
    for (const Root& p : path.vertices) {
      if (out.multiplicity(p) > 0) throw InvalidInput("paths intersect at " + p.str());
      out.add(p);
    }
  return out;
}

PathTuple monomial_to_tuple(const GrassmannIndex& v, const GrassmannIndex& w, const RootMonomial& m) {
  if (!(m.ambient() == v)) throw InvalidInput("monomial belongs to a different ambient index");
  if (!m.square_free()) throw InvalidInput(m.str() + " is not square-free");
  const DistinguishedSet dist = distinguished_of(w, v);
  if (m.empty()) {
    if (!dist.empty()) throw InvalidInput("the empty monomial is not maximal for w = " + w.str());
    return {};
  }
  const PathGrid grid(v);
  const BlockDecomposition bd = block_decompose(m);
  std::vector<LatticePath> paths;
  for (const auto& stratum : bd.strata)
    for (const Block& block : stratum) {
      const auto [start, finish] = endpoints(block.summary(), v);
      const auto& vs = block.elements;
      if (vs.front() != start || vs.back() != finish)
        throw InvalidInput("block ending at " + block.summary().str() + " does not run between its endpoints");
      for (std::size_t i = 1; i < vs.size(); ++i)
        if (!grid.is_step(vs[i - 1], vs[i]))
          throw InvalidInput("block contains a gap between " + vs[i - 1].str() + " and " + vs[i].str());
      paths.push_back(LatticePath{start, finish, vs});
    }
  std::vector<Root> summaries = bd.summaries();
  std::sort(summaries.begin(), summaries.end());
  if (!std::equal(summaries.begin(), summaries.end(), dist.elements().begin(), dist.elements().end()))
    throw InvalidInput(m.str() + " is not a maximal monomial dominated by " + w.str());
  // Order by the distinguished element each path belongs to.
  std::sort(paths.begin(), paths.end(), [](const LatticePath& a, const LatticePath& b) {
    return Root{a.finish.row, a.start.col} < Root{b.finish.row, b.start.col};
  });
  return paths;
}

DominatedFaceFamily maximal_dominated_via_paths(const GrassmannIndex& v, const GrassmannIndex& w) {
  const std::vector<Root> nonpositive = nonpositive_roots(v);
  DominatedFaceFamily family{v, w, {}};
  for (const PathTuple& tuple : enumerate_tuples(v, w)) {
    std::vector<Root> face = tuple_to_monomial(v, tuple).support();
    face.insert(face.end(), nonpositive.begin(), nonpositive.end());
    std::sort(face.begin(), face.end());
    family.faces.push_back(std::move(face));
  }
  std::sort(family.faces.begin(), family.faces.end());
  return family;
}

bool unit_steps_agree(const GrassmannIndex& v, const GrassmannIndex& w) {
  const PathGrid grid(v);
  const DistinguishedSet dist = distinguished_of(w, v);
  for (const Root& beta : dist.elements()) {
    const auto [start, finish] = endpoints(beta, v);
    if (finish.row - start.row != grid.row_rank(finish.row) - grid.row_rank(start.row)) return false;
    if (finish.col - start.col != grid.col_rank(finish.col) - grid.col_rank(start.col)) return false;
  }
  return true;
}

}  // namespace schubert
