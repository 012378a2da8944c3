#include "schubert/bijection.hpp"

#include <algorithm>

#include "schubert/budget.hpp"
#include "schubert/domination.hpp"

namespace schubert {

namespace {

void require_positive_support(const RootMonomial& m) {
  for (const auto& [r, k] : m.terms())
    if (!r.positive()) throw InvalidInput(r.str() + " is not in N^v for v = " + m.ambient().str());
}

// Elements of the given support, repeated by multiplicity in m, sorted by
// (row, col).
std::vector<Root> arranged(const RootMonomial& m, const std::vector<Root>& subset) {
  std::vector<Root> out;
  for (const Root& r : subset) out.insert(out.end(), m.multiplicity(r), r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Root> Block::residual() const {
  std::vector<Root> out;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) out.push_back({elements[i].row, elements[i + 1].col});
  return out;
}

std::vector<Root> BlockDecomposition::summaries() const {
  std::vector<Root> out;
  for (const auto& stratum : strata)
    for (const Block& b : stratum) out.push_back(b.summary());
  return out;
}

std::size_t BlockDecomposition::block_count() const {
  std::size_t total = 0;
  for (const auto& stratum : strata) total += stratum.size();
  return total;
}

BlockDecomposition block_decompose(const RootMonomial& m) {
  if (m.empty()) throw InvalidInput("block decomposition needs a non-empty monomial");
  require_positive_support(m);
  budget::tick(m.degree());

  const DepthLayers layers = depth_layers(m.support());
  BlockDecomposition out{m.ambient(), {}};
  for (const auto& stratum : layers.strata) {
    const std::vector<Root> seq = arranged(m, stratum);
    std::vector<Block> blocks;
    blocks.push_back(Block{{seq.front()}});
    for (std::size_t i = 1; i < seq.size(); ++i) {
      // Consecutive (r,c), (R,C) share a block iff r > C.
      if (seq[i - 1].row > seq[i].col)
        blocks.back().elements.push_back(seq[i]);
      else
        blocks.push_back(Block{{seq[i]}});
    }
    out.strata.push_back(std::move(blocks));
  }
  return out;
}

PiResult pi(const RootMonomial& m) {
  const BlockDecomposition bd = block_decompose(m);
  const std::vector<Root> summaries = bd.summaries();
  if (!satisfies_condition_a(summaries) || !satisfies_condition_b(summaries))
    throw VerificationFailure("block summaries of " + m.str() + " are not distinguished");
  RootMonomial residual(m.ambient());
  for (const auto& stratum : bd.strata)
    for (const Block& b : stratum)
      for (const Root& r : b.residual()) residual.add(r);
  return {index_of_distinguished(summaries, m.ambient()), std::move(residual)};
}

std::vector<Root> Piece::starred() const {
  if (elements.empty()) return {anchor};
  std::vector<Root> out;
  out.reserve(elements.size() + 1);
  out.push_back({elements.front().row, anchor.col});
  for (std::size_t i = 1; i < elements.size(); ++i) out.push_back({elements[i].row, elements[i - 1].col});
  out.push_back({anchor.row, elements.back().col});
  return out;
}

PieceDecomposition piece_decompose(const GrassmannIndex& w, const GrassmannIndex& v, const RootMonomial& t) {
  if (!(t.ambient() == v)) throw InvalidInput("monomial belongs to a different ambient index");
  if (!bruhat_leq(v, w)) throw InvalidInput("piece decomposition requires v <= w");
  require_positive_support(t);
  if (w == v && !t.empty()) throw InvalidInput("w = v dominates no non-empty monomial");
  const DominationChecker top(v, w);
  const std::vector<Root> support = t.support();
  if (!top(support)) throw InvalidInput(t.str() + " is not dominated by " + w.str());
  budget::tick(t.degree());

  const DistinguishedSet dist = top.distinguished();
  const std::vector<Root> dist_elems(dist.elements().begin(), dist.elements().end());
  const DepthLayers dl = depth_layers(dist_elems);
  const int k = dl.max_depth();

  // checkers[j-1] tests domination by w^j, the index of the j-deep layer.
  std::vector<DominationChecker> checkers;
  for (int j = 1; j <= k; ++j) checkers.emplace_back(v, index_of_distinguished(dl.layers[j - 1], v));

  // beta lands in stratum j, the largest j for which w^j dominates
  // {beta} together with everything below beta.  All chains headed by beta
  // live in that set, and its other chains extend by prefixing beta.
  std::vector<std::vector<Root>> strata_members(k);
  for (const Root& beta : support) {
    std::vector<Root> downset{beta};
    for (const Root& x : support)
      if (above(beta, x)) downset.push_back(x);
    int level = 0;
    for (int j = k; j >= 1; --j)
      if (checkers[j - 1](downset)) {
        level = j;
        break;
      }
    if (level == 0) throw VerificationFailure("no domination level for " + beta.str());
    strata_members[level - 1].push_back(beta);
  }

  PieceDecomposition out{v, w, {}};
  for (int j = 1; j <= k; ++j) {
    std::vector<Piece> pieces;
    for (const Root& anchor : dl.strata[j - 1]) pieces.push_back(Piece{anchor, {}});
    for (const Root& x : strata_members[j - 1]) {
      Piece* home = nullptr;
      for (Piece& p : pieces) {
        if (x.row <= p.anchor.row && p.anchor.col <= x.col) {
          if (home) throw VerificationFailure(x.str() + " fits two pieces");
          home = &p;
        }
      }
      if (!home) throw VerificationFailure(x.str() + " fits no piece at depth " + std::to_string(j));
      home->elements.insert(home->elements.end(), t.multiplicity(x), x);
    }
    for (Piece& p : pieces) std::sort(p.elements.begin(), p.elements.end());
    out.strata.push_back(std::move(pieces));
  }
  return out;
}

RootMonomial phi(const GrassmannIndex& w, const GrassmannIndex& v, const RootMonomial& t) {
  const PieceDecomposition pd = piece_decompose(w, v, t);
  RootMonomial out(v);
  for (const auto& stratum : pd.strata)
    for (const Piece& p : stratum)
      for (const Root& r : p.starred()) out.add(r);
  return out;
}

GrassmannIndex least_dominating(const RootMonomial& m) {
  const RootMonomial positive = m.positive_part();
  if (positive.empty()) return m.ambient();
  return pi(positive).w;
}

StandardMonomial pi_tilde(const RootMonomial& m) {
  require_positive_support(m);
  const GrassmannIndex& v = m.ambient();
  std::vector<GrassmannIndex> seq;
  RootMonomial rest = m;
  while (!rest.empty()) {
    PiResult step = pi(rest);
    seq.push_back(std::move(step.w));
    rest = std::move(step.residual);
  }
  return StandardMonomial(v.d(), v.n(), std::move(seq));
}

RootMonomial phi_tilde(const StandardMonomial& s, const GrassmannIndex& v) {
  if (s.d() != v.d() || s.n() != v.n()) throw InvalidInput("standard monomial and v differ in (d,n)");
  if (!is_v_compatible(s, v) || !is_anti_dominated(s, v))
    throw InvalidInput(s.str() + " is not anti-dominated by " + v.str());
  RootMonomial out(v);
  for (auto it = s.indices().rbegin(); it != s.indices().rend(); ++it) out = phi(*it, v, out);
  return out;
}

}  // namespace schubert
