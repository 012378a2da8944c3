#include "schubert/standard_monomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "schubert/budget.hpp"
#include "schubert/duality.hpp"

namespace schubert {

StandardMonomial::StandardMonomial(int d, int n, std::vector<GrassmannIndex> indices)
    : d_(d), n_(n), indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i].d() != d || indices_[i].n() != n)
      throw InvalidInput(indices_[i].str() + " is not in I(" + std::to_string(d) + "," + std::to_string(n) + ")");
    if (i > 0 && !bruhat_leq(indices_[i], indices_[i - 1]))
      throw InvalidInput("not standard: " + indices_[i - 1].str() + " is not >= " + indices_[i].str());
  }
}

int StandardMonomial::degree(const GrassmannIndex& v) const {
  int total = 0;
  for (const auto& theta : indices_) total += v_degree(theta, v);
  return total;
}

std::string StandardMonomial::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << " >= ";
    os << indices_[i];
  }
  os << ']';
  return os.str();
}

bool is_v_compatible(const StandardMonomial& s, const GrassmannIndex& v) {
  return std::all_of(s.indices().begin(), s.indices().end(),
                     [&](const GrassmannIndex& t) { return !(t == v) && bruhat_comparable(t, v); });
}

bool is_w_dominated(const StandardMonomial& s, const GrassmannIndex& w) {
  return s.empty() || bruhat_leq(s.front(), w);
}

bool is_anti_dominated(const StandardMonomial& s, const GrassmannIndex& v) {
  return s.empty() || (bruhat_leq(v, s.back()) && !(s.back() == v));
}

namespace {

// Admissible indices, sorted lexicographically descending (a linear
// extension of the Bruhat order read downwards), with their v-degrees and
// pairwise Bruhat comparisons.
class CandidateSpace {
 public:
  CandidateSpace(const GrassmannIndex& v, std::function<bool(const GrassmannIndex&)> admissible) : v_(v) {
    for (auto& theta : all_indices(v.d(), v.n()))
      if (admissible(theta)) cands_.push_back(std::move(theta));
    std::sort(cands_.begin(), cands_.end(), std::greater<>());
    const std::size_t k = cands_.size();
    degree_.resize(k);
    leq_.assign(k * k, false);
    for (std::size_t i = 0; i < k; ++i) {
      degree_[i] = v_degree(cands_[i], v);
      for (std::size_t j = i; j < k; ++j) leq_[i * k + j] = bruhat_leq(cands_[j], cands_[i]);
    }
  }

  std::vector<StandardMonomial> enumerate(int m) const {
    std::vector<StandardMonomial> out;
    std::vector<std::size_t> stack;
    extend(m, stack, out);
    return out;
  }

  BigInt count(int m) const {
    if (m < 0) return 0;
    const std::size_t k = cands_.size();
    // memo[i][r]: sequences whose first element is cands_[i] with total degree r.
    std::vector<std::vector<BigInt>> memo(k, std::vector<BigInt>(m + 1, 0));
    for (std::size_t ii = k; ii-- > 0;) {
      for (int r = 1; r <= m; ++r) {
        budget::tick();
        const int rest = r - degree_[ii];
        if (rest < 0) continue;
        if (rest == 0) {
          memo[ii][r] = 1;
          continue;
        }
        BigInt total = 0;
        for (std::size_t j = ii; j < k; ++j)
          if (leq_[ii * k + j]) total += memo[j][rest];
        memo[ii][r] = total;
      }
    }
    if (m == 0) return 1;
    BigInt total = 0;
    for (std::size_t i = 0; i < k; ++i) total += memo[i][m];
    return total;
  }

 private:
  void extend(int remaining, std::vector<std::size_t>& stack, std::vector<StandardMonomial>& out) const {
    budget::tick();
    if (remaining == 0) {
      std::vector<GrassmannIndex> seq;
      for (std::size_t i : stack) seq.push_back(cands_[i]);
      out.emplace_back(v_.d(), v_.n(), std::move(seq));
      return;
    }
    const std::size_t k = cands_.size();
    const std::size_t start = stack.empty() ? 0 : stack.back();
    for (std::size_t j = start; j < k; ++j) {
      if (!stack.empty() && !leq_[stack.back() * k + j]) continue;
      if (degree_[j] > remaining) continue;
      stack.push_back(j);
      extend(remaining - degree_[j], stack, out);
      stack.pop_back();
    }
  }

  GrassmannIndex v_;
  std::vector<GrassmannIndex> cands_;
  std::vector<int> degree_;
  std::vector<bool> leq_;  // leq_[i*k+j]: cands_[j] <= cands_[i]
};

void require_leq(const GrassmannIndex& v, const GrassmannIndex& w) {
  if (!bruhat_leq(v, w)) throw InvalidInput("requires v <= w, got v = " + v.str() + ", w = " + w.str());
}

void require_degree(int m) {
  if (m < 0) throw InvalidInput("degree must be non-negative");
}

CandidateSpace compatible_space(const GrassmannIndex& v, const GrassmannIndex& w) {
  return CandidateSpace(v, [&](const GrassmannIndex& t) {
    return !(t == v) && bruhat_comparable(t, v) && bruhat_leq(t, w);
  });
}

CandidateSpace upper_space(const GrassmannIndex& v, const GrassmannIndex& w) {
  return CandidateSpace(v, [&](const GrassmannIndex& t) { return !(t == v) && bruhat_leq(v, t) && bruhat_leq(t, w); });
}

CandidateSpace lower_space(const GrassmannIndex& v) {
  return CandidateSpace(v, [&](const GrassmannIndex& t) { return !(t == v) && bruhat_leq(t, v); });
}

}  // namespace

std::vector<StandardMonomial> enumerate_standard(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  require_leq(v, w);
  require_degree(m);
  return compatible_space(v, w).enumerate(m);
}

BigInt count_standard(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  require_leq(v, w);
  require_degree(m);
  return compatible_space(v, w).count(m);
}

std::vector<StandardMonomial> enumerate_upper(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  require_leq(v, w);
  require_degree(m);
  return upper_space(v, w).enumerate(m);
}

BigInt count_upper(const GrassmannIndex& v, const GrassmannIndex& w, int m) {
  require_leq(v, w);
  require_degree(m);
  return upper_space(v, w).count(m);
}

std::vector<StandardMonomial> enumerate_lower(const GrassmannIndex& v, int m) {
  require_degree(m);
  return lower_space(v).enumerate(m);
}

BigInt count_lower(const GrassmannIndex& v, int m) {
  require_degree(m);
  return lower_space(v).count(m);
}

SplitStandard split(const StandardMonomial& s, const GrassmannIndex& v) {
  if (!is_v_compatible(s, v)) throw InvalidInput(s.str() + " is not v-compatible for v = " + v.str());
  std::vector<GrassmannIndex> upper;
  std::vector<GrassmannIndex> lower;
  for (const auto& theta : s.indices()) (bruhat_leq(v, theta) ? upper : lower).push_back(theta);
  return {StandardMonomial(s.d(), s.n(), std::move(upper)), StandardMonomial(s.d(), s.n(), std::move(lower))};
}

StandardMonomial mirror(const StandardMonomial& s) {
  std::vector<GrassmannIndex> seq;
  for (auto it = s.indices().rbegin(); it != s.indices().rend(); ++it) seq.push_back(dual_grassmann(*it));
  return StandardMonomial(s.d(), s.n(), std::move(seq));
}

}  // namespace schubert
