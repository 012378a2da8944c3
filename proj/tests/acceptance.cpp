// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "schubert/bijection.hpp"
#include "schubert/domination.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/lattice_paths.hpp"
#include "schubert/minor_algebra.hpp"
#include "schubert/standard_monomial.hpp"
#include "support.hpp"

using namespace schubert;
using testing_support::idx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Thrown by require() with a description of the first failure.
struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <typename T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string pair_str(const GrassmannIndex& v, const GrassmannIndex& w) { return "v=" + v.str() + " w=" + w.str(); }

template <typename F>
void for_each_pair(int max_n, F&& f) {
  for (int n = 2; n <= max_n; ++n)
    for (int d = 1; d < n; ++d) {
      const auto idxs = all_indices(d, n);
      for (const auto& v : idxs)
        for (const auto& w : idxs)
          if (bruhat_leq(v, w)) f(v, w);
    }
}

// --- criteria -------------------------------------------------------------

std::string criterion1() {
  const auto v = testing_support::nine_v();
  const auto w = testing_support::nine_w();
  const auto t0 = Clock::now();
  const auto family = maximal_dominated(v, w);
  const std::size_t faces = family.faces.size();
  const std::size_t tuples = enumerate_tuples(v, w).size();
  const std::size_t max_card = max_cardinality_count(family);
  const double dt = seconds_since(t0);
  require(faces == 9, "maximal sets: " + std::to_string(faces));
  require(tuples == 9, "path tuples: " + std::to_string(tuples));
  require(max_card == 9, "max-cardinality sets: " + std::to_string(max_card));
  require(dt < 1.0, "took " + std::to_string(dt) + " s");
  return "multiplicity 9 = 9 = 9 in " + std::to_string(dt) + " s";
}

std::string criterion2() {
  const auto v = testing_support::wide_v();
  const auto s = distinguished_of(testing_support::wide_w(), v);
  const std::vector<Root> expected{{9, 3}, {16, 11}, {17, 10}, {24, 21}, {25, 20}, {26, 18}, {27, 2}};
  require(std::vector<Root>(s.elements().begin(), s.elements().end()) == expected, "distinguished set differs");
  const auto ends = endpoints({16, 11}, v);
  require(ends.first == Root{14, 11} && ends.second == Root{16, 13},
          "endpoints " + show(ends.first) + " " + show(ends.second));
  return "7-element set and endpoints((16,11)) = ((14,11),(16,13))";
}

std::string criterion3() {
  const auto m = testing_support::seven_block_monomial();
  const auto bd = block_decompose(m);
  require(bd.strata.size() == 4 && bd.block_count() == 7, "block structure differs");
  const auto find_block = [&](std::size_t stratum, const std::vector<Root>& elements) -> const Block* {
    for (const Block& b : bd.strata[stratum])
      if (b.elements == elements) return &b;
    return nullptr;
  };
  const Block* b1 = find_block(2, {{10, 8}, {11, 8}});
  const Block* b2 = find_block(2, {{21, 18}, {21, 18}, {22, 18}});
  const Block* b3 = find_block(3, {{10, 9}, {10, 9}, {10, 9}});
  require(b1 && b2 && b3, "stated blocks not found");
  require(b1->summary() == Root{11, 8} && b2->summary() == Root{22, 18} && b3->summary() == Root{10, 9},
          "block summaries differ");
  const PiResult r = pi(m);
  const auto s = distinguished_of(r.w, m.ambient());
  const std::vector<Root> expected{{10, 9}, {11, 8}, {12, 4}, {13, 1}, {22, 18}, {23, 16}, {25, 14}};
  require(std::vector<Root>(s.elements().begin(), s.elements().end()) == expected, "distinguished set of pi(m)");
  return "blocks give (11,8),(22,18),(10,9); 7-element set reproduced";
}

std::string criterion4() {
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for_each_pair(7, [&](const GrassmannIndex& v, const GrassmannIndex& w) {
    const auto h = hilbert_direct_series(v, w, 4);
    for (int m = 0; m <= 4; ++m) {
      const BigInt sm = count_standard(v, w, m);
      require(h[m] == sm, pair_str(v, w) + " m=" + std::to_string(m) + ": " + h[m].str() + " vs " + sm.str());
    }
    ++pairs;
  });
  const double dt = seconds_since(t0);
  require(dt < 600.0, "took " + std::to_string(dt) + " s");
  return std::to_string(pairs) + " pairs, m <= 4, in " + std::to_string(dt) + " s";
}

std::string criterion5() {
  std::mt19937_64 rng(20260101);
  const int samples = 10000;
  for (int i = 0; i < samples;) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const int d = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const auto v = oracle::random_index(rng, d, n);
    if (positive_roots(v).empty()) continue;
    const auto m = oracle::random_positive_monomial(rng, v, std::uniform_int_distribution<int>(1, 6)(rng));
    const PiResult r = pi(m);
    require(bruhat_leq(v, r.w) && !(r.w == v), "clause 1 for " + m.str());
    require(v_degree(r.w, v) + r.residual.degree() == m.degree(), "clause 2 for " + m.str());
    require(dominates_monomial(r.w, v, r.residual), "clause 3 for " + m.str());
    require(r.w == oracle::least_dominating(m), "clause 4 for " + m.str());
    require(phi(r.w, v, r.residual) == m, "phi(pi(m)) != m for " + m.str());
    ++i;
  }
  // pi o phi on random dominated pairs (w, t), t drawn by rejection.
  for (int i = 0; i < samples;) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const int d = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const auto v = oracle::random_index(rng, d, n);
    const auto w = oracle::random_index(rng, d, n);
    if (!bruhat_leq(v, w) || w == v || positive_roots(v).empty()) continue;
    const int deg = std::uniform_int_distribution<int>(0, 6)(rng);
    const RootMonomial t = deg == 0 ? RootMonomial(v) : oracle::random_positive_monomial(rng, v, deg);
    if (!dominates_monomial(w, v, t)) continue;
    const PiResult back = pi(phi(w, v, t));
    require(back.w == w && back.residual == t, "pi(phi) != id for " + pair_str(v, w) + " t=" + t.str());
    ++i;
  }
  return std::to_string(samples) + " monomials (4 clauses, phi o pi) and " + std::to_string(samples) +
         " pairs (pi o phi)";
}

std::string criterion6() {
  std::size_t pairs = 0;
  for_each_pair(7, [&](const GrassmannIndex& v, const GrassmannIndex& w) {
    const auto ie = hilbert_inclusion_exclusion_series(maximal_dominated(v, w), 6);
    const auto direct = hilbert_direct_series(v, w, 6);
    require(ie == direct, pair_str(v, w));
    ++pairs;
  });
  const auto v = idx(4, {1, 2});
  const auto w = idx(4, {2, 4});
  const auto h = hilbert_inclusion_exclusion_series(maximal_dominated(v, w), 6);
  for (int m = 0; m <= 6; ++m) require(h[m] == (m + 1) * (m + 1), "quadric h(" + std::to_string(m) + ")");
  require(multiplicity(v, w) == 2, "quadric multiplicity");
  return std::to_string(pairs) + " pairs, m <= 6; quadric h = (m+1)^2, multiplicity 2";
}

std::string criterion7() {
  std::size_t minors = 0;
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n)) {
        const auto report = check_initial_terms(v, std::nullopt);
        require(report.ok(), "v=" + v.str() + " theta=" +
                                 (report.ok() ? "" : report.violations.front().theta.str()) + " family " +
                                 (report.ok() ? "" : std::to_string(report.violations.front().family)));
        minors += report.minors_checked;
      }
  std::size_t pairs = 0;
  for_each_pair(6, [&](const GrassmannIndex& v, const GrassmannIndex& w) {
    const auto h = hilbert_direct_series(v, w, 4);
    for (int family = 1; family <= 4; ++family)
      for (int m = 0; m <= 4; ++m)
        require(count_initial_ideal_complement(v, w, family, m) == h[m],
                pair_str(v, w) + " family " + std::to_string(family) + " m=" + std::to_string(m));
    ++pairs;
  });
  return std::to_string(minors) + " minors x 4 families; " + std::to_string(pairs) + " pairs, m <= 4";
}

std::string criterion8() {
  std::size_t pairs = 0;
  std::size_t total_tuples = 0;
  for_each_pair(9, [&](const GrassmannIndex& v, const GrassmannIndex& w) {
    // maximal_dominated throws VerificationFailure on unequal cardinalities.
    const auto family = maximal_dominated(v, w);
    const auto cards = family.cardinalities();
    require(std::all_of(cards.begin(), cards.end(), [&](int c) { return c == cards.front(); }),
            "unequal face sizes for " + pair_str(v, w));
    const auto tuples = enumerate_tuples(v, w);
    require(tuples.size() == family.faces.size(), "tuple count for " + pair_str(v, w));
    for (const auto& t : tuples)
      require(monomial_to_tuple(v, w, tuple_to_monomial(v, t)) == t, "round trip for " + pair_str(v, w));
    require(maximal_dominated_via_paths(v, w).faces == family.faces, "faces differ for " + pair_str(v, w));
    total_tuples += tuples.size();
    ++pairs;
  });
  return std::to_string(pairs) + " pairs, " + std::to_string(total_tuples) + " tuples";
}

std::string criterion9() {
  std::size_t points = 0;
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n)) {
        require(multiplicity(v, v) == 1, "multiplicity at v=" + v.str());
        const long long dim = static_cast<long long>(nonpositive_roots(v).size());
        const auto h = hilbert_direct_series(v, v, 6);
        const auto ie = hilbert_inclusion_exclusion_series(maximal_dominated(v, v), 6);
        for (int m = 0; m <= 6; ++m) {
          const BigInt expected = dim == 0 ? BigInt(m == 0 ? 1 : 0) : binomial(m + dim - 1, dim - 1);
          require(h[m] == expected && ie[m] == expected, "h(" + std::to_string(m) + ") at v=" + v.str());
        }
        ++points;
      }
  return std::to_string(points) + " smooth points, m <= 6";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<std::string()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (const auto& [k, run] : criteria) {
    const auto t0 = Clock::now();
    std::string status = "PASS";
    std::string detail;
    try {
      detail = run();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failures;
    std::cout << status << " criterion " << k << ": " << detail << " [" << seconds_since(t0) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
