#include "schubert/minor_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schubert/budget.hpp"

namespace schubert {

namespace {

// Position of x among the entries of v, or -1.
int column_of(const GrassmannIndex& v, int x) {
  const auto es = v.entries();
  const auto it = std::lower_bound(es.begin(), es.end(), x);
  return it != es.end() && *it == x ? static_cast<int>(it - es.begin()) : -1;
}

void require_shape(const GrassmannIndex& a, const GrassmannIndex& b) {
  if (a.d() != b.d() || a.n() != b.n()) throw InvalidInput(a.str() + " and " + b.str() + " lie in different I(d,n)");
}

void require_leq(const GrassmannIndex& v, const GrassmannIndex& w) {
  if (!bruhat_leq(v, w)) throw InvalidInput("requires v <= w, got v = " + v.str() + ", w = " + w.str());
}

RootMonomial distinguished_monomial(const GrassmannIndex& theta, const GrassmannIndex& v) {
  const DistinguishedSet s = distinguished_of(theta, v);
  return RootMonomial(v, s.elements());
}

// Generators f_mu, v <= mu, mu not <= w.
std::vector<GrassmannIndex> all_generators(const GrassmannIndex& v, const GrassmannIndex& w) {
  std::vector<GrassmannIndex> out;
  for (auto& mu : all_indices(v.d(), v.n()))
    if (bruhat_leq(v, mu) && !bruhat_leq(mu, w)) out.push_back(std::move(mu));
  return out;
}

// Solves target = sum_mu g_mu f_mu with each g_mu homogeneous over the
// allowed variables.  Dense Gauss-Jordan over the rationals.
std::optional<ReductionCertificate> solve_reduction(const GrassmannIndex& v, const GrassmannIndex& theta,
                                                    const std::vector<GrassmannIndex>& gens, const char* source) {
  const VariableIndex vars(v);
  const Polynomial target = minor(theta, v);
  const int degree = v_degree(theta, v);
  std::vector<std::size_t> allowed;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (theta.contains(vars.root(i).row)) allowed.push_back(i);

  struct Column {
    std::size_t gen;
    Exponents multiplier;
    Polynomial product;
  };
  std::vector<Polynomial> minors;
  std::vector<Column> columns;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    minors.push_back(minor(gens[g], v));
    const int dg = minors.back().degree();
    if (dg < 0 || dg > degree) continue;
    for (auto& e : monomials_of_degree(vars.size(), allowed, degree - dg)) {
      Polynomial p = Polynomial::monomial(e) * minors.back();
      columns.push_back({g, std::move(e), std::move(p)});
    }
  }

  std::map<Exponents, std::size_t> row_of;
  auto row = [&](const Exponents& e) { return row_of.try_emplace(e, row_of.size()).first->second; };
  for (const auto& [e, c] : target.terms()) row(e);
  for (const auto& col : columns)
    for (const auto& [e, c] : col.product.terms()) row(e);

  const std::size_t nr = row_of.size();
  const std::size_t nc = columns.size();
  std::vector<std::vector<BigRational>> a(nr, std::vector<BigRational>(nc + 1, 0));
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& [e, c] : columns[j].product.terms()) a[row_of.at(e)][j] = BigRational(c);
  for (const auto& [e, c] : target.terms()) a[row_of.at(e)][nc] = BigRational(c);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < nc && r < nr; ++j) {
    budget::tick(nr);
    std::size_t p = r;
    while (p < nr && a[p][j] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const BigRational inv = 1 / a[r][j];
    for (std::size_t k = j; k <= nc; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const BigRational f = a[i][j];
      for (std::size_t k = j; k <= nc; ++k)
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (a[i][nc] != 0) return std::nullopt;

  std::vector<BigRational> x(nc, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][nc];
  BigInt denom = 1;
  for (const auto& q : x)
    if (q != 0) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(q));

  ReductionCertificate cert{theta, false, source, denom, {}};
  std::map<std::size_t, Polynomial> coeffs;
  for (std::size_t j = 0; j < nc; ++j) {
    if (x[j] == 0) continue;
    const BigRational scaled = x[j] * BigRational(denom);
    auto it = coeffs.try_emplace(columns[j].gen, vars.size()).first;
    it->second.add_term(columns[j].multiplier, boost::multiprecision::numerator(scaled));
  }
  for (auto& [g, poly] : coeffs) cert.terms.emplace_back(gens[g], std::move(poly));
  return cert;
}

}  // namespace

GenericMatrix::GenericMatrix(const GrassmannIndex& v) : vars_(v) {}

Polynomial GenericMatrix::entry(int i, int j) const {
  const GrassmannIndex& v = vars_.ambient();
  if (i < 1 || i > v.n() || j < 0 || j >= v.d()) throw InvalidInput("matrix position out of range");
  if (v.contains(i)) return Polynomial::constant(vars_.size(), column_of(v, i) == j ? 1 : 0);
  return Polynomial::variable(vars_.size(), vars_.index_of(Root{i, v[j]}));
}

std::string GenericMatrix::str() const {
  const GrassmannIndex& v = vars_.ambient();
  std::ostringstream os;
  for (int i = 1; i <= v.n(); ++i) {
    for (int j = 0; j < v.d(); ++j) {
      if (j) os << ' ';
      if (v.contains(i))
        os << (column_of(v, i) == j ? "1" : "0");
      else
        os << 'X' << Root{i, v[j]}.str();
    }
    os << '\n';
  }
  return os.str();
}

Polynomial minor(const GrassmannIndex& theta, const GrassmannIndex& v) {
  require_shape(theta, v);
  const VariableIndex vars(v);
  const int d = v.d();
  Polynomial out(vars.size());
  Exponents e(vars.size(), 0);
  std::vector<bool> used(d, false);

  // Expand along rows theta_0, theta_1, ... in turn; choosing the p-th
  // still-unused column contributes (-1)^p.
  auto rec = [&](auto&& self, int t, int sign) -> void {
    budget::tick();
    if (t == d) {
      out.add_term(e, sign);
      return;
    }
    const int row = theta[t];
    const int unit = column_of(v, row);
    int p = 0;
    for (int j = 0; j < d; ++j) {
      if (used[j]) continue;
      const int s = (p++ % 2) ? -sign : sign;
      if (unit >= 0 && unit != j) continue;
      used[j] = true;
      std::size_t var = 0;
      if (unit < 0) ++e[var = vars.index_of(Root{row, v[j]})];
      self(self, t + 1, s);
      if (unit < 0) --e[var];
      used[j] = false;
    }
  };
  rec(rec, 0, 1);
  return out;
}

void require_family(int family) {
  if (family < 1 || family > 4) throw InvalidInput("term order family must be 1, 2, 3 or 4, got " + std::to_string(family));
}

TermOrder::TermOrder(const GrassmannIndex& v, int family) : family_(family) {
  require_family(family);
  const VariableIndex vars(v);
  ranking_.resize(vars.size());
  for (std::size_t i = 0; i < ranking_.size(); ++i) ranking_[i] = i;
  std::sort(ranking_.begin(), ranking_.end(),
            [&](std::size_t a, std::size_t b) { return greater_variable(vars.root(a), vars.root(b)); });
}

bool TermOrder::greater_variable(const Root& a, const Root& b) const {
  if (a.positive() != b.positive()) return a.positive();
  switch (family_) {
    case 1:
      return a.row < b.row || (a.row == b.row && a.col > b.col);
    case 2:
      return a.col > b.col || (a.col == b.col && a.row < b.row);
    case 3:
      return a.row < b.row || (a.row == b.row && a.col < b.col);
    default:
      return a.col > b.col || (a.col == b.col && a.row > b.row);
  }
}

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
  if (a.size() != ranking_.size() || b.size() != ranking_.size())
    throw InvalidInput("exponent vector has the wrong length");
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  if (family_ <= 2) {
    // Lexicographic: the greatest variable where they differ decides.
    for (std::size_t i : ranking_)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  } else {
    // Reverse lexicographic: the least variable where they differ decides,
    // and the smaller exponent there wins.
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
  }
  return 0;
}

Exponents initial_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw InvalidInput("the zero polynomial has no initial term");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

InitialTermReport check_initial_terms(const GrassmannIndex& v, const std::optional<GrassmannIndex>& w,
                                      const std::vector<int>& families) {
  if (w) require_shape(v, *w);
  for (int f : families) require_family(f);
  const VariableIndex vars(v);
  std::vector<TermOrder> orders;
  for (int f : families) orders.emplace_back(v, f);

  InitialTermReport report{v, families, 0, {}};
  for (const auto& theta : all_indices(v.d(), v.n())) {
    if (!bruhat_leq(v, theta) || (w && bruhat_leq(theta, *w))) continue;
    const Polynomial f = minor(theta, v);
    const RootMonomial expected = distinguished_monomial(theta, v);
    ++report.minors_checked;
    for (const TermOrder& order : orders) {
      const RootMonomial actual = to_root_monomial(vars, initial_term(f, order));
      if (!(actual == expected)) report.violations.push_back({theta, order.family(), expected, actual});
    }
  }
  return report;
}

bool monomial_ideal_member(const RootMonomial& mu, const GrassmannIndex& v, const GrassmannIndex& w) {
  require_shape(v, w);
  require_leq(v, w);
  if (!(mu.ambient() == v)) throw InvalidInput("monomial belongs to a different ambient index");
  for (const auto& theta : all_generators(v, w)) {
    const DistinguishedSet s = distinguished_of(theta, v);
    if (std::all_of(s.elements().begin(), s.elements().end(), [&](const Root& b) { return mu.multiplicity(b) > 0; }))
      return true;
  }
  return false;
}

BigInt count_initial_ideal_complement(const GrassmannIndex& v, const GrassmannIndex& w, int family, int m) {
  require_shape(v, w);
  require_leq(v, w);
  require_family(family);
  if (m < 0) throw InvalidInput("degree must be non-negative");
  const VariableIndex vars(v);
  const TermOrder order(v, family);
  std::vector<Exponents> gens;
  for (const auto& theta : all_generators(v, w)) gens.push_back(initial_term(minor(theta, v), order));
  std::vector<std::size_t> all(vars.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  BigInt count = 0;
  for (const auto& e : monomials_of_degree(vars.size(), all, m)) {
    budget::tick();
    if (std::none_of(gens.begin(), gens.end(), [&](const Exponents& g) { return divides(g, e); })) ++count;
  }
  return count;
}

std::vector<GrassmannIndex> reduction_family(const GrassmannIndex& v, const GrassmannIndex& w,
                                             const GrassmannIndex& theta) {
  require_shape(v, w);
  require_shape(v, theta);
  const int d = v.d();
  int k = 0;
  while (k < d && theta[k] <= w[k]) ++k;
  if (k == d) throw InvalidInput("requires theta not <= w, got theta = " + theta.str() + ", w = " + w.str());
  int a = 0;  // number of entries of v that are <= w_k
  while (a < d && v[a] <= w[k]) ++a;
  if (a <= k) throw InvalidInput("requires v <= w, got v = " + v.str() + ", w = " + w.str());

  // 0-based: choose k of v_0..v_{a-1}, keep v_a..v_{d-1}, and choose a-k
  // of theta_k..theta_{d-1} avoiding the kept entries.
  std::vector<GrassmannIndex> out;
  std::vector<int> pick_v;
  std::vector<int> pick_t;
  auto emit = [&] {
    std::vector<int> es = pick_v;
    for (int i = a; i < d; ++i) es.push_back(v[i]);
    es.insert(es.end(), pick_t.begin(), pick_t.end());
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return;
    GrassmannIndex mu(v.n(), es);
    if (!bruhat_leq(v, mu) || bruhat_leq(mu, w))
      throw VerificationFailure("reduction generator " + mu.str() + " is not in the range v <= mu, mu not <= w");
    out.push_back(std::move(mu));
  };
  auto choose_t = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick_t.size()) == a - k) {
      emit();
      return;
    }
    for (int j = from; j < d; ++j) {
      if (column_of(v, theta[j]) >= a) continue;
      pick_t.push_back(theta[j]);
      self(self, j + 1);
      pick_t.pop_back();
    }
  };
  auto choose_v = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick_v.size()) == k) {
      choose_t(choose_t, k);
      return;
    }
    for (int i = from; i < a; ++i) {
      pick_v.push_back(v[i]);
      self(self, i + 1);
      pick_v.pop_back();
    }
  };
  choose_v(choose_v, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReductionCertificate verify_generator_reduction(const GrassmannIndex& v, const GrassmannIndex& w,
                                                const GrassmannIndex& theta) {
  require_shape(v, w);
  require_shape(v, theta);
  require_leq(v, w);
  if (bruhat_leq(theta, w)) throw InvalidInput("requires theta not <= w, got theta = " + theta.str() + ", w = " + w.str());
  const VariableIndex vars(v);
  if (bruhat_leq(v, theta)) {
    ReductionCertificate cert{theta, true, "trivial", 1, {}};
    cert.terms.emplace_back(theta, Polynomial::constant(vars.size(), 1));
    return cert;
  }
  std::optional<ReductionCertificate> cert = solve_reduction(v, theta, reduction_family(v, w, theta), "reduction_family");
  if (!cert) cert = solve_reduction(v, theta, all_generators(v, w), "all_generators");
  if (!cert) throw VerificationFailure("f" + theta.str() + " is not in the ideal of the minors f_mu, v <= mu, mu not <= w");
  if (!check_certificate(v, *cert)) throw VerificationFailure("reduction certificate for " + theta.str() + " does not check");
  return *cert;
}

bool check_certificate(const GrassmannIndex& v, const ReductionCertificate& cert) {
  const VariableIndex vars(v);
  Polynomial sum(vars.size());
  for (const auto& [mu, g] : cert.terms) sum += g * minor(mu, v);
  return sum == Polynomial::constant(vars.size(), cert.denominator) * minor(cert.theta, v);
}

}  // namespace schubert
