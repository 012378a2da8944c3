#include "schubert/grassmann.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace schubert {

namespace {

std::string join_entries(std::span<const int> xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ')';
  return os.str();
}

void require_same_shape(const GrassmannIndex& a, const GrassmannIndex& b) {
  if (a.d() != b.d() || a.n() != b.n())
    throw InvalidInput("dimension mismatch: " + a.str() + " in I(" + std::to_string(a.d()) + "," +
                       std::to_string(a.n()) + ") vs " + b.str() + " in I(" +
                       std::to_string(b.d()) + "," + std::to_string(b.n()) + ")");
}

}  // namespace

// --- GrassmannIndex -------------------------------------------------------

GrassmannIndex::GrassmannIndex(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxN) throw InvalidInput("n must lie in 1.." + std::to_string(kMaxN));
  if (entries_.empty()) throw InvalidInput("an index set needs d >= 1 entries");
  if (static_cast<int>(entries_.size()) > n) throw InvalidInput("d exceeds n");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int x = entries_[i];
    if (x < 1 || x > n) throw InvalidInput("entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (i > 0 && entries_[i - 1] >= x)
      throw InvalidInput("entries must be strictly increasing: " + join_entries(entries_));
    mask_ |= std::uint64_t{1} << x;
  }
}

GrassmannIndex GrassmannIndex::parse(int n, const std::string& text) {
  std::vector<int> xs;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    const auto first = token.find_first_not_of(" \t()");
    const auto last = token.find_last_not_of(" \t()");
    if (first == std::string::npos) throw InvalidInput("empty entry in '" + text + "'");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw InvalidInput("not an integer: '" + token + "'");
    xs.push_back(x);
  }
  return GrassmannIndex(n, std::move(xs));
}

GrassmannIndex GrassmannIndex::least(int d, int n) {
  std::vector<int> xs(d);
  for (int i = 0; i < d; ++i) xs[i] = i + 1;
  return GrassmannIndex(n, std::move(xs));
}

GrassmannIndex GrassmannIndex::greatest(int d, int n) {
  std::vector<int> xs(d);
  for (int i = 0; i < d; ++i) xs[i] = n - d + 1 + i;
  return GrassmannIndex(n, std::move(xs));
}

std::vector<int> GrassmannIndex::complement() const {
  std::vector<int> out;
  out.reserve(n_ - d());
  for (int x = 1; x <= n_; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

std::string GrassmannIndex::str() const { return join_entries(entries_); }

std::ostream& operator<<(std::ostream& os, const GrassmannIndex& v) { return os << v.str(); }

std::vector<GrassmannIndex> all_indices(int d, int n) {
  if (d < 1 || d > n) throw InvalidInput("need 1 <= d <= n");
  std::vector<GrassmannIndex> out;
  std::vector<int> xs(d);
  for (int i = 0; i < d; ++i) xs[i] = i + 1;
  while (true) {
    out.emplace_back(n, xs);
    int i = d - 1;
    while (i >= 0 && xs[i] == n - d + 1 + i) --i;
    if (i < 0) break;
    ++xs[i];
    for (int j = i + 1; j < d; ++j) xs[j] = xs[j - 1] + 1;
  }
  return out;
}

// --- Root -----------------------------------------------------------------

std::string Root::str() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

bool is_root_of(const Root& r, const GrassmannIndex& v) {
  return r.row >= 1 && r.row <= v.n() && !v.contains(r.row) && v.contains(r.col);
}

std::vector<Root> roots(const GrassmannIndex& v) {
  std::vector<Root> out;
  for (int r : v.complement())
    for (int c : v.entries()) out.push_back({r, c});
  return out;
}

std::vector<Root> positive_roots(const GrassmannIndex& v) {
  std::vector<Root> out;
  for (const Root& r : roots(v))
    if (r.positive()) out.push_back(r);
  return out;
}

std::vector<Root> nonpositive_roots(const GrassmannIndex& v) {
  std::vector<Root> out;
  for (const Root& r : roots(v))
    if (!r.positive()) out.push_back(r);
  return out;
}

// --- RootMonomial ---------------------------------------------------------

RootMonomial::RootMonomial(GrassmannIndex v, std::span<const Root> elements) : v_(std::move(v)) {
  for (const Root& r : elements) add(r);
}

RootMonomial::RootMonomial(GrassmannIndex v, const std::map<Root, int>& terms) : v_(std::move(v)) {
  for (const auto& [r, k] : terms) add(r, k);
}

void RootMonomial::add(const Root& r, int times) {
  if (!is_root_of(r, v_)) throw InvalidInput(r.str() + " is not a root of " + v_.str());
  if (times < 1) throw InvalidInput("multiplicities must be positive");
  terms_[r] += times;
  degree_ += times;
}

int RootMonomial::multiplicity(const Root& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? 0 : it->second;
}

bool RootMonomial::square_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

std::vector<Root> RootMonomial::support() const {
  std::vector<Root> out;
  out.reserve(terms_.size());
  for (const auto& [r, k] : terms_) out.push_back(r);
  return out;
}

std::vector<Root> RootMonomial::elements() const {
  std::vector<Root> out;
  out.reserve(degree_);
  for (const auto& [r, k] : terms_) out.insert(out.end(), k, r);
  return out;
}

RootMonomial RootMonomial::positive_part() const {
  RootMonomial out(v_);
  for (const auto& [r, k] : terms_)
    if (r.positive()) out.add(r, k);
  return out;
}

RootMonomial RootMonomial::nonpositive_part() const {
  RootMonomial out(v_);
  for (const auto& [r, k] : terms_)
    if (!r.positive()) out.add(r, k);
  return out;
}

std::string RootMonomial::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [r, k] : terms_) {
    if (!first) os << ',';
    first = false;
    os << r;
    if (k > 1) os << '^' << k;
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RootMonomial& m) { return os << m.str(); }

// --- VChain / DistinguishedSet --------------------------------------------

VChain::VChain(GrassmannIndex v, std::vector<Root> elements) : v_(std::move(v)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Root& r = elements_[i];
    if (!is_root_of(r, v_) || !r.positive())
      throw InvalidInput(r.str() + " is not in N^v for v = " + v_.str());
    if (i > 0 && !above(elements_[i - 1], r))
      throw InvalidInput("v-chain must be strictly decreasing at " + elements_[i - 1].str() + ", " + r.str());
  }
}

bool satisfies_condition_a(std::span<const Root> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i].row == s[j].row || s[i].col == s[j].col) return false;
  return true;
}

bool satisfies_condition_b(std::span<const Root> s) {
  for (const Root& a : s)
    for (const Root& b : s)
      if (a.row < b.row && !(b.col < a.col || a.row < b.col)) return false;
  return true;
}

DistinguishedSet::DistinguishedSet(GrassmannIndex v, std::vector<Root> elements)
    : v_(std::move(v)), elements_(std::move(elements)) {
  for (const Root& r : elements_)
    if (!is_root_of(r, v_) || !r.positive())
      throw InvalidInput(r.str() + " is not in N^v for v = " + v_.str());
  std::sort(elements_.begin(), elements_.end());
  if (!satisfies_condition_a(elements_)) throw InvalidInput("distinguished set violates condition (A)");
  if (!satisfies_condition_b(elements_)) throw InvalidInput("distinguished set violates condition (B*)");
}

// --- predicates -----------------------------------------------------------

bool bruhat_leq(const GrassmannIndex& u, const GrassmannIndex& y) {
  require_same_shape(u, y);
  for (int i = 0; i < u.d(); ++i)
    if (u[i] > y[i]) return false;
  return true;
}

int v_degree(const GrassmannIndex& theta, const GrassmannIndex& v) {
  require_same_shape(theta, v);
  int count = 0;
  for (int x : theta.entries())
    if (!v.contains(x)) ++count;
  return count;
}

GrassmannIndex apply_chain(const GrassmannIndex& v, const VChain& chain) {
  if (!(chain.ambient() == v)) throw InvalidInput("chain belongs to a different ambient index");
  std::vector<Root> es(chain.elements().begin(), chain.elements().end());
  return index_of_distinguished(es, v);
}

bool dominates_chain(const GrassmannIndex& w, const GrassmannIndex& v, const VChain& chain) {
  if (!bruhat_leq(v, w)) throw InvalidInput("domination requires v <= w");
  return bruhat_leq(apply_chain(v, chain), w);
}

DistinguishedSet distinguished_of(const GrassmannIndex& w, const GrassmannIndex& v) {
  if (!bruhat_leq(v, w)) throw InvalidInput("distinguished set requires v <= w");
  std::vector<int> rows;
  std::vector<int> cols;
  for (int x : w.entries())
    if (!v.contains(x)) rows.push_back(x);
  for (int x : v.entries())
    if (!w.contains(x)) cols.push_back(x);
  assert(rows.size() == cols.size());

  std::vector<Root> out;
  std::vector<bool> used(cols.size(), false);
  for (int r : rows) {
    int pick = -1;
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!used[i] && cols[i] < r) pick = static_cast<int>(i);
    if (pick < 0) throw VerificationFailure("greedy column choice failed for w = " + w.str());
    used[pick] = true;
    out.push_back({r, cols[pick]});
  }
  return DistinguishedSet(v, std::move(out));
}

GrassmannIndex index_of_distinguished(std::span<const Root> s, const GrassmannIndex& v) {
  if (!satisfies_condition_a(s)) throw InvalidInput("root set violates condition (A)");
  std::uint64_t mask = v.mask();
  for (const Root& r : s) {
    if (!is_root_of(r, v)) throw InvalidInput(r.str() + " is not a root of " + v.str());
    mask &= ~(std::uint64_t{1} << r.col);
  }
  for (const Root& r : s) mask |= std::uint64_t{1} << r.row;
  std::vector<int> xs;
  for (int x = 1; x <= v.n(); ++x)
    if ((mask >> x) & 1U) xs.push_back(x);
  return GrassmannIndex(v.n(), std::move(xs));
}

std::vector<int> depths(std::span<const Root> s) {
  // Longest chain ending at s[i]: process by row descending, since a
  // predecessor in a chain always has a strictly larger row.
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a].row > s[b].row; });
  std::vector<int> out(s.size(), 1);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const std::size_t j = order[oj];
      if (above(s[j], s[i])) out[i] = std::max(out[i], out[j] + 1);
    }
  }
  return out;
}

int depth(const Root& beta, std::span<const Root> s) {
  const auto it = std::find(s.begin(), s.end(), beta);
  if (it == s.end()) throw InvalidInput(beta.str() + " does not belong to the set");
  return depths(s)[static_cast<std::size_t>(it - s.begin())];
}

DepthLayers depth_layers(std::span<const Root> s) {
  std::vector<Root> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::vector<int> ds = depths(sorted);
  const int k = ds.empty() ? 0 : *std::max_element(ds.begin(), ds.end());
  DepthLayers out;
  out.layers.resize(k);
  out.strata.resize(k);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.strata[ds[i] - 1].push_back(sorted[i]);
    for (int j = 0; j < ds[i]; ++j) out.layers[j].push_back(sorted[i]);
  }
  return out;
}

}  // namespace schubert
