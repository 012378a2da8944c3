#include "schubert/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

VariableIndex::VariableIndex(const GrassmannIndex& v) : v_(v), vars_(schubert::roots(v)) {}

std::size_t VariableIndex::index_of(const Root& r) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), r);
  if (it == vars_.end() || *it != r) throw InvalidInput(r.str() + " is not a variable for v = " + v_.str());
  return static_cast<std::size_t>(it - vars_.begin());
}

Polynomial Polynomial::constant(std::size_t nvars, BigInt c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidInput("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  Polynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(Exponents e, BigInt c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != nvars_) throw InvalidInput("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
  return best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total_degree(t.first) == d; });
}

std::string Polynomial::str(const VariableIndex& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, then by exponent vector, for stable output.
  std::vector<const std::pair<const Exponents, BigInt>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return total_degree(a->first) > total_degree(b->first); });
  for (const auto* t : order) {
    BigInt c = t->second;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool is_const = total_degree(t->first) == 0;
    if (c != 1 || is_const) os << c;
    bool need_star = c != 1 && !is_const;
    for (std::size_t i = 0; i < t->first.size(); ++i)
      for (int k = 0; k < t->first[i]; ++k) {
        if (need_star) os << '*';
        os << 'X' << vars.root(i).str();
        need_star = true;
      }
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InvalidInput("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InvalidInput("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw InvalidInput("polynomials over different variable sets");
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& allowed, int m) {
  std::vector<Exponents> out;
  if (m < 0) return out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == allowed.size()) {
      if (remaining == 0) out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[allowed[i]] = k;
      self(self, i + 1, remaining - k);
    }
    e[allowed[i]] = 0;
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

Exponents to_exponents(const VariableIndex& vars, const RootMonomial& m) {
  Exponents e(vars.size(), 0);
  for (const auto& [r, k] : m.terms()) e[vars.index_of(r)] = k;
  return e;
}

RootMonomial to_root_monomial(const VariableIndex& vars, const Exponents& e) {
  std::map<Root, int> terms;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) terms[vars.root(i)] = e[i];
  return RootMonomial(vars.ambient(), terms);
}

}  // namespace schubert
