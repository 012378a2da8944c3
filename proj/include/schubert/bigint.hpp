#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// Number of monomials of degree m in a variables: C(a - 1 + m, a - 1),
/// with the a = 0 case read as [m == 0].
inline BigInt monomial_count(long long a, long long m) {
  if (a == 0) return m == 0 ? 1 : 0;
  return binomial(a - 1 + m, a - 1);
}

}  // namespace schubert
