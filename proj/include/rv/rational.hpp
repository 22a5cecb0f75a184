#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace rv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// canonical form "p" or "p/q", q > 0, gcd(p,q)=1 (gmp keeps this invariant)
inline std::string rat_str(const Rational& r) { return r.str(); }

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace rv
