#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "tsys/errors.hpp"
#include "tsys/structures.hpp"

namespace tsys {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binomial(n-k+i, i) after this step
  }
  return r;
}

inline BigInt catalan(long long k) {
  if (k < 0) throw Error("catalan: k must be nonnegative");
  const BigInt num = binomial(2 * k, k);
  internal_check(num % (k + 1) == 0, "catalan: division must be exact");
  return num / (k + 1);
}

/// Exact closed-form counts of structures on the chain [n]:
///   premodel            2/((n+1)(n+2)) * binom(4n+5, n)
///   composition closed  1/(2n+3) * binom(3n+3, n+1)
///   model               binom(2n+1, n)
///   compatible          same as composition closed
inline BigInt closed_form_count(long long n, PairKind kind) {
  if (n < 0) throw Error("closed_form_count: n must be nonnegative");
  switch (kind) {
    case PairKind::premodel: {
      const BigInt num = 2 * binomial(4 * n + 5, n);
      const BigInt den = BigInt(n + 1) * (n + 2);
      internal_check(num % den == 0, "premodel count: division must be exact");
      return num / den;
    }
    case PairKind::composition_closed:
    case PairKind::compatible: {
      const BigInt num = binomial(3 * n + 3, n + 1);
      internal_check(num % (2 * n + 3) == 0,
                     "cc count: division must be exact");
      return num / (2 * n + 3);
    }
    case PairKind::model:
      return binomial(2 * n + 1, n);
  }
  throw Error("closed_form_count: unknown kind");
}

/// |Q([n])| / |C([n])| as an exact rational.
inline BigRational model_to_cc_ratio(long long n) {
  return BigRational(closed_form_count(n, PairKind::model),
                     closed_form_count(n, PairKind::composition_closed));
}

/// |C([n])| / |P([n])| as an exact rational.
inline BigRational cc_to_premodel_ratio(long long n) {
  return BigRational(closed_form_count(n, PairKind::composition_closed),
                     closed_form_count(n, PairKind::premodel));
}

}  // namespace tsys
