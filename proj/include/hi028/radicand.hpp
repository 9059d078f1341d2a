#pragma once

#include <utility>

#include "hi028/rational.hpp"

namespace hi028::exactnum {

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer* root = nullptr) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  Integer sq = r * r;
  if (sq != n) return false;
  if (root) *root = r;
  return true;
}

struct SqrtSplit {
  Integer scale;     // rational factor pulled out of the root
  Integer radicand;  // remaining radicand, 1 when n was a perfect square
};

/// Writes sqrt(n) = scale * sqrt(radicand) for n >= 1.
///
/// Square divisors are extracted by trial division up to 10^4 and by an exact
/// perfect-square test on what remains, so any radicand this returns that fits
/// below 10^8 is genuinely squarefree.  Larger outputs may retain square factors
/// of large primes; that is harmless, since every class comparison downstream is
/// an exact product-is-a-perfect-square test, never a factorisation.
inline SqrtSplit split_square(Integer n) {
  SqrtSplit out{1, 1};
  if (n <= 0) throw Error(ErrorCode::negative_radicand, "radicand must be positive");
  Integer root;
  if (is_perfect_square(n, &root)) {
    out.scale = root;
    return out;
  }
  for (Integer div = 2; div <= 10000; ++div) {
    Integer div2 = div * div;
    if (div2 > n) break;
    while (n % div2 == 0) {
      n /= div2;
      out.scale *= div;
    }
  }
  if (is_perfect_square(n, &root)) {
    out.scale *= root;
    n = 1;
  }
  out.radicand = std::move(n);
  return out;
}

/// True when sqrt(k1) and sqrt(k2) span the same one-dimensional class over Q,
/// i.e. k1*k2 is a perfect square.  `ratio` receives t with sqrt(k1) = t*sqrt(k2).
inline bool same_class(const Integer& k1, const Integer& k2, Rational* ratio = nullptr) {
  Integer prod = k1 * k2;
  Integer root;
  if (!is_perfect_square(prod, &root)) return false;
  if (ratio) *ratio = make_rational(root, k2);
  return true;
}

}  // namespace hi028::exactnum
