// Algebra parameters: the inputs (q, g, alpha, alphatilde) and the derived
// constants gtilde, qtilde, xi together with the per-node couplings.
#pragma once

#include "qhat/numerics.hpp"

namespace qhat {

template <class C>
struct AlgebraParams {
  C q, g, alpha, alphatilde;
  C gtilde, qtilde, xi;
  C g2, g4, alpha2, alpha4;
};

// gtilde^2 = g^2 / (1 - g^2 (q - 1/q)^2), principal branch; qtilde is pinned
// by the two parameter relations  g = (qt - 1/qt) / (2i (q - 1/q))  and
// gtilde = i (qt - 1/qt) / ((q - 1/q)(qt + 1/qt)), which jointly fix the
// half-sum and half-difference of (qt, 1/qt); xi = -i gtilde (q - 1/q).
template <class C>
AlgebraParams<C> derive_constants(const C& q, const C& g, const C& alpha, const C& alphatilde) {
  using std::abs;
  if (abs(q) == real_t<C>(0)) throw DegenerateError("derive_constants: q = 0");
  if (abs(q - C(1)) < 1e-14 || abs(q + C(1)) < 1e-14)
    throw DegenerateError("derive_constants: q at +-1");
  const C qq = q - C(1) / q;
  const C den = C(1) - g * g * qq * qq;
  if (abs(den) < 1e-14) throw DegenerateError("derive_constants: pole of gtilde");
  AlgebraParams<C> p;
  p.q = q;
  p.g = g;
  p.alpha = alpha;
  p.alphatilde = alphatilde;
  p.gtilde = sqrt_principal(g * g / den);
  if (abs(p.gtilde) == real_t<C>(0)) throw DegenerateError("derive_constants: g = 0");
  p.qtilde = C(0, 1) * g * qq - g / p.gtilde;
  p.xi = C(0, -1) * p.gtilde * qq;
  p.g2 = p.g4 = g;
  p.alpha2 = alpha;
  p.alpha4 = alpha * alphatilde * alphatilde;
  return p;
}

template <class C>
AlgebraParams<C> derive_constants(const C& q, const C& g) {
  return derive_constants(q, g, C(1), C(1));
}

// zeta(x) = -(x + 1/x + xi + 1/xi) / (xi - 1/xi)
template <class C>
C zeta(const C& x, const AlgebraParams<C>& p) {
  using std::abs;
  if (abs(x) == real_t<C>(0)) throw DegenerateError("zeta: x = 0");
  const C xi = p.xi;
  if (abs(xi) == real_t<C>(0) || abs(xi - C(1)) < 1e-14 || abs(xi + C(1)) < 1e-14)
    throw DegenerateError("zeta: xi degenerate");
  return -(x + C(1) / x + xi + C(1) / xi) / (xi - C(1) / xi);
}

// residuals of the two parameter relations defining qtilde (self check)
template <class C>
real_t<C> parrel2_residual(const AlgebraParams<C>& p) {
  using std::abs;
  const C qq = p.q - C(1) / p.q;
  const C qt = p.qtilde;
  const auto r1 = abs((qt - C(1) / qt) / (C(0, 2) * qq) - p.g);
  const auto r2 = abs(C(0, 1) * (qt - C(1) / qt) / (qq * (qt + C(1) / qt)) - p.gtilde);
  return r1 > r2 ? r1 : r2;
}

}  // namespace qhat
