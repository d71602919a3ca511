// Z2-graded spaces and supermatrices: graded tensor products with Koszul
// signs, the graded permutation, supercommutators and three-site embeddings.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhat/linalg.hpp"

namespace qhat {

struct GradedSpace {
  int dim{0};
  std::vector<std::uint8_t> parity;  // 0 = bosonic, 1 = fermionic

  static GradedSpace even(int d) { return {d, std::vector<std::uint8_t>(d, 0)}; }

  // the (2|2)-dimensional fundamental space: states 1,2 bosonic; 3,4 fermionic
  static GradedSpace fundamental() { return {4, {0, 0, 1, 1}}; }

  GradedSpace tensor(const GradedSpace& o) const {
    GradedSpace t;
    t.dim = dim * o.dim;
    t.parity.reserve(t.dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < o.dim; ++j)
        t.parity.push_back(std::uint8_t((parity[i] + o.parity[j]) % 2));
    return t;
  }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.dim == b.dim && a.parity == b.parity;
  }
};

enum class Degree { even = 0, odd = 1, mixed = 2 };

template <class C>
struct SuperMatrix {
  GradedSpace out, in;  // row space and column space
  Mat<C> mat;

  SuperMatrix() = default;
  SuperMatrix(GradedSpace o, GradedSpace i) : out(o), in(std::move(i)), mat(out.dim, in.dim) {}
  SuperMatrix(GradedSpace o, GradedSpace i, Mat<C> m)
      : out(std::move(o)), in(std::move(i)), mat(std::move(m)) {}

  static SuperMatrix identity(const GradedSpace& s) {
    return SuperMatrix(s, s, Mat<C>::identity(s.dim));
  }
  static SuperMatrix zero(const GradedSpace& o, const GradedSpace& i) {
    return SuperMatrix(o, i);
  }

  C& operator()(int i, int j) { return mat(i, j); }
  const C& operator()(int i, int j) const { return mat(i, j); }

  // Entry (i,j) connects basis states of parities out[i], in[j]; the matrix is
  // homogeneous when all nonzero entries agree on out[i]+in[j] mod 2.
  Degree degree() const {
    bool has_even = false, has_odd = false;
    for (int j = 0; j < in.dim; ++j)
      for (int i = 0; i < out.dim; ++i) {
        if (mat(i, j) == C(0)) continue;
        ((out.parity[i] ^ in.parity[j]) ? has_odd : has_even) = true;
      }
    if (has_even && has_odd) return Degree::mixed;
    return has_odd ? Degree::odd : Degree::even;
  }

  std::pair<SuperMatrix, SuperMatrix> split() const {
    SuperMatrix ev(out, in), od(out, in);
    for (int j = 0; j < in.dim; ++j)
      for (int i = 0; i < out.dim; ++i)
        ((out.parity[i] ^ in.parity[j]) ? od : ev).mat(i, j) = mat(i, j);
    return {ev, od};
  }

  friend SuperMatrix operator+(SuperMatrix x, const SuperMatrix& y) {
    x.mat += y.mat;
    return x;
  }
  friend SuperMatrix operator-(SuperMatrix x, const SuperMatrix& y) {
    x.mat -= y.mat;
    return x;
  }
  friend SuperMatrix operator-(SuperMatrix x) {
    x.mat = -std::move(x.mat);
    return x;
  }
  friend SuperMatrix operator*(const C& s, SuperMatrix x) {
    x.mat *= s;
    return x;
  }
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
    if (!(x.in == y.out)) throw NumericError("supermatrix product: space mismatch");
    return SuperMatrix(x.out, y.in, x.mat * y.mat);
  }

  real_t<C> max_abs() const { return mat.max_abs(); }
};

template <class C>
real_t<C> distance(const SuperMatrix<C>& x, const SuperMatrix<C>& y) {
  return (x - y).max_abs();
}

// (A (x) B)(v (x) w) = (-1)^{deg(B) parity(v)} (A v) (x) (B w): the Koszul
// sign tracks B (odd) passing the first-slot state v.  Inputs homogeneous.
template <class C>
SuperMatrix<C> graded_tensor(const SuperMatrix<C>& A, const SuperMatrix<C>& B) {
  const Degree dB = B.degree();
  if (A.degree() == Degree::mixed || dB == Degree::mixed)
    throw NumericError("graded_tensor: mixed-degree input, split first");
  SuperMatrix<C> T(A.out.tensor(B.out), A.in.tensor(B.in));
  const int bo = B.out.dim, bi = B.in.dim;
  for (int j1 = 0; j1 < A.in.dim; ++j1)
    for (int i1 = 0; i1 < A.out.dim; ++i1) {
      const C aij = A(i1, j1);
      if (aij == C(0)) continue;
      const bool flip = (dB == Degree::odd) && A.in.parity[j1];
      const C f = flip ? -aij : aij;
      for (int j2 = 0; j2 < bi; ++j2)
        for (int i2 = 0; i2 < bo; ++i2) T(i1 * bo + i2, j1 * bi + j2) = f * B(i2, j2);
    }
  return T;
}

// Same product for arbitrary (possibly mixed) inputs, via parity splitting.
// Only B needs splitting: the Koszul sign involves deg(B) alone.
template <class C>
SuperMatrix<C> graded_tensor_any(const SuperMatrix<C>& A, const SuperMatrix<C>& B) {
  if (B.degree() != Degree::mixed) {
    if (A.degree() != Degree::mixed) return graded_tensor(A, B);
    auto [ae, ao] = A.split();
    return graded_tensor(ae, B) + graded_tensor(ao, B);
  }
  auto [be, bo] = B.split();
  return graded_tensor_any(A, be) + graded_tensor_any(A, bo);
}

// P(v (x) w) = (-1)^{parity(v) parity(w)} w (x) v
template <class C>
SuperMatrix<C> graded_permutation(const GradedSpace& V, const GradedSpace& W) {
  SuperMatrix<C> P(W.tensor(V), V.tensor(W));
  for (int a = 0; a < V.dim; ++a)
    for (int b = 0; b < W.dim; ++b)
      P(b * V.dim + a, a * W.dim + b) = (V.parity[a] && W.parity[b]) ? C(-1) : C(1);
  return P;
}

// [A, B} = AB - (-1)^{deg A deg B} BA
template <class C>
SuperMatrix<C> supercommutator(const SuperMatrix<C>& A, const SuperMatrix<C>& B) {
  const Degree dA = A.degree(), dB = B.degree();
  if (dA == Degree::mixed || dB == Degree::mixed)
    throw NumericError("supercommutator: mixed-degree input");
  const bool anti = dA == Degree::odd && dB == Degree::odd;
  return anti ? A * B + B * A : A * B - B * A;
}

enum class SlotPair { s12, s13, s23 };

// Embed R acting on V (x) V into V (x) V (x) V.
template <class C>
SuperMatrix<C> embed_three_site(const SuperMatrix<C>& R, const GradedSpace& V, SlotPair slot) {
  const auto I = SuperMatrix<C>::identity(V);
  switch (slot) {
    case SlotPair::s12:
      return graded_tensor_any(R, I);
    case SlotPair::s23:
      return graded_tensor_any(I, R);
    case SlotPair::s13: {
      const auto P12 = graded_tensor_any(graded_permutation<C>(V, V), I);
      return P12 * graded_tensor_any(I, R) * P12;
    }
  }
  throw UsageError("embed_three_site: bad slot");
}

}  // namespace qhat
