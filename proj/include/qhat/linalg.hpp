// Dense complex matrices with a spectral null-space solver.  The SVD is a
// one-sided Jacobi on the R factor of a Householder QR: rank decisions must
// be spectral rather than pivot-based, and one-sided Jacobi keeps full
// relative accuracy on the small singular values that decide nullity.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "qhat/numerics.hpp"

namespace qhat {

template <class C>
struct Mat {
  int m{0}, n{0};
  std::vector<C> a;  // column-major: a[i + j*m]

  Mat() = default;
  Mat(int rows, int cols) : m(rows), n(cols), a(std::size_t(rows) * cols, C(0)) {}

  C& operator()(int i, int j) { return a[std::size_t(i) + std::size_t(j) * m]; }
  const C& operator()(int i, int j) const { return a[std::size_t(i) + std::size_t(j) * m]; }

  static Mat identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = C(1);
    return I;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  Mat& operator*=(const C& s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(const C& s, Mat x) { return x *= s; }
  friend Mat operator-(Mat x) {
    for (auto& v : x.a) v = -v;
    return x;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.m, y.n);
    for (int j = 0; j < y.n; ++j)
      for (int k = 0; k < x.n; ++k) {
        const C yk = y(k, j);
        if (yk == C(0)) continue;
        const C* xc = &x.a[std::size_t(k) * x.m];
        C* rc = &r.a[std::size_t(j) * r.m];
        for (int i = 0; i < x.m; ++i) rc[i] += xc[i] * yk;
      }
    return r;
  }

  real_t<C> max_abs() const {
    using std::abs;
    real_t<C> w(0);
    for (const auto& x : a) {
      const auto v = abs(x);
      if (v > w) w = v;
    }
    return w;
  }
};

template <class C>
real_t<C> distance(const Mat<C>& x, const Mat<C>& y) {
  return (x - y).max_abs();
}

// Economy QR by Householder reflections; returns the n x n upper factor,
// whose singular values coincide with those of A.  Requires m >= n.
template <class C>
Mat<C> qr_upper(Mat<C> A) {
  using std::abs;
  using std::sqrt;
  using RT = real_t<C>;
  const int m = A.m, n = A.n;
  std::vector<C> v(m);
  for (int k = 0; k < n && k < m - 1; ++k) {
    RT nx2(0);
    for (int i = k; i < m; ++i) {
      const auto ax = abs(A(i, k));
      nx2 += ax * ax;
    }
    if (nx2 == RT(0)) continue;
    const RT nx = sqrt(nx2);
    const C x0 = A(k, k);
    const auto ax0 = abs(x0);
    const C phase = (ax0 == RT(0)) ? C(1) : x0 / C(ax0);
    const C alpha = -phase * C(nx);
    RT vv(0);
    for (int i = k; i < m; ++i) {
      v[i] = A(i, k) - (i == k ? alpha : C(0));
      const auto av = abs(v[i]);
      vv += av * av;
    }
    if (vv == RT(0)) continue;
    const RT beta = RT(2) / vv;
    for (int j = k; j < n; ++j) {
      C w(0);
      for (int i = k; i < m; ++i) w += conj(v[i]) * A(i, j);
      w *= C(beta);
      for (int i = k; i < m; ++i) A(i, j) -= w * v[i];
    }
    A(k, k) = alpha;
    for (int i = k + 1; i < m; ++i) A(i, k) = C(0);
  }
  Mat<C> R(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j && i < n; ++i) R(i, j) = A(i, j);
  return R;
}

template <class C>
struct SvdResult {
  std::vector<real_t<C>> sv;  // descending
  Mat<C> V;                   // right singular vectors, columns match sv
};

// One-sided Jacobi: orthogonalise the columns of A by right rotations.
template <class C>
SvdResult<C> jacobi_svd(Mat<C> A) {
  using std::abs;
  using std::sqrt;
  using RT = real_t<C>;
  const int m = A.m, n = A.n;
  Mat<C> V = Mat<C>::identity(n);
  const RT eps = std::numeric_limits<RT>::epsilon();
  bool converged = false;
  for (int sweep = 0; sweep < 64 && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        RT app(0), aqq(0);
        C apq(0);
        const C* cp = &A.a[std::size_t(p) * m];
        const C* cq = &A.a[std::size_t(q) * m];
        for (int i = 0; i < m; ++i) {
          const auto vp = abs(cp[i]);
          const auto vq = abs(cq[i]);
          app += vp * vp;
          aqq += vq * vq;
          apq += conj(cp[i]) * cq[i];
        }
        const RT off = abs(apq);
        if (off <= eps * sqrt(app * aqq) || off == RT(0)) continue;
        converged = false;
        const C phase = apq / C(off);
        const RT tau = (aqq - app) / (RT(2) * off);
        const RT t = (tau >= RT(0) ? RT(1) : RT(-1)) / (abs(tau) + sqrt(RT(1) + tau * tau));
        const RT cth = RT(1) / sqrt(RT(1) + t * t);
        const RT sth = cth * t;
        const C cs = C(cth);
        const C sp = C(sth) * phase;
        const C spc = C(sth) * conj(phase);
        C* wp = &A.a[std::size_t(p) * m];
        C* wq = &A.a[std::size_t(q) * m];
        for (int i = 0; i < m; ++i) {
          const C xp = wp[i], xq = wq[i];
          wp[i] = cs * xp - spc * xq;
          wq[i] = sp * xp + cs * xq;
        }
        C* vp = &V.a[std::size_t(p) * n];
        C* vq = &V.a[std::size_t(q) * n];
        for (int i = 0; i < n; ++i) {
          const C xp = vp[i], xq = vq[i];
          vp[i] = cs * xp - spc * xq;
          vq[i] = sp * xp + cs * xq;
        }
      }
    }
  }
  if (!converged) throw NumericError("jacobi_svd: rotation sweeps did not converge");
  SvdResult<C> out;
  out.sv.resize(n);
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) {
    RT s2(0);
    for (int i = 0; i < m; ++i) {
      const auto v = abs(A(i, j));
      s2 += v * v;
    }
    out.sv[j] = sqrt(s2);
    order[j] = j;
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) { return out.sv[x] > out.sv[y]; });
  std::vector<real_t<C>> sv(n);
  Mat<C> Vs(n, n);
  for (int j = 0; j < n; ++j) {
    sv[j] = out.sv[order[j]];
    for (int i = 0; i < n; ++i) Vs(i, j) = V(i, order[j]);
  }
  out.sv = std::move(sv);
  out.V = std::move(Vs);
  return out;
}

template <class C>
struct NullSpaceResult {
  int dimension{0};
  std::vector<std::vector<C>> basis;  // orthonormal, most singular first
  std::vector<real_t<C>> singular_values;  // descending
};

template <class C>
NullSpaceResult<C> null_space(const Mat<C>& M, Tolerance tol) {
  using RT = real_t<C>;
  Mat<C> W;
  if (M.m > M.n) {
    W = qr_upper(M);
  } else if (M.m < M.n) {
    W = Mat<C>(M.n, M.n);  // zero-padding rows preserves the spectrum
    for (int j = 0; j < M.n; ++j)
      for (int i = 0; i < M.m; ++i) W(i, j) = M(i, j);
  } else {
    W = M;
  }
  auto svd = jacobi_svd(std::move(W));
  NullSpaceResult<C> out;
  out.singular_values = svd.sv;
  const RT smax = svd.sv.empty() ? RT(0) : svd.sv.front();
  const RT thr = RT(tol.abs_eps) * smax;
  int dim = 0;
  for (const auto& s : svd.sv)
    if (s <= thr) ++dim;
  out.dimension = dim;
  const int n = M.n;
  for (int k = 0; k < dim; ++k) {
    std::vector<C> b(n);
    for (int i = 0; i < n; ++i) b[i] = svd.V(i, n - 1 - k);
    out.basis.push_back(std::move(b));
  }
  return out;
}

}  // namespace qhat
