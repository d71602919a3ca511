// Scalar arithmetic, tolerance policy and seeded sampling of generic
// parameter points.  Everything here is precision-agnostic: the complex
// type C only needs the usual field operations, sqrt/abs via ADL and a
// nested value_type for its real part.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qhat {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Error taxonomy.  DegenerateError marks algebraically degenerate parameter
// loci (exit code 2 in the CLI); UsageError marks bad invocations (exit 64);
// NumericError marks solver failures that are neither.
// ---------------------------------------------------------------------------
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class C>
using real_t = typename C::value_type;

template <class R>
bool real_is_finite(const R& x) {
  using std::isfinite;  // ADL picks up multiprecision overloads
  return isfinite(x);
}

template <class C>
bool is_finite(const C& z) {
  return real_is_finite(z.real()) && real_is_finite(z.imag());
}

// Principal square root: Re(w) >= 0, and Im(w) >= 0 on the cut Re(w) = 0.
template <class C>
C sqrt_principal(const C& z) {
  using std::sqrt;
  C w = sqrt(z);
  if (w.real() < 0 || (w.real() == 0 && w.imag() < 0)) w = -w;
  return w;
}

struct Tolerance {
  double abs_eps{1e-10};
  double rel_eps{1e-10};
};

inline Tolerance default_tolerance(bool extended) {
  return extended ? Tolerance{1e-24, 1e-24} : Tolerance{1e-10, 1e-10};
}

template <class C>
bool approx_eq(const C& a, const C& b, Tolerance tol) {
  using std::abs;
  const auto d = abs(a - b);
  const auto ma = abs(a);
  const auto mb = abs(b);
  return d <= tol.abs_eps + tol.rel_eps * (ma > mb ? ma : mb);
}

// ---------------------------------------------------------------------------
// Deterministic sampling.  splitmix64 has a fully specified integer stream,
// so identical (seed, index) pairs give identical points on every platform;
// the standard-library distributions make no such promise.
// ---------------------------------------------------------------------------
struct SampleSeed {
  std::uint64_t seed{1};
};

struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1) with 53 random bits
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
};

struct GenericPoint {
  cplx q, g, xplus, gamma;
};

namespace detail {

inline cplx draw_annulus(SplitMix64& rng) {
  const double r = 0.5 + 1.5 * rng.uniform01();
  const double th = 2.0 * 3.141592653589793238462643383279502884 * rng.uniform01();
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace detail

// Deterministic generic point: moduli of q, g, x+, gamma in [0.5, 2] and at
// least 0.05 away from the degenerate loci q = +-1, g = 0, x+ in
// {0, +-xi, +-1/xi}.  The modulus floor already keeps g and x+ away from 0.
inline GenericPoint sample_generic_point(SampleSeed seed, std::uint64_t index) {
  SplitMix64 key(seed.seed);
  SplitMix64 rng(key.next() ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  constexpr double kExcl = 0.05;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const cplx q = detail::draw_annulus(rng);
    if (std::abs(q - 1.0) < kExcl || std::abs(q + 1.0) < kExcl) continue;
    const cplx g = detail::draw_annulus(rng);
    // the engine needs gtilde finite: stay away from the pole of its square
    const cplx qq = q - 1.0 / q;
    const cplx den = 1.0 - g * g * qq * qq;
    if (std::abs(den) < kExcl) continue;
    const cplx xi = cplx(0, -1) * sqrt_principal(g * g / den) * qq;
    cplx xplus;
    bool ok = false;
    for (int tries = 0; tries < 64 && !ok; ++tries) {
      xplus = detail::draw_annulus(rng);
      ok = std::abs(xplus - xi) >= kExcl && std::abs(xplus + xi) >= kExcl &&
           std::abs(xplus - 1.0 / xi) >= kExcl && std::abs(xplus + 1.0 / xi) >= kExcl;
    }
    if (!ok) continue;
    const cplx gamma = detail::draw_annulus(rng);
    return {q, g, xplus, gamma};
  }
  throw NumericError("sample_generic_point: exclusion zones could not be satisfied");
}

}  // namespace qhat
