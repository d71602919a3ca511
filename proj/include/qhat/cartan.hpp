// Static Cartan data: the distinguished Dynkin diagram of the centrally
// extended algebra (nodes 1..4, odd nodes 2 and 4) and the affine gl(n)
// cycle.  Node indexing is 1-based in all public labels.
#pragma once

#include <vector>

#include "qhat/numerics.hpp"

namespace qhat {

struct CartanData {
  int n{0};
  std::vector<int> A;            // n x n, row-major
  std::vector<int> D;            // diagonal symmetrizer
  std::vector<int> DA;           // D*A, symmetric
  std::vector<int> node_parity;  // 1 on odd (fermionic) nodes

  int a(int i, int j) const { return A[i * n + j]; }
  int da(int i, int j) const { return DA[i * n + j]; }
};

inline CartanData cartan_qhat() {
  CartanData c;
  c.n = 4;
  c.A = {+2, -1, 0, -1,   //
         +1, 0, -1, 0,    //
         0, -1, +2, -1,   //
         +1, 0, -1, 0};
  c.D = {+1, -1, -1, -1};
  c.node_parity = {0, 1, 0, 1};
  c.DA.assign(16, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.DA[i * 4 + j] = c.D[i] * c.A[i * 4 + j];
  return c;
}

inline CartanData cartan_affine_gln(int n) {
  if (n < 3) throw UsageError("cartan_affine_gln: n must be at least 3");
  CartanData c;
  c.n = n;
  c.A.assign(std::size_t(n) * n, 0);
  c.D.assign(n, 1);
  c.node_parity.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    c.A[i * n + i] = 2;
    c.A[i * n + (i + 1) % n] = -1;
    c.A[i * n + (i + n - 1) % n] = -1;
  }
  c.DA = c.A;
  return c;
}

}  // namespace qhat
