#pragma once

// Test-side oracles, kept independent of the elimination and inertia code
// they are used to check.

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "k3g2/int_matrix.hpp"

namespace oracle {

using k3g2::Int;
using k3g2::IntMat;
using k3g2::Rat;

// gcd of all k x k minors (determinantal divisors). Invariant factors are
// the quotients d_k / d_{k-1}; independent of any elimination order.
inline Int gcd_of_minors(const IntMat& a, int k) {
  // enumerate row subsets, then column subsets, accumulate gcd of dets
  Int g(0);
  std::vector<int> ridx, cidx;
  std::function<void(int, int)> pick_cols = [&](int start, int depth) {
    if (g == 1) return;
    if (depth == k) {
      IntMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = a(ridx[i], cidx[j]);
      Int d = k3g2::determinant(sub);
      if (d < 0) d = -d;
      g = boost::multiprecision::gcd(g, d);
      return;
    }
    for (int c = start; c < a.cols(); ++c) {
      cidx.push_back(c);
      pick_cols(c + 1, depth + 1);
      cidx.pop_back();
    }
  };
  std::function<void(int, int)> pick_rows = [&](int start, int depth) {
    if (g == 1) return;
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = start; r < a.rows(); ++r) {
      ridx.push_back(r);
      pick_rows(r + 1, depth + 1);
      ridx.pop_back();
    }
  };
  pick_rows(0, 0);
  return g;
}

// All invariant factors (including 1s), via determinantal divisors.
inline std::vector<Int> invariant_factors_by_minors(const IntMat& a) {
  int maxk = std::min(a.rows(), a.cols());
  Int prev(1);
  std::vector<Int> out;
  for (int k = 1; k <= maxk; ++k) {
    Int dk = gcd_of_minors(a, k);
    if (dk == 0) break;  // rank reached
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Exact characteristic polynomial of an integer matrix (Faddeev-LeVerrier).
// Returns coefficients c[0..n] with p(x) = sum c[k] x^k, c[n] = 1.
inline std::vector<Int> char_poly(const IntMat& a) {
  int n = a.rows();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMat m(n, n);  // M_0 = 0
  IntMat id = IntMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} * I
    IntMat am = a * m;
    for (int i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    IntMat prod = a * m;
    Int tr(0);
    for (int i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

// Inertia of a symmetric integer matrix by Descartes' rule on the
// characteristic polynomial (all roots real, so sign variations count the
// positive eigenvalues exactly).
struct Inertia {
  int positive, zero, negative;
};

inline Inertia inertia_by_charpoly(const IntMat& a) {
  std::vector<Int> c = char_poly(a);
  int n = a.rows();
  int zero = 0;
  while (zero < n && c[zero] == 0) ++zero;
  int pos = 0;
  int prev_sign = 0;
  for (int k = zero; k <= n; ++k) {
    if (c[k] == 0) continue;
    int s = c[k] > 0 ? 1 : -1;
    if (prev_sign != 0 && s != prev_sign) ++pos;
    prev_sign = s;
  }
  return Inertia{pos, zero, n - zero - pos};
}

// Deterministic random matrices for property tests.
inline IntMat random_matrix(std::mt19937& rng, int rows, int cols, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline IntMat random_symmetric(std::mt19937& rng, int n, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int v = d(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

// Product of random elementary operations: always unimodular.
inline IntMat random_unimodular(std::mt19937& rng, int n, int ops = 12) {
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2), kind(0, 2);
  IntMat m = IntMat::identity(n);
  for (int s = 0; s < ops; ++s) {
    int i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j)
          for (int c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        break;
      case 1:
        for (int c = 0; c < n; ++c) m(i, c) = -m(i, c);
        break;
      default:
        if (i != j) {
          Int q(coef(rng));
          for (int c = 0; c < n; ++c) m(i, c) += q * m(j, c);
        }
    }
  }
  return m;
}

}  // namespace oracle
