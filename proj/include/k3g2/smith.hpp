#pragma once

#include <algorithm>
#include <cstdlib>

#include "k3g2/int_matrix.hpp"

namespace k3g2 {

// A = u * d * v with u, v unimodular, d diagonal with nonnegative entries
// satisfying d[i] | d[i+1]. The inverses are tracked during elimination;
// integer kernels and discriminant-group generators are read off v_inv.
struct SmithDecomposition {
  IntMat u, d, v;
  IntMat u_inv, v_inv;

  Int diag(int i) const {
    return (i < d.rows() && i < d.cols()) ? d(i, i) : Int(0);
  }
  int rank() const {
    int r = 0;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
      if (d(i, i) != 0) ++r;
    return r;
  }
  std::vector<Int> invariant_factors() const {
    std::vector<Int> out;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
      if (d(i, i) != 0 && d(i, i) != 1) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

// Elimination state keeping A = u * d * v invariant under every operation.
struct SmithState {
  IntMat d, u, u_inv, v, v_inv;

  explicit SmithState(const IntMat& a)
      : d(a),
        u(IntMat::identity(a.rows())),
        u_inv(IntMat::identity(a.rows())),
        v(IntMat::identity(a.cols())),
        v_inv(IntMat::identity(a.cols())) {}

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (int r = 0; r < u.rows(); ++r) std::swap(u(r, i), u(r, j));
    for (int c = 0; c < u_inv.cols(); ++c) std::swap(u_inv(i, c), u_inv(j, c));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (int c = 0; c < v.cols(); ++c) std::swap(v(i, c), v(j, c));
    for (int r = 0; r < v_inv.rows(); ++r) std::swap(v_inv(r, i), v_inv(r, j));
  }
  void row_negate(int i) {
    for (int c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (int r = 0; r < u.rows(); ++r) u(r, i) = -u(r, i);
    for (int c = 0; c < u_inv.cols(); ++c) u_inv(i, c) = -u_inv(i, c);
  }
  // row i += q * row j
  void row_add(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < d.cols(); ++c) d(i, c) += q * d(j, c);
    for (int r = 0; r < u.rows(); ++r) u(r, j) -= q * u(r, i);
    for (int c = 0; c < u_inv.cols(); ++c) u_inv(i, c) += q * u_inv(j, c);
  }
  // col i += q * col j
  void col_add(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows(); ++r) d(r, i) += q * d(r, j);
    for (int c = 0; c < v.cols(); ++c) v(j, c) -= q * v(i, c);
    for (int r = 0; r < v_inv.rows(); ++r) v_inv(r, i) += q * v_inv(r, j);
  }
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMat& a) {
  detail::SmithState s(a);
  const int m = a.rows(), n = a.cols();
  const int steps = std::min(m, n);

  for (int t = 0; t < steps; ++t) {
    // Locate a pivot of smallest absolute value in the trailing block.
    int pr = -1, pc = -1;
    Int best(0);
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (s.d(i, j) != 0) {
          Int v = detail::abs_int(s.d(i, j));
          if (pr < 0 || v < best) { best = v; pr = i; pc = j; }
        }
    if (pr < 0) break;
    s.row_swap(t, pr);
    s.col_swap(t, pc);

    for (;;) {
      // Reduce column t by the pivot; a nonzero remainder becomes the new,
      // strictly smaller pivot, so the loop terminates.
      bool reduced = true;
      for (int i = t + 1; i < m; ++i) {
        if (s.d(i, t) == 0) continue;
        Int q = s.d(i, t) / s.d(t, t);
        s.row_add(i, t, -q);
        if (s.d(i, t) != 0) {
          s.row_swap(t, i);
          reduced = false;
        }
      }
      if (!reduced) continue;
      for (int j = t + 1; j < n; ++j) {
        if (s.d(t, j) == 0) continue;
        Int q = s.d(t, j) / s.d(t, t);
        s.col_add(j, t, -q);
        if (s.d(t, j) != 0) {
          s.col_swap(t, j);
          reduced = false;
        }
      }
      if (!reduced) continue;

      // Divisibility fix: fold a bad row into row t and restart.
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            s.row_add(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (s.d(t, t) < 0) s.row_negate(t);
  }

  return SmithDecomposition{s.u, s.d, s.v, s.u_inv, s.v_inv};
}

// Basis of {x in Z^n : A x = 0}, as columns. The basis spans a direct
// summand of Z^n (columns of a unimodular matrix), hence is primitive.
inline IntMat integer_kernel_basis(const IntMat& a) {
  SmithDecomposition snf = smith_normal_form(a);
  const int n = a.cols();
  std::vector<int> free_cols;
  for (int i = 0; i < n; ++i)
    if (snf.diag(i) == 0) free_cols.push_back(i);
  IntMat out(n, int(free_cols.size()));
  for (int j = 0; j < int(free_cols.size()); ++j) {
    int c = free_cols[j];
    int lead = -1;
    for (int i = 0; i < n; ++i) {
      out(i, j) = snf.v_inv(i, c);
      if (lead < 0 && out(i, j) != 0) lead = i;
    }
    if (lead >= 0 && out(lead, j) < 0)
      for (int i = 0; i < n; ++i) out(i, j) = -out(i, j);
  }
  return out;
}

}  // namespace k3g2
