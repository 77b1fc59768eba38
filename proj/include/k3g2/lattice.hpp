#pragma once

#include <stdexcept>
#include <vector>

#include "k3g2/int_matrix.hpp"
#include "k3g2/smith.hpp"

namespace k3g2 {

struct DegenerateFormError : std::runtime_error {
  DegenerateFormError() : std::runtime_error("DegenerateForm") {}
};

// A lattice given by the Gram matrix of its bilinear form in a fixed basis.
struct GramLattice {
  int rank;
  IntMat gram;

  GramLattice(int rank_, IntMat gram_) : rank(rank_), gram(std::move(gram_)) {
    if (gram.rows() != rank || gram.cols() != rank || !gram.is_symmetric())
      throw std::invalid_argument("GramLattice: gram must be symmetric rank x rank");
  }

  bool is_even() const {
    for (int i = 0; i < rank; ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }
};

// Hyperbolic plane H: q(x, y) = 2xy.
inline GramLattice hyperbolic_plane() {
  return GramLattice(2, IntMat(2, 2, {0, 1, 1, 0}));
}

// Negative of the E8 Cartan matrix, Bourbaki node labels: the chain
// 1-3-4-5-6-7-8 plus node 2 attached to node 4.
inline GramLattice minus_e8() {
  IntMat g(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = -2;
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto& e : edges) {
    g(e[0] - 1, e[1] - 1) = 1;
    g(e[1] - 1, e[0] - 1) = 1;
  }
  return GramLattice(8, g);
}

// Rank-one lattice generated by a vector of square k.
inline GramLattice rank_one(const Int& k) {
  return GramLattice(1, IntMat(1, 1, {k}));
}

// L(k): same module, bilinear form scaled by k.
inline GramLattice rescale(const GramLattice& l, const Int& k) {
  IntMat g = l.gram;
  for (int i = 0; i < l.rank; ++i)
    for (int j = 0; j < l.rank; ++j) g(i, j) *= k;
  return GramLattice(l.rank, g);
}

inline GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  return GramLattice(a.rank + b.rank, block_diag(a.gram, b.gram));
}

// K3 lattice 3H + 2(-E8) in the standard basis: (w1,w2),(w3,w4),(w5,w6) span
// the hyperbolic planes, (w7..w14) and (w15..w22) the two -E8 summands.
inline GramLattice k3_gram() {
  GramLattice h = hyperbolic_plane();
  GramLattice e = minus_e8();
  return direct_sum(direct_sum(direct_sum(h, h), direct_sum(h, e)), e);
}

struct Signature {
  int positive = 0, zero = 0, negative = 0;
  bool operator==(const Signature&) const = default;
};

// Exact inertia of a symmetric integer form: symmetric Gaussian elimination
// over the rationals, no floating point.
inline Signature signature_of(const IntMat& gram) {
  if (!gram.is_symmetric())
    throw std::invalid_argument("signature_of: matrix must be symmetric");
  int n = gram.rows();
  RatMat m = gram.cast<Rat>();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  Signature sig;
  // Active submatrix is idx[k..]; each step removes one index.
  int k = 0;
  auto at = [&](int i, int j) -> Rat& { return m(idx[i], idx[j]); };
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (at(i, i) != 0) { piv = i; break; }
    if (piv < 0) {
      // All diagonal zero: either the row is fully zero (null direction) or
      // an off-diagonal entry survives; folding column j into column k makes
      // the diagonal entry 2*m(k,j) != 0.
      int j = -1;
      for (int jj = k + 1; jj < n && j < 0; ++jj)
        if (at(k, jj) != 0) j = jj;
      if (j < 0) {
        ++sig.zero;
        ++k;
        continue;
      }
      for (int t = 0; t < n; ++t) m(idx[k], idx[t]) += m(idx[j], idx[t]);
      for (int t = 0; t < n; ++t) m(idx[t], idx[k]) += m(idx[t], idx[j]);
      continue;
    }
    std::swap(idx[k], idx[piv]);
    const Rat d = at(k, k);
    if (d > 0) ++sig.positive; else ++sig.negative;
    for (int i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      Rat f = at(i, k) / d;
      for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
      for (int j = k; j < n; ++j) at(j, i) = at(i, j);
    }
    ++k;
  }
  return sig;
}

inline bool is_hyperbolic(const IntMat& gram) {
  Signature s = signature_of(gram);
  return s.positive == 1 && s.zero == 0 && s.negative == gram.rows() - 1;
}

// Invariant factors of L*/L together with generating coset representatives,
// written as rational vectors in the basis of L (coordinates reduced mod 1).
struct DiscriminantData {
  std::vector<Int> invariant_factors;
  std::vector<std::vector<Rat>> coset_representatives;

  Int group_order() const {
    Int o(1);
    for (const auto& f : invariant_factors) o *= f;
    return o;
  }
};

inline DiscriminantData discriminant_data(const IntMat& gram) {
  if (!gram.is_symmetric())
    throw std::invalid_argument("discriminant_data: matrix must be symmetric");
  const int n = gram.rows();
  SmithDecomposition snf = smith_normal_form(gram);
  if (snf.rank() != n) throw DegenerateFormError();

  // gram = u d v, so L*/L = G^{-1}Z^n / Z^n is generated by the columns
  // (1/d_i) * v_inv e_i of order d_i.
  DiscriminantData out;
  for (int i = 0; i < n; ++i) {
    Int di = snf.diag(i);
    if (di == 1) continue;
    out.invariant_factors.push_back(di);
    std::vector<Rat> gen(n);
    for (int r = 0; r < n; ++r) gen[r] = frac_part(Rat(snf.v_inv(r, i), di));
    out.coset_representatives.push_back(std::move(gen));
  }
  return out;
}

// q-value of a rational vector in basis coordinates: x^T gram x.
inline Rat rational_norm(const IntMat& gram, const std::vector<Rat>& x) {
  Rat out(0);
  for (int i = 0; i < gram.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < gram.cols(); ++j) {
      if (x[j] == 0) continue;
      out += x[i] * Rat(gram(i, j)) * x[j];
    }
  }
  return out;
}

}  // namespace k3g2
