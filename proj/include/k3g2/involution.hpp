#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "k3g2/lattice.hpp"

namespace k3g2 {

struct NotTwoElementaryError : std::runtime_error {
  NotTwoElementaryError() : std::runtime_error("NotTwoElementary") {}
};

// The four isometries of H that permute basis vectors up to sign:
// M1 = I, M2 = -I, M3 = antidiag(1,1), M4 = antidiag(-1,-1).
inline IntMat m_matrix(int i) {
  switch (i) {
    case 1: return IntMat(2, 2, {1, 0, 0, 1});
    case 2: return IntMat(2, 2, {-1, 0, 0, -1});
    case 3: return IntMat(2, 2, {0, 1, 1, 0});
    case 4: return IntMat(2, 2, {0, -1, -1, 0});
    default: throw std::out_of_range("m_matrix: index must be in 1..4");
  }
}

// Index multiplication in the Klein four-group {M1..M4}:
// M2*M3 = M4, M2*M4 = M3, M3*M4 = M2.
inline int m_mul(int a, int b) {
  if (a == 1) return b;
  if (b == 1) return a;
  if (a == b) return 1;
  return 1 + 2 + 3 + 4 - 1 - a - b;
}

// Restriction of an involution to 3H. Either a diagonal of M-blocks or a
// form swapping two hyperbolic summands.
struct RhoPrimeSpec {
  enum class Kind { diagonal, swap_pair };
  Kind kind = Kind::diagonal;
  std::array<int, 3> blocks{1, 1, 1};  // diagonal: M-indices on H1, H2, H3
  std::array<int, 2> swapped{1, 2};    // swap: 1-based summand pair, first < second
  int swap_k = 1;                      // off-diagonal block M_k
  int swap_m = 1;                      // block M_m on the fixed summand

  static RhoPrimeSpec diagonal(int j, int k, int l) {
    RhoPrimeSpec s;
    s.kind = Kind::diagonal;
    s.blocks = {j, k, l};
    return s;
  }
  static RhoPrimeSpec swap(int s1, int s2, int k, int m) {
    if (s1 > s2) std::swap(s1, s2);
    RhoPrimeSpec s;
    s.kind = Kind::swap_pair;
    s.swapped = {s1, s2};
    s.swap_k = k;
    s.swap_m = m;
    return s;
  }

  IntMat matrix() const {
    IntMat out(6, 6);
    if (kind == Kind::diagonal) {
      for (int b = 0; b < 3; ++b) out.set_block(2 * b, 2 * b, m_matrix(blocks[b]));
    } else {
      int p = swapped[0] - 1, q = swapped[1] - 1;
      int f = 3 - p - q;
      out.set_block(2 * p, 2 * q, m_matrix(swap_k));
      out.set_block(2 * q, 2 * p, m_matrix(swap_k));
      out.set_block(2 * f, 2 * f, m_matrix(swap_m));
    }
    return out;
  }

  // Encoding used for canonical orbit representatives and deterministic
  // output ordering. Diagonal forms sort before swap forms.
  std::array<int, 6> encode() const {
    if (kind == Kind::diagonal) return {0, blocks[0], blocks[1], blocks[2], 0, 0};
    return {1, swapped[0], swapped[1], swap_k, swap_m, 0};
  }

  std::string label() const {
    if (kind == Kind::diagonal)
      return "d" + std::to_string(blocks[0]) + std::to_string(blocks[1]) +
             std::to_string(blocks[2]);
    return "s" + std::to_string(swapped[0]) + std::to_string(swapped[1]) + "k" +
           std::to_string(swap_k) + "m" + std::to_string(swap_m);
  }

  bool operator==(const RhoPrimeSpec& o) const { return encode() == o.encode(); }
  bool operator<(const RhoPrimeSpec& o) const { return encode() < o.encode(); }
};

// Recognize a 6x6 matrix as a rho' form. Conjugation by summand permutations
// and M-block diagonals stays inside this family.
inline std::optional<RhoPrimeSpec> recognize_prime(const IntMat& m) {
  auto block_index = [&](int br, int bc) -> int {
    IntMat b = m.block(2 * br, 2 * bc, 2, 2);
    for (int i = 1; i <= 4; ++i)
      if (b == m_matrix(i)) return i;
    return b.is_zero() ? 0 : -1;
  };
  int idx[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      idx[i][j] = block_index(i, j);
      if (idx[i][j] < 0) return std::nullopt;
    }
  bool diag = idx[0][1] == 0 && idx[0][2] == 0 && idx[1][0] == 0 && idx[1][2] == 0 &&
              idx[2][0] == 0 && idx[2][1] == 0;
  if (diag) {
    if (idx[0][0] == 0 || idx[1][1] == 0 || idx[2][2] == 0) return std::nullopt;
    return RhoPrimeSpec::diagonal(idx[0][0], idx[1][1], idx[2][2]);
  }
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      int f = 3 - p - q;
      if (idx[p][q] > 0 && idx[q][p] == idx[p][q] && idx[f][f] > 0 && idx[p][p] == 0 &&
          idx[q][q] == 0 && idx[p][f] == 0 && idx[f][p] == 0 && idx[q][f] == 0 &&
          idx[f][q] == 0)
        return RhoPrimeSpec::swap(p + 1, q + 1, idx[p][q], idx[f][f]);
    }
  return std::nullopt;
}

// Restriction to 2(-E8): plus/minus identity blocks, diagonal or swapped.
struct RhoDoublePrimeSpec {
  int index;  // 1..6

  explicit RhoDoublePrimeSpec(int t) : index(t) {
    if (t < 1 || t > 6) throw std::out_of_range("RhoDoublePrimeSpec: index must be in 1..6");
  }

  IntMat matrix() const {
    IntMat out(16, 16);
    IntMat i8 = IntMat::identity(8);
    IntMat mi8 = -i8;
    switch (index) {
      case 1: out.set_block(0, 0, i8);  out.set_block(8, 8, i8);  break;
      case 2: out.set_block(0, 0, i8);  out.set_block(8, 8, mi8); break;
      case 3: out.set_block(0, 0, mi8); out.set_block(8, 8, i8);  break;
      case 4: out.set_block(0, 0, mi8); out.set_block(8, 8, mi8); break;
      case 5: out.set_block(0, 8, i8);  out.set_block(8, 0, i8);  break;
      case 6: out.set_block(0, 8, mi8); out.set_block(8, 0, mi8); break;
    }
    return out;
  }

  std::string label() const { return "e" + std::to_string(index); }

  bool operator==(const RhoDoublePrimeSpec& o) const { return index == o.index; }
  bool operator<(const RhoDoublePrimeSpec& o) const { return index < o.index; }
};

inline std::optional<RhoDoublePrimeSpec> recognize_double_prime(const IntMat& m) {
  for (int t = 1; t <= 6; ++t)
    if (m == RhoDoublePrimeSpec(t).matrix()) return RhoDoublePrimeSpec(t);
  return std::nullopt;
}

// Full involution of the K3 lattice, rho = rho' + rho''.
struct K3Involution {
  IntMat matrix;  // 22x22
  RhoPrimeSpec prime;
  RhoDoublePrimeSpec double_prime;
};

inline const GramLattice& k3_lattice() {
  static const GramLattice l = k3_gram();
  return l;
}

inline K3Involution build_involution(const RhoPrimeSpec& prime,
                                     const RhoDoublePrimeSpec& dprime) {
  IntMat m = block_diag(prime.matrix(), dprime.matrix());
  const IntMat& g = k3_lattice().gram;
  if (!(m * m).is_identity() || m.transposed() * g * m != g)
    throw std::logic_error("build_involution: spec does not define a lattice involution");
  return K3Involution{std::move(m), prime, dprime};
}

// Primitive sublattice fixed by an isometry, with the restricted form.
struct FixedSublattice {
  IntMat basis;  // ambient_rank x r, columns form a primitive basis
  IntMat gram;   // r x r
};

inline FixedSublattice fixed_sublattice(const IntMat& isometry, const IntMat& ambient_gram) {
  IntMat basis = integer_kernel_basis(isometry - IntMat::identity(isometry.rows()));
  IntMat gram = basis.transposed() * ambient_gram * basis;
  return FixedSublattice{std::move(basis), std::move(gram)};
}

inline FixedSublattice fixed_sublattice(const K3Involution& inv) {
  return fixed_sublattice(inv.matrix, k3_lattice().gram);
}

struct TwoElementaryInvariants {
  int r = 0, a = 0, delta = 0;
  bool hyperbolic = false;

  std::array<int, 3> triple() const { return {r, a, delta}; }
  bool operator==(const TwoElementaryInvariants& o) const {
    return r == o.r && a == o.a && delta == o.delta && hyperbolic == o.hyperbolic;
  }
};

namespace detail {

// delta by brute force: norms of all 2^a cosets of L*/L must be integers.
// Cross terms 2 g_i . g_j of the generator Gram matrix are accumulated
// exactly; the subset enumeration is capped at 2^12 cosets.
inline int delta_bruteforce_impl(const IntMat& gram, const DiscriminantData& disc) {
  const int a = int(disc.invariant_factors.size());
  if (a == 0) return 0;
  if (a > 12) throw std::runtime_error("delta_bruteforce: coset enumeration cap exceeded");
  RatMat dual(a, a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      Rat s(0);
      const auto& gi = disc.coset_representatives[i];
      const auto& gj = disc.coset_representatives[j];
      for (int r = 0; r < gram.rows(); ++r)
        for (int c = 0; c < gram.cols(); ++c)
          if (gi[r] != 0 && gj[c] != 0) s += gi[r] * Rat(gram(r, c)) * gj[c];
      dual(i, j) = s;
    }
  for (unsigned long mask = 1; mask < (1ul << a); ++mask) {
    Rat norm(0);
    for (int i = 0; i < a; ++i) {
      if (!((mask >> i) & 1)) continue;
      norm += dual(i, i);
      for (int j = i + 1; j < a; ++j)
        if ((mask >> j) & 1) norm += 2 * dual(i, j);
    }
    if (!is_integer(norm)) return 1;
  }
  return 0;
}

// Shortcut: on a 2-elementary lattice integrality of the generator norms
// already decides delta, since all cross terms are integers.
inline int delta_generators_impl(const IntMat& gram, const DiscriminantData& disc) {
  for (const auto& g : disc.coset_representatives)
    if (!is_integer(rational_norm(gram, g))) return 1;
  return 0;
}

}  // namespace detail

inline int delta_bruteforce(const IntMat& gram) {
  return detail::delta_bruteforce_impl(gram, discriminant_data(gram));
}

inline int delta_generators(const IntMat& gram) {
  return detail::delta_generators_impl(gram, discriminant_data(gram));
}

// (r, a, delta) of a 2-elementary form, with the hyperbolicity flag.
// Rank 0 yields (0,0,0), not hyperbolic.
inline TwoElementaryInvariants invariants_of(const FixedSublattice& fixed) {
  TwoElementaryInvariants out;
  out.r = fixed.gram.rows();
  if (out.r == 0) return out;
  DiscriminantData disc = discriminant_data(fixed.gram);
  for (const auto& f : disc.invariant_factors)
    if (f != 2) throw NotTwoElementaryError();
  out.a = int(disc.invariant_factors.size());
  out.delta = detail::delta_bruteforce_impl(fixed.gram, disc);
  Signature sig = signature_of(fixed.gram);
  out.hyperbolic = (sig.positive == 1 && sig.zero == 0);
  return out;
}

// A non-symplectic involution candidate must fix a hyperbolic 2-elementary
// sublattice (exactly one positive direction).
inline bool is_simple_nonsymplectic_candidate(const K3Involution& inv) {
  FixedSublattice fixed = fixed_sublattice(inv);
  if (fixed.gram.rows() == 0) return false;
  DiscriminantData disc = discriminant_data(fixed.gram);
  for (const auto& f : disc.invariant_factors)
    if (f != 2) return false;
  return is_hyperbolic(fixed.gram);
}

}  // namespace k3g2
