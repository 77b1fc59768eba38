#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "k3g2/involution.hpp"

namespace k3g2 {

namespace detail {

using SmallMat = Matrix<long long>;

// Conjugators are signed permutation matrices, so g^{-1} = g^T and
// conjugation costs O(n^2): (g^T m g)(i,j) = s_i s_j m(row_i, row_j).
struct SignedPerm {
  std::vector<int> row;
  std::vector<long long> sign;
};

inline SignedPerm to_signed_perm(const SmallMat& g) {
  SignedPerm p;
  p.row.resize(g.cols());
  p.sign.resize(g.cols());
  for (int c = 0; c < g.cols(); ++c) {
    int hits = 0;
    for (int r = 0; r < g.rows(); ++r) {
      if (g(r, c) == 0) continue;
      ++hits;
      p.row[c] = r;
      p.sign[c] = g(r, c);
    }
    if (hits != 1 || (p.sign[c] != 1 && p.sign[c] != -1))
      throw std::logic_error("conjugator is not a signed permutation");
  }
  return p;
}

inline SmallMat conjugate(const SignedPerm& g, const SmallMat& m) {
  int n = m.rows();
  SmallMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = g.sign[i] * g.sign[j] * m(g.row[i], g.row[j]);
  return out;
}

// Group acting on 3H: summand permutations times diag(M_a, M_b, M_c).
inline const std::vector<SignedPerm>& prime_conjugators() {
  static const std::vector<SignedPerm> all = [] {
    std::vector<SignedPerm> out;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& perm : perms) {
      SmallMat p(6, 6);
      for (int b = 0; b < 3; ++b) {
        p(2 * perm[b], 2 * b) = 1;
        p(2 * perm[b] + 1, 2 * b + 1) = 1;
      }
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
          for (int c = 1; c <= 4; ++c) {
            SmallMat d(6, 6);
            d.set_block(0, 0, m_matrix(a).cast<long long>());
            d.set_block(2, 2, m_matrix(b).cast<long long>());
            d.set_block(4, 4, m_matrix(c).cast<long long>());
            out.push_back(to_signed_perm(p * d));
          }
    }
    return out;
  }();
  return all;
}

// Group acting on 2(-E8): the summand swap times diag(+-I8, +-I8).
inline const std::vector<SignedPerm>& double_prime_conjugators() {
  static const std::vector<SignedPerm> all = [] {
    std::vector<SignedPerm> out;
    for (int swap = 0; swap < 2; ++swap)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          SmallMat g(16, 16);
          for (int i = 0; i < 8; ++i) {
            g(swap ? 8 + i : i, i) = s1;
            g(swap ? i : 8 + i, 8 + i) = s2;
          }
          out.push_back(to_signed_perm(g));
        }
    return out;
  }();
  return all;
}

inline int m_block_index(const SmallMat& m, int br, int bc) {
  long long a = m(2 * br, 2 * bc), b = m(2 * br, 2 * bc + 1);
  long long c = m(2 * br + 1, 2 * bc), d = m(2 * br + 1, 2 * bc + 1);
  if (a == 1 && b == 0 && c == 0 && d == 1) return 1;
  if (a == -1 && b == 0 && c == 0 && d == -1) return 2;
  if (a == 0 && b == 1 && c == 1 && d == 0) return 3;
  if (a == 0 && b == -1 && c == -1 && d == 0) return 4;
  if (a == 0 && b == 0 && c == 0 && d == 0) return 0;
  return -1;
}

inline std::array<int, 6> encode_prime_small(const SmallMat& m) {
  int idx[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      idx[i][j] = m_block_index(m, i, j);
      if (idx[i][j] < 0) throw std::logic_error("conjugate left the rho' family");
    }
  if (idx[0][1] == 0 && idx[0][2] == 0 && idx[1][2] == 0 && idx[1][0] == 0 &&
      idx[2][0] == 0 && idx[2][1] == 0)
    return {0, idx[0][0], idx[1][1], idx[2][2], 0, 0};
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      int f = 3 - p - q;
      if (idx[p][q] > 0 && idx[q][p] == idx[p][q] && idx[f][f] > 0)
        return {1, p + 1, q + 1, idx[p][q], idx[f][f], 0};
    }
  throw std::logic_error("unrecognized rho' matrix");
}

inline RhoPrimeSpec decode_prime(const std::array<int, 6>& e) {
  if (e[0] == 0) return RhoPrimeSpec::diagonal(e[1], e[2], e[3]);
  return RhoPrimeSpec::swap(e[1], e[2], e[3], e[4]);
}

}  // namespace detail

// The classification's conjugation group on the full lattice: summand
// permutations of 3H with M-block diagonals, times the E8 swap with sign
// flips, acting by simultaneous conjugation of both pair members.
struct ConjugationGroup {
  std::vector<IntMat> generators;

  const std::vector<IntMat>& elements() const {
    if (closure_.empty()) compute_closure();
    return closure_;
  }

 private:
  mutable std::vector<IntMat> closure_;

  void compute_closure() const {
    using detail::SmallMat;
    std::vector<SmallMat> gens;
    for (const auto& g : generators) gens.push_back(g.cast<long long>());
    std::set<SmallMat> seen;
    std::vector<SmallMat> queue;
    SmallMat id = SmallMat::identity(generators.front().rows());
    seen.insert(id);
    queue.push_back(id);
    const size_t cap = 100000;
    for (size_t head = 0; head < queue.size(); ++head) {
      SmallMat cur = queue[head];
      for (const auto& g : gens) {
        SmallMat nxt = cur * g;
        if (seen.insert(nxt).second) {
          if (seen.size() > cap) throw std::runtime_error("conjugation group closure cap exceeded");
          queue.push_back(nxt);
        }
      }
    }
    for (const auto& m : queue) closure_.push_back(m.cast<Int>());
  }
};

inline ConjugationGroup pair_conjugation_group() {
  ConjugationGroup g;
  auto embed_prime = [](const IntMat& m6) {
    IntMat out = IntMat::identity(22);
    out.set_block(0, 0, m6);
    return out;
  };
  auto embed_dp = [](const IntMat& m16) {
    IntMat out = IntMat::identity(22);
    out.set_block(6, 6, m16);
    return out;
  };
  // transposition and 3-cycle of the H summands
  IntMat p12(6, 6), p123(6, 6);
  int t12[3] = {1, 0, 2}, t123[3] = {1, 2, 0};
  for (int b = 0; b < 3; ++b) {
    p12.set_block(2 * t12[b], 2 * b, IntMat::identity(2));
    p123.set_block(2 * t123[b], 2 * b, IntMat::identity(2));
  }
  g.generators.push_back(embed_prime(p12));
  g.generators.push_back(embed_prime(p123));
  // Klein generators M2, M3 on each H summand
  for (int b = 0; b < 3; ++b)
    for (int mi : {2, 3}) {
      IntMat d = IntMat::identity(6);
      d.set_block(2 * b, 2 * b, m_matrix(mi));
      g.generators.push_back(embed_prime(d));
    }
  // E8 swap and sign flips
  IntMat sw(16, 16);
  sw.set_block(0, 8, IntMat::identity(8));
  sw.set_block(8, 0, IntMat::identity(8));
  g.generators.push_back(embed_dp(sw));
  for (int half = 0; half < 2; ++half) {
    IntMat d = IntMat::identity(16);
    d.set_block(8 * half, 8 * half, -IntMat::identity(8));
    g.generators.push_back(embed_dp(d));
  }
  return g;
}

namespace detail {

inline bool fixes_single_positive_direction(const RhoPrimeSpec& s) {
  static std::map<std::array<int, 6>, bool> cache;
  auto it = cache.find(s.encode());
  if (it != cache.end()) return it->second;
  GramLattice h = hyperbolic_plane();
  IntMat g3h = direct_sum(direct_sum(h, h), h).gram;
  Signature sig = signature_of(fixed_sublattice(s.matrix(), g3h).gram);
  bool ok = sig.positive == 1 && sig.zero == 0;
  cache.emplace(s.encode(), ok);
  return ok;
}

inline bool trivial_common_fixed(const IntMat& m1, const IntMat& m2) {
  IntMat id = IntMat::identity(m1.rows());
  return integer_kernel_basis(vstack(m1 - id, m2 - id)).cols() == 0;
}

using PrimeKey = std::pair<std::array<int, 6>, std::array<int, 6>>;

inline PrimeKey canonical_prime_key(const SmallMat& m1, const SmallMat& m2) {
  PrimeKey best{{9, 0, 0, 0, 0, 0}, {9, 0, 0, 0, 0, 0}};
  for (const auto& g : prime_conjugators()) {
    PrimeKey k{encode_prime_small(conjugate(g, m1)), encode_prime_small(conjugate(g, m2))};
    if (k < best) best = k;
  }
  return best;
}

}  // namespace detail

// Ordered pairs of commuting rho' forms, each fixing exactly one positive
// direction, one canonical representative per simultaneous-conjugation
// orbit. The common-fixed-sublattice check is applied exactly where the
// classification applies it: to pairs of diagonal forms. The swap branches
// keep every commuting single-positive combination, which reproduces the
// published class counts 27 + 8 + 8 + 16; the pairs whose common fixed
// sublattice is nonzero are flagged downstream, not dropped.
inline const std::vector<std::pair<RhoPrimeSpec, RhoPrimeSpec>>& enumerate_prime_pairs() {
  static const auto result = [] {
    std::vector<RhoPrimeSpec> valid;
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          RhoPrimeSpec s = RhoPrimeSpec::diagonal(j, k, l);
          if (detail::fixes_single_positive_direction(s)) valid.push_back(s);
        }
    const int pairs3[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto& p : pairs3)
      for (int k = 1; k <= 4; ++k)
        for (int m = 1; m <= 4; ++m) {
          RhoPrimeSpec s = RhoPrimeSpec::swap(p[0], p[1], k, m);
          if (detail::fixes_single_positive_direction(s)) valid.push_back(s);
        }

    std::set<detail::PrimeKey> canon;
    for (const auto& s1 : valid) {
      IntMat m1 = s1.matrix();
      detail::SmallMat sm1 = m1.cast<long long>();
      for (const auto& s2 : valid) {
        IntMat m2 = s2.matrix();
        if (m1 * m2 != m2 * m1) continue;
        bool both_diagonal = s1.kind == RhoPrimeSpec::Kind::diagonal &&
                             s2.kind == RhoPrimeSpec::Kind::diagonal;
        if (both_diagonal && !detail::trivial_common_fixed(m1, m2)) continue;
        canon.insert(detail::canonical_prime_key(sm1, m2.cast<long long>()));
      }
    }
    std::vector<std::pair<RhoPrimeSpec, RhoPrimeSpec>> out;
    for (const auto& k : canon)
      out.emplace_back(detail::decode_prime(k.first), detail::decode_prime(k.second));
    return out;
  }();
  return result;
}

struct PrimePairCounts {
  int diag_diag = 0, swap_diag = 0, diag_swap = 0, swap_swap = 0;
  int total() const { return diag_diag + swap_diag + diag_swap + swap_swap; }
};

inline PrimePairCounts prime_pair_counts() {
  PrimePairCounts c;
  for (const auto& [a, b] : enumerate_prime_pairs()) {
    bool s1 = a.kind == RhoPrimeSpec::Kind::swap_pair;
    bool s2 = b.kind == RhoPrimeSpec::Kind::swap_pair;
    if (!s1 && !s2) ++c.diag_diag;
    else if (s1 && !s2) ++c.swap_diag;
    else if (!s1 && s2) ++c.diag_swap;
    else ++c.swap_swap;
  }
  return c;
}

// Ordered pairs of rho'' forms with trivial common fixed sublattice in
// 2(-E8), reduced modulo the E8-swap and sign-flip conjugations. Canonical
// representative: smallest index pair in the orbit.
inline const std::vector<std::pair<int, int>>& enumerate_double_prime_pairs() {
  static const auto result = [] {
    std::vector<std::pair<int, int>> out;
    std::set<std::pair<int, int>> seen;
    std::map<detail::SmallMat, int> index_of;
    for (int t = 1; t <= 6; ++t)
      index_of[RhoDoublePrimeSpec(t).matrix().cast<long long>()] = t;
    for (int t1 = 1; t1 <= 6; ++t1)
      for (int t2 = 1; t2 <= 6; ++t2) {
        IntMat m1 = RhoDoublePrimeSpec(t1).matrix();
        IntMat m2 = RhoDoublePrimeSpec(t2).matrix();
        if (m1 * m2 != m2 * m1) continue;
        if (!detail::trivial_common_fixed(m1, m2)) continue;
        std::pair<int, int> best{7, 7};
        for (const auto& g : detail::double_prime_conjugators()) {
          auto c1 = detail::conjugate(g, m1.cast<long long>());
          auto c2 = detail::conjugate(g, m2.cast<long long>());
          auto i1 = index_of.find(c1);
          auto i2 = index_of.find(c2);
          if (i1 == index_of.end() || i2 == index_of.end())
            throw std::logic_error("conjugate left the rho'' family");
          best = std::min(best, {i1->second, i2->second});
        }
        if (seen.insert(best).second) out.push_back(best);
      }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return result;
}

// A commuting pair of K3 lattice involutions; rho3 = rho1 * rho2 and all
// three invariant triples are stored. `trivial_intersection` records
// whether the fixed lattices of rho1 and rho2 meet only in 0; the published
// class list contains pairs where they do not, so this is a flag rather
// than a constructor requirement.
struct InvolutionPair {
  K3Involution rho1, rho2, rho3;
  std::array<TwoElementaryInvariants, 3> invariants;
  bool trivial_intersection = false;

  int rank_sum() const {
    return invariants[0].r + invariants[1].r + invariants[2].r;
  }
  // True when the pair can underlie a Z2 x Z2 action: distinct generators
  // and all three fixed lattices hyperbolic. The invariant-tuple census of
  // the classification runs over these pairs.
  bool action_candidate() const {
    return rho1.matrix != rho2.matrix && invariants[0].hyperbolic &&
           invariants[1].hyperbolic && invariants[2].hyperbolic;
  }
};

struct InvariantTuple {
  std::array<int, 6> ra;      // (r1,a1 | r2,a2 | r3,a3)
  std::array<int, 3> deltas;  // recorded; census keys on (r,a) only

  bool operator<(const InvariantTuple& o) const {
    return ra != o.ra ? ra < o.ra : deltas < o.deltas;
  }
  bool operator==(const InvariantTuple& o) const { return ra == o.ra && deltas == o.deltas; }
};

inline InvariantTuple invariant_tuple(const InvolutionPair& p) {
  InvariantTuple t;
  for (int i = 0; i < 3; ++i) {
    t.ra[2 * i] = p.invariants[i].r;
    t.ra[2 * i + 1] = p.invariants[i].a;
    t.deltas[i] = p.invariants[i].delta;
  }
  return t;
}

namespace detail {

inline InvolutionPair assemble_pair(const RhoPrimeSpec& p1, const RhoPrimeSpec& p2,
                                    int t1, int t2) {
  K3Involution r1 = build_involution(p1, RhoDoublePrimeSpec(t1));
  K3Involution r2 = build_involution(p2, RhoDoublePrimeSpec(t2));
  if (r1.matrix * r2.matrix != r2.matrix * r1.matrix)
    throw std::logic_error("classified pair does not commute");
  IntMat prod = r1.matrix * r2.matrix;
  auto p3 = recognize_prime(prod.block(0, 0, 6, 6));
  auto d3 = recognize_double_prime(prod.block(6, 6, 16, 16));
  if (!p3 || !d3) throw std::logic_error("product is not of the simple form");
  K3Involution r3{prod, *p3, *d3};
  InvolutionPair pair{std::move(r1), std::move(r2), std::move(r3), {}};
  for (int i = 0; i < 3; ++i) {
    const K3Involution& inv = i == 0 ? pair.rho1 : i == 1 ? pair.rho2 : pair.rho3;
    pair.invariants[i] = invariants_of(fixed_sublattice(inv));
  }
  if (!pair.invariants[0].hyperbolic || !pair.invariants[1].hyperbolic)
    throw std::logic_error("generator fixed lattice is not hyperbolic");
  pair.trivial_intersection = trivial_common_fixed(pair.rho1.matrix, pair.rho2.matrix);
  return pair;
}

}  // namespace detail

// All 531 canonical pairs: the Cartesian product of the reduced rho' pair
// list with the reduced rho'' pair list.
inline std::vector<InvolutionPair> classify_pairs(int threads = 0) {
  const auto& primes = enumerate_prime_pairs();
  const auto& dps = enumerate_double_prime_pairs();
  struct Job { const RhoPrimeSpec* p1; const RhoPrimeSpec* p2; int t1, t2; };
  std::vector<Job> jobs;
  for (const auto& [p1, p2] : primes)
    for (const auto& [t1, t2] : dps) jobs.push_back({&p1, &p2, t1, t2});

  std::vector<std::optional<InvolutionPair>> slots(jobs.size());
  int nthreads = threads > 0 ? threads : 1;
  auto worker = [&](int tid) {
    for (size_t i = tid; i < jobs.size(); i += nthreads)
      slots[i] = detail::assemble_pair(*jobs[i].p1, *jobs[i].p2, jobs[i].t1, jobs[i].t2);
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<InvolutionPair> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Distinct invariant tuples over the pairs that can underlie an action.
inline std::vector<InvariantTuple> tuple_census(const std::vector<InvolutionPair>& pairs) {
  std::set<std::array<int, 6>> seen;
  std::vector<InvariantTuple> out;
  for (const auto& p : pairs) {
    if (!p.action_candidate()) continue;
    InvariantTuple t = invariant_tuple(p);
    if (seen.insert(t.ra).second) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (r', a') six-tuples of the reduced rho' pair classes, computed on 3H.
// Restricted to classes with distinct generators and all three fixed
// sublattices of signature (1, *): the same restriction as tuple_census.
inline std::set<std::array<int, 6>> prime_tuple_census() {
  GramLattice h = hyperbolic_plane();
  IntMat g3h = direct_sum(direct_sum(h, h), h).gram;
  std::set<std::array<int, 6>> out;
  for (const auto& [s1, s2] : enumerate_prime_pairs()) {
    IntMat m1 = s1.matrix(), m2 = s2.matrix();
    if (m1 == m2) continue;
    std::array<int, 6> t;
    bool hyperbolic3 = true;
    const IntMat mats[3] = {m1, m2, m1 * m2};
    for (int i = 0; i < 3; ++i) {
      FixedSublattice f = fixed_sublattice(mats[i], g3h);
      Signature sig = signature_of(f.gram);
      if (sig.positive != 1) hyperbolic3 = false;
      TwoElementaryInvariants v = invariants_of(f);
      t[2 * i] = v.r;
      t[2 * i + 1] = v.a;
    }
    if (hyperbolic3) out.insert(t);
  }
  return out;
}

inline std::set<std::array<int, 6>> double_prime_tuple_census() {
  IntMat g = direct_sum(minus_e8(), minus_e8()).gram;
  std::set<std::array<int, 6>> out;
  for (const auto& [t1, t2] : enumerate_double_prime_pairs()) {
    IntMat m1 = RhoDoublePrimeSpec(t1).matrix(), m2 = RhoDoublePrimeSpec(t2).matrix();
    std::array<int, 6> t;
    const IntMat mats[3] = {m1, m2, m1 * m2};
    for (int i = 0; i < 3; ++i) {
      TwoElementaryInvariants v = invariants_of(fixed_sublattice(mats[i], g));
      t[2 * i] = v.r;
      t[2 * i + 1] = v.a;
    }
    out.insert(t);
  }
  return out;
}

// Invariants of all simple involution candidates: any rho' form with one
// positive fixed direction combined with any rho'' form.
inline std::set<std::array<int, 3>> simple_triples() {
  std::set<std::array<int, 3>> out;
  std::vector<RhoPrimeSpec> specs;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l) specs.push_back(RhoPrimeSpec::diagonal(j, k, l));
  const int pairs3[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (auto& p : pairs3)
    for (int k = 1; k <= 4; ++k)
      for (int m = 1; m <= 4; ++m) specs.push_back(RhoPrimeSpec::swap(p[0], p[1], k, m));
  for (const auto& s : specs) {
    if (!detail::fixes_single_positive_direction(s)) continue;
    for (int t = 1; t <= 6; ++t) {
      K3Involution inv = build_involution(s, RhoDoublePrimeSpec(t));
      out.insert(invariants_of(fixed_sublattice(inv)).triple());
    }
  }
  return out;
}

// Matching criterion for the twisted-connected-sum construction.
inline bool kovalev_lee_admissible(int r1, int a1, int r2, int a2) {
  return r1 + r2 <= 11 || r1 + r2 + a1 + a2 < 22;
}

}  // namespace k3g2
