#include <catch2/catch_amalgamated.hpp>

#include "k3g2/involution.hpp"
#include "oracles.hpp"

using namespace k3g2;

namespace {

std::vector<RhoPrimeSpec> all_prime_specs() {
  std::vector<RhoPrimeSpec> out;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l) out.push_back(RhoPrimeSpec::diagonal(j, k, l));
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (auto& p : pairs)
    for (int k = 1; k <= 4; ++k)
      for (int m = 1; m <= 4; ++m) out.push_back(RhoPrimeSpec::swap(p[0], p[1], k, m));
  return out;
}

IntMat gram_3h() {
  GramLattice h = hyperbolic_plane();
  return direct_sum(direct_sum(h, h), h).gram;
}

TwoElementaryInvariants invariants_on(const IntMat& isometry, const IntMat& gram) {
  return invariants_of(fixed_sublattice(isometry, gram));
}

}  // namespace

TEST_CASE("M matrices") {
  REQUIRE(m_matrix(1) == IntMat::identity(2));
  REQUIRE(m_matrix(2) == -IntMat::identity(2));
  REQUIRE(m_matrix(3) == IntMat(2, 2, {0, 1, 1, 0}));
  REQUIRE(m_matrix(4) == IntMat(2, 2, {0, -1, -1, 0}));
  IntMat h = hyperbolic_plane().gram;
  for (int i = 1; i <= 4; ++i) {
    REQUIRE((m_matrix(i) * m_matrix(i)).is_identity());
    REQUIRE(m_matrix(i).transposed() * h * m_matrix(i) == h);
  }
  REQUIRE_THROWS_AS(m_matrix(5), std::out_of_range);
  // Klein four-group multiplication helper matches the matrices
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      REQUIRE(m_matrix(a) * m_matrix(b) == m_matrix(m_mul(a, b)));
}

TEST_CASE("build_involution on the named specs") {
  SECTION("d122 + e4 fixes a copy of H") {
    K3Involution inv = build_involution(RhoPrimeSpec::diagonal(1, 2, 2), RhoDoublePrimeSpec(4));
    FixedSublattice fix = fixed_sublattice(inv);
    REQUIRE(fix.gram.rows() == 2);
    TwoElementaryInvariants t = invariants_of(fix);
    REQUIRE(t.triple() == std::array<int, 3>{2, 0, 0});
    REQUIRE(t.hyperbolic);
    REQUIRE(fix.gram == hyperbolic_plane().gram);
  }
  SECTION("s12k1m2 + e1 fixes H(2) + 2(-E8)") {
    K3Involution inv = build_involution(RhoPrimeSpec::swap(1, 2, 1, 2), RhoDoublePrimeSpec(1));
    TwoElementaryInvariants t = invariants_of(fixed_sublattice(inv));
    REQUIRE(t.r == 18);
    REQUIRE(t.a == 2);
    REQUIRE(t.delta == 0);
    REQUIRE(t.hyperbolic);
  }
  SECTION("d111 + e1 is the identity") {
    K3Involution inv = build_involution(RhoPrimeSpec::diagonal(1, 1, 1), RhoDoublePrimeSpec(1));
    REQUIRE(inv.matrix.is_identity());
  }
}

TEST_CASE("fixed sublattices of extreme involutions") {
  REQUIRE(fixed_sublattice(build_involution(RhoPrimeSpec::diagonal(1, 1, 1),
                                            RhoDoublePrimeSpec(1))).gram.rows() == 22);
  REQUIRE(fixed_sublattice(build_involution(RhoPrimeSpec::diagonal(2, 2, 2),
                                            RhoDoublePrimeSpec(4))).gram.rows() == 0);
  FixedSublattice f = fixed_sublattice(
      build_involution(RhoPrimeSpec::diagonal(3, 2, 2), RhoDoublePrimeSpec(4)));
  REQUIRE(f.gram == IntMat(1, 1, {2}));
}

TEST_CASE("invariants_of on the table lattices") {
  auto inv_of_gram = [](const IntMat& g) {
    IntMat basis = IntMat::identity(g.rows());
    return invariants_of(FixedSublattice{basis, g});
  };
  SECTION("H -> (2,0,0), hyperbolic") {
    TwoElementaryInvariants t = inv_of_gram(hyperbolic_plane().gram);
    REQUIRE(t.triple() == std::array<int, 3>{2, 0, 0});
    REQUIRE(t.hyperbolic);
  }
  SECTION("diag(2,-2) -> (2,2,1)") {
    TwoElementaryInvariants t = inv_of_gram(IntMat(2, 2, {2, 0, 0, -2}));
    REQUIRE(t.triple() == std::array<int, 3>{2, 2, 1});
  }
  SECTION("-E8(2) -> (8,8,0), not hyperbolic") {
    TwoElementaryInvariants t = inv_of_gram(rescale(minus_e8(), 2).gram);
    REQUIRE(t.triple() == std::array<int, 3>{8, 8, 0});
    REQUIRE(!t.hyperbolic);
  }
  SECTION("rank 0 -> (0,0,0), not hyperbolic") {
    TwoElementaryInvariants t = invariants_of(FixedSublattice{IntMat(2, 0), IntMat(0, 0)});
    REQUIRE(t.triple() == std::array<int, 3>{0, 0, 0});
    REQUIRE(!t.hyperbolic);
  }
  SECTION("a form with an invariant factor above 2 is rejected") {
    REQUIRE_THROWS_AS(inv_of_gram(IntMat(1, 1, {4})), NotTwoElementaryError);
  }
}

TEST_CASE("rho' invariant table") {
  IntMat g3h = gram_3h();
  auto table = [&](int j, int k, int l) {
    return invariants_on(RhoPrimeSpec::diagonal(j, k, l).matrix(), g3h).triple();
  };
  REQUIRE(table(1, 2, 2) == std::array<int, 3>{2, 0, 0});
  REQUIRE(table(1, 2, 4) == std::array<int, 3>{3, 1, 1});
  REQUIRE(table(1, 4, 4) == std::array<int, 3>{4, 2, 1});
  REQUIRE(table(3, 2, 2) == std::array<int, 3>{1, 1, 1});
  REQUIRE(table(3, 2, 4) == std::array<int, 3>{2, 2, 1});
  REQUIRE(table(3, 4, 4) == std::array<int, 3>{3, 3, 1});
  for (int k = 1; k <= 4; ++k) {
    REQUIRE(invariants_on(RhoPrimeSpec::swap(1, 2, k, 2).matrix(), g3h).triple() ==
            std::array<int, 3>{2, 2, 0});
    REQUIRE(invariants_on(RhoPrimeSpec::swap(1, 2, k, 4).matrix(), g3h).triple() ==
            std::array<int, 3>{3, 3, 1});
  }
}

TEST_CASE("rho'' invariant table") {
  IntMat g2e8 = direct_sum(minus_e8(), minus_e8()).gram;
  auto table = [&](int t) {
    return invariants_on(RhoDoublePrimeSpec(t).matrix(), g2e8).triple();
  };
  REQUIRE(table(1) == std::array<int, 3>{16, 0, 0});
  REQUIRE(table(2) == std::array<int, 3>{8, 0, 0});
  REQUIRE(table(3) == std::array<int, 3>{8, 0, 0});
  REQUIRE(table(4) == std::array<int, 3>{0, 0, 0});
  REQUIRE(table(5) == std::array<int, 3>{8, 8, 0});
  REQUIRE(table(6) == std::array<int, 3>{8, 8, 0});
}

TEST_CASE("every spec builds an involutive isometry") {
  const IntMat& g = k3_lattice().gram;
  const IntMat id = IntMat::identity(22);
  auto primes = all_prime_specs();
  REQUIRE(primes.size() == 112);
  IntMat g3h = gram_3h();
  IntMat g2e8 = direct_sum(minus_e8(), minus_e8()).gram;
  for (const auto& p : primes) {
    for (int t = 1; t <= 6; ++t) {
      K3Involution inv = build_involution(p, RhoDoublePrimeSpec(t));
      REQUIRE((inv.matrix * inv.matrix).is_identity());
      REQUIRE(inv.matrix.transposed() * g * inv.matrix == g);
      // eigenlattice ranks fill the whole lattice
      int plus = integer_kernel_basis(inv.matrix - id).cols();
      int minus = integer_kernel_basis(inv.matrix + id).cols();
      REQUIRE(plus + minus == 22);
      // direct-sum rule: invariants of the full fixed lattice combine the
      // block invariants as (r'+r'', a'+a'', max(delta', delta''))
      TwoElementaryInvariants whole = invariants_of(fixed_sublattice(inv));
      TwoElementaryInvariants tp = invariants_on(p.matrix(), g3h);
      TwoElementaryInvariants td = invariants_on(RhoDoublePrimeSpec(t).matrix(), g2e8);
      REQUIRE(whole.r == tp.r + td.r);
      REQUIRE(whole.a == tp.a + td.a);
      REQUIRE(whole.delta == std::max(tp.delta, td.delta));
    }
  }
}

TEST_CASE("spec recognition round-trips") {
  for (const auto& p : all_prime_specs()) {
    auto rec = recognize_prime(p.matrix());
    REQUIRE(rec.has_value());
    REQUIRE(*rec == p);
  }
  for (int t = 1; t <= 6; ++t) {
    auto rec = recognize_double_prime(RhoDoublePrimeSpec(t).matrix());
    REQUIRE(rec.has_value());
    REQUIRE(rec->index == t);
  }
}

TEST_CASE("simple non-symplectic candidates") {
  REQUIRE(is_simple_nonsymplectic_candidate(
      build_involution(RhoPrimeSpec::diagonal(1, 2, 2), RhoDoublePrimeSpec(1))));
  // two positive directions
  REQUIRE(!is_simple_nonsymplectic_candidate(
      build_involution(RhoPrimeSpec::diagonal(1, 1, 2), RhoDoublePrimeSpec(1))));
  REQUIRE(signature_of(fixed_sublattice(build_involution(RhoPrimeSpec::diagonal(1, 1, 2),
                                                         RhoDoublePrimeSpec(1)))
                           .gram)
              .positive == 2);
  // minus identity fixes nothing
  REQUIRE(!is_simple_nonsymplectic_candidate(
      build_involution(RhoPrimeSpec::diagonal(2, 2, 2), RhoDoublePrimeSpec(4))));
}

TEST_CASE("delta routes agree and representatives are coset-stable") {
  std::vector<IntMat> grams = {
      hyperbolic_plane().gram,
      rescale(hyperbolic_plane(), 2).gram,
      IntMat(2, 2, {2, 0, 0, -2}),
      rescale(minus_e8(), 2).gram,
      IntMat(1, 1, {2}),
      IntMat(1, 1, {-2}),
  };
  std::mt19937 rng(424242);
  for (const auto& g : grams) {
    REQUIRE(delta_bruteforce(g) == delta_generators(g));
    // norms of coset-equal vectors differ by integers
    auto disc = discriminant_data(g);
    for (const auto& gen : disc.coset_representatives) {
      Rat base = rational_norm(g, gen);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Rat> shifted = gen;
        for (int i = 0; i < g.rows(); ++i) shifted[i] += Int(int(rng() % 7) - 3);
        REQUIRE(is_integer(rational_norm(g, shifted) - base));
      }
    }
  }
}
