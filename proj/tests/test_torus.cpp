#include <catch2/catch_amalgamated.hpp>

#include "k3g2/torus.hpp"

using namespace k3g2;

namespace {

Rat r(long n, long d = 1) { return Rat(n, d); }

// Membership of a rational point in a fixed-set component.
bool component_contains(const TorusFixedSet::Component& c, const Vec3Q& p) {
  if (!c.direction) {
    for (int i = 0; i < 3; ++i)
      if (frac_part(p[i] - c.base[i]) != 0) return false;
    return true;
  }
  const Vec3I& d = *c.direction;
  int i0 = -1;
  for (int i = 0; i < 3 && i0 < 0; ++i)
    if (d[i] != 0) i0 = i;
  Int steps = d[i0] < 0 ? Int(-d[i0]) : Int(d[i0]);
  for (Int s(0); s < steps; ++s) {
    Rat t = (p[i0] - c.base[i0] + Rat(s)) / Rat(d[i0]);
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      if (frac_part(c.base[i] + t * Rat(d[i]) - p[i]) != 0) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

bool set_contains(const TorusFixedSet& s, const Vec3Q& p) {
  if (s.empty()) return false;
  if (*s.dimension == 3) return true;
  for (const auto& c : s.components)
    if (component_contains(c, p)) return true;
  return false;
}

// Brute-force oracle over the (1/8)Z^3 grid; valid because all builtin
// translations have denominators dividing 8.
void check_against_grid(const AffineTorusMap& f) {
  TorusFixedSet s = fixed_set(f);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        Vec3Q p{r(a, 8), r(b, 8), r(c, 8)};
        bool fixed = true;
        for (int i = 0; i < 3; ++i) {
          Rat img = f.translation[i];
          for (int j = 0; j < 3; ++j) img += Rat(f.linear(i, j)) * p[j];
          if (frac_part(img - p[i]) != 0) { fixed = false; break; }
        }
        REQUIRE(fixed == set_contains(s, p));
      }
}

std::set<Vec3Q> bases(const TorusFixedSet& s) {
  std::set<Vec3Q> out;
  for (const auto& c : s.components) out.insert(c.base);
  return out;
}

}  // namespace

TEST_CASE("compose and inverse") {
  for (auto c : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                 ConstructionCase::d4}) {
    BuiltinAction a = builtin_action(c);
    REQUIRE(compose(a.psi1, inverse(a.psi1)) == AffineTorusMap::identity());
    REQUIRE(compose(inverse(a.psi2), a.psi2) == AffineTorusMap::identity());
  }
  // psi1 squared in the dihedral case is the translation by (1/2, 0, 0)
  BuiltinAction d4 = builtin_action(ConstructionCase::d4);
  AffineTorusMap sq = compose(d4.psi1, d4.psi1);
  REQUIRE(sq.linear == Matrix<int>::identity(3));
  REQUIRE(sq.translation == Vec3Q{r(1, 2), r(0), r(0)});
  AffineTorusMap fourth = compose(sq, sq);
  REQUIRE(fourth == AffineTorusMap::identity());
  // psi1 o psi2 in case 1: linear diag(-1,-1,1), translation (1/2, 0, 1/2)
  BuiltinAction c1 = builtin_action(ConstructionCase::case1);
  AffineTorusMap psi3 = compose(c1.psi1, c1.psi2);
  Matrix<int> expect(3, 3);
  expect(0, 0) = -1;
  expect(1, 1) = -1;
  expect(2, 2) = 1;
  REQUIRE(psi3.linear == expect);
  REQUIRE(psi3.translation == Vec3Q{r(1, 2), r(0), r(1, 2)});
}

TEST_CASE("builtin generators match the displayed maps") {
  BuiltinAction c1 = builtin_action(ConstructionCase::case1);
  REQUIRE(c1.psi1.translation == Vec3Q{r(1, 2), r(0), r(1, 2)});
  REQUIRE(c1.psi1.linear(0, 0) == 1);
  REQUIRE(c1.psi1.linear(1, 1) == -1);
  REQUIRE(c1.psi1.linear(2, 2) == -1);
  BuiltinAction c2 = builtin_action(ConstructionCase::case2);
  REQUIRE(c2.psi2.translation == Vec3Q{r(0), r(0), r(1, 2)});
  BuiltinAction c3 = builtin_action(ConstructionCase::case3);
  REQUIRE(c3.psi1.translation == Vec3Q{r(0), r(0), r(0)});
  REQUIRE(c3.psi2.translation == Vec3Q{r(0), r(0), r(0)});
  BuiltinAction d4 = builtin_action(ConstructionCase::d4);
  REQUIRE(d4.psi1.translation == Vec3Q{r(1, 4), r(1, 4), r(0)});
  REQUIRE(d4.psi1.linear(0, 0) == 1);
  REQUIRE(d4.psi1.linear(1, 1) == -1);
  // generator sign actions on the Kaehler triple
  REQUIRE(c1.elements[2].rho_exponents == std::array<int, 2>{1, 0});
  REQUIRE(c1.elements[2].omega_signs == std::array<int, 3>{1, -1, -1});
  REQUIRE(c1.elements[1].rho_exponents == std::array<int, 2>{0, 1});
  REQUIRE(c1.elements[1].omega_signs == std::array<int, 3>{-1, 1, -1});
}

TEST_CASE("case 1 fixed sets") {
  BuiltinAction a = builtin_action(ConstructionCase::case1);
  REQUIRE(fixed_set(a.psi1).empty());
  REQUIRE(fixed_set(compose(a.psi1, a.psi2)).empty());
  TorusFixedSet f2 = fixed_set(a.psi2);
  REQUIRE(f2.dimension == 1);
  REQUIRE(f2.components.size() == 4);
  std::set<Vec3Q> expect;
  for (int e1 : {0, 1})
    for (int e2 : {0, 1}) expect.insert({r(e1, 2), r(0), r(e2, 2)});
  REQUIRE(bases(f2) == expect);
  for (const auto& c : f2.components) REQUIRE(*c.direction == Vec3I{0, 1, 0});
}

TEST_CASE("case 2 fixed sets and disjointness") {
  BuiltinAction a = builtin_action(ConstructionCase::case2);
  TorusFixedSet f1 = fixed_set(a.psi1);
  TorusFixedSet f2 = fixed_set(a.psi2);
  REQUIRE(fixed_set(compose(a.psi1, a.psi2)).empty());
  REQUIRE(f1.components.size() == 4);
  REQUIRE(f2.components.size() == 4);
  // third coordinates: multiples of 1/2 for psi1, 1/4 plus multiples of 1/2
  // for psi2, so the two circle families are disjoint
  for (const auto& c : f1.components) {
    REQUIRE(*c.direction == Vec3I{1, 0, 0});
    REQUIRE((c.base[2] == r(0) || c.base[2] == r(1, 2)));
  }
  for (const auto& c : f2.components) {
    REQUIRE(*c.direction == Vec3I{0, 1, 0});
    REQUIRE((c.base[2] == r(1, 4) || c.base[2] == r(3, 4)));
  }
}

TEST_CASE("case 3 fixed sets") {
  BuiltinAction a = builtin_action(ConstructionCase::case3);
  AffineTorusMap psi3 = compose(a.psi1, a.psi2);
  for (const auto& m : {a.psi1, a.psi2, psi3}) {
    TorusFixedSet f = fixed_set(m);
    REQUIRE(f.dimension == 1);
    REQUIRE(f.components.size() == 4);
  }
}

TEST_CASE("dihedral case fixed sets match the displayed circle families") {
  BuiltinAction a = builtin_action(ConstructionCase::d4);
  REQUIRE(a.elements.size() == 8);
  // gamma_j0 with j != 0 translate the first coordinate: empty fixed sets
  for (int j = 1; j < 4; ++j) {
    REQUIRE(a.elements[2 * j].rho_exponents[1] == 0);
    REQUIRE(fixed_set(a.elements[2 * j].map).empty());
  }
  auto gamma = [&](int j) { return a.elements[2 * j + 1].map; };  // gamma_{j1}
  std::set<Vec3Q> e01, e11, e21, e31;
  for (int e1 : {0, 1})
    for (int e2 : {0, 1}) {
      e01.insert({r(e1, 2), r(0), r(e2, 2)});
      e11.insert({r(1, 8) + r(e1, 2), r(1, 8) + r(e2, 2), r(0)});
      e21.insert({r(1, 4) + r(e1, 2), r(0), r(e2, 2)});
      e31.insert({r(3, 8) + r(e1, 2), r(1, 8) + r(e2, 2), r(0)});
    }
  REQUIRE(bases(fixed_set(gamma(0))) == e01);
  REQUIRE(bases(fixed_set(gamma(1))) == e11);
  REQUIRE(bases(fixed_set(gamma(2))) == e21);
  REQUIRE(bases(fixed_set(gamma(3))) == e31);
  for (int j = 0; j < 4; ++j) {
    TorusFixedSet f = fixed_set(gamma(j));
    REQUIRE(f.components.size() == 4);
    Vec3I dir = j % 2 == 0 ? Vec3I{0, 1, 0} : Vec3I{0, 0, 1};
    for (const auto& c : f.components) REQUIRE(*c.direction == dir);
  }
}

TEST_CASE("grid oracle agrees for every builtin group element") {
  for (auto c : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                 ConstructionCase::d4}) {
    BuiltinAction a = builtin_action(c);
    for (const auto& el : a.elements) check_against_grid(el.map);
  }
}

TEST_CASE("fixed-set components satisfy the congruence and count") {
  for (auto cc : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                  ConstructionCase::d4}) {
    BuiltinAction a = builtin_action(cc);
    for (const auto& el : a.elements) {
      TorusFixedSet f = fixed_set(el.map);
      if (f.empty() || *f.dimension == 3) continue;
      // solution count of the congruence system = product of the nonzero
      // elementary divisors of A - I
      IntMat ami(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ami(i, j) = Int(el.map.linear(i, j) - (i == j ? 1 : 0));
      Int count(1);
      SmithDecomposition s = smith_normal_form(ami);
      for (int i = 0; i < 3; ++i)
        if (s.diag(i) != 0) count *= s.diag(i);
      REQUIRE(Int(f.components.size()) == count);
      for (const auto& comp : f.components) {
        for (int i = 0; i < 3; ++i) {
          Rat img = el.map.translation[i];
          for (int j = 0; j < 3; ++j) img += Rat(el.map.linear(i, j)) * comp.base[j];
          REQUIRE(frac_part(img - comp.base[i]) == 0);
        }
      }
    }
  }
}

TEST_CASE("group generation and recognition") {
  BuiltinAction c3 = builtin_action(ConstructionCase::case3);
  FiniteActionGroup g3 = generate_group({c3.psi1, c3.psi2});
  REQUIRE(g3.order() == 4);
  REQUIRE(g3.is_abelian());
  REQUIRE(!g3.is_dihedral());

  BuiltinAction d4 = builtin_action(ConstructionCase::d4);
  FiniteActionGroup gd = generate_group({d4.psi1, d4.psi2});
  REQUIRE(gd.order() == 8);
  REQUIRE(!gd.is_abelian());
  REQUIRE(gd.is_dihedral());

  REQUIRE(generate_group({AffineTorusMap::identity()}).order() == 1);

  // every element of every builtin group: diagonal linear part with the
  // Kaehler sign pattern matching the coordinate sign pattern
  for (auto cc : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                  ConstructionCase::d4}) {
    BuiltinAction a = builtin_action(cc);
    for (const auto& el : a.elements) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) REQUIRE(el.map.linear(i, j) == 0);
      REQUIRE(el.omega_signs == el.dx_signs);
    }
  }
}

TEST_CASE("group closure cap") {
  // all det-1 signed permutations and (1/8)-translations generate a group
  // of order 24 * 512 > 10^4
  Matrix<int> rot(3, 3);
  rot(0, 1) = 1;
  rot(1, 2) = 1;
  rot(2, 0) = 1;
  Matrix<int> swapflip(3, 3);
  swapflip(0, 1) = 1;
  swapflip(1, 0) = 1;
  swapflip(2, 2) = -1;
  AffineTorusMap shift(Matrix<int>::identity(3), {r(1, 8), r(0), r(0)});
  AffineTorusMap cycle(rot, {r(0), r(0), r(0)});
  AffineTorusMap flip(swapflip, {r(0), r(0), r(0)});
  BuiltinAction d4 = builtin_action(ConstructionCase::d4);
  REQUIRE_THROWS_AS(generate_group({shift, cycle, flip, d4.psi1, d4.psi2}), NotFiniteError);
}
