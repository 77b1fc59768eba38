#include <catch2/catch_amalgamated.hpp>

#include "k3g2/g2.hpp"
#include "k3g2/pairs.hpp"

using namespace k3g2;

namespace {

InvariantTriple t(int r, int a, int d) { return {r, a, d}; }
InvariantTriple t(int r, int a) { return {r, a, std::nullopt}; }

InvariantInput from_tuple(const InvariantTuple& tu) {
  InvariantInput in;
  in.first = t(tu.ra[0], tu.ra[1], tu.deltas[0]);
  in.second = t(tu.ra[2], tu.ra[3], tu.deltas[1]);
  in.third = t(tu.ra[4], tu.ra[5], tu.deltas[2]);
  return in;
}

}  // namespace

TEST_CASE("fixed locus topology") {
  REQUIRE(fixed_locus_topology(10, 10, 0).kind == FixedLocusTopology::Kind::empty);
  REQUIRE(fixed_locus_topology(10, 8, 0).kind == FixedLocusTopology::Kind::two_elliptic);
  FixedLocusTopology g = fixed_locus_topology(1, 1, 1);
  REQUIRE(g.kind == FixedLocusTopology::Kind::generic);
  REQUIRE(g.genus == 10);
  REQUIRE(g.rational_count == 0);
  // non-integral genus or count
  REQUIRE_THROWS_AS(fixed_locus_topology(2, 1, 1), InvalidTripleError);
  REQUIRE_THROWS_AS(fixed_locus_topology(1, 2, 1), InvalidTripleError);
}

TEST_CASE("fixed locus Betti numbers") {
  auto betti = [](int r, int a, int d) {
    return fixed_locus_betti(fixed_locus_topology(r, a, d));
  };
  REQUIRE(betti(1, 1, 1) == std::pair<int, int>{1, 20});
  REQUIRE(betti(10, 8, 0) == std::pair<int, int>{2, 4});
  REQUIRE(betti(2, 0, 0) == std::pair<int, int>{2, 20});
  // the closed forms (r-a)/2+1 and 22-r-a hold in the two-elliptic case too
  REQUIRE(betti(10, 8, 0).first == (10 - 8) / 2 + 1);
  REQUIRE(betti(10, 8, 0).second == 22 - 10 - 8);
  REQUIRE_THROWS_AS(fixed_locus_betti(fixed_locus_topology(10, 10, 0)), EmptyLocusError);
}

TEST_CASE("orbifold Betti numbers are (0,0,23) in all four cases") {
  for (auto c : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                 ConstructionCase::d4}) {
    REQUIRE(orbifold_betti(c, 1, 10, 11) == std::array<int, 3>{0, 0, 23});
    REQUIRE(orbifold_betti(c, 10, 10, 2) == std::array<int, 3>{0, 0, 23});
    REQUIRE(orbifold_betti(c, 2, 2, 18) == std::array<int, 3>{0, 0, 23});
  }
  // partial inputs are completed using the rank-sum identity
  InvariantInput in;
  in.second = t(5, 3, 1);
  REQUIRE(orbifold_betti(ConstructionCase::case1, in) == std::array<int, 3>{0, 0, 23});
}

TEST_CASE("admissibility") {
  SECTION("case 1") {
    InvariantInput in;
    in.second = t(10, 10, 1);
    REQUIRE(admissible(ConstructionCase::case1, in).ok);
    in.second = t(10, 10, 0);
    REQUIRE(!admissible(ConstructionCase::case1, in).ok);
  }
  SECTION("case 3 exclusions") {
    InvariantInput in;
    in.first = t(10, 10, 0);
    in.second = t(10, 8, 0);
    in.third = t(2, 0, 0);
    auto adm = admissible(ConstructionCase::case3, in);
    REQUIRE(!adm.ok);
    REQUIRE(adm.reason.find("TwoElliptic") != std::string::npos);

    in.second = t(6, 2, 0);  // r - a = 4
    REQUIRE(!admissible(ConstructionCase::case3, in).ok);

    in.second = t(12, 10, 1);  // r + a = 22, r != a
    REQUIRE(!admissible(ConstructionCase::case3, in).ok);

    in.second = t(11, 11, 1);
    in.third = t(1, 1, 1);
    REQUIRE(admissible(ConstructionCase::case3, in).ok);

    in.first = t(10, 10, 1);  // Fix(rho1) not empty
    REQUIRE(!admissible(ConstructionCase::case3, in).ok);
  }
  SECTION("d4 requires both loci") {
    InvariantInput in;
    in.second = t(10, 10, 0);
    in.third = t(2, 0, 0);
    REQUIRE(!admissible(ConstructionCase::d4, in).ok);
    in.second = t(10, 10, 1);
    REQUIRE(admissible(ConstructionCase::d4, in).ok);
  }
}

TEST_CASE("singular locus models") {
  SECTION("case 1 closed forms") {
    InvariantInput in;
    in.second = t(1, 1, 1);
    SingularLocusModel l = singular_locus(ConstructionCase::case1, in);
    REQUIRE(l.b0 == 2);
    REQUIRE(l.b1 == 42);
    REQUIRE(l.components.size() == 1);
    REQUIRE(l.components[0].copies == 2);
    REQUIRE(!l.components[0].twisted);
  }
  SECTION("case 3 twisted counting") {
    InvariantInput in;
    in.first = t(10, 10, 0);
    in.second = t(11, 11, 1);
    in.third = t(1, 1, 1);
    SingularLocusModel l = singular_locus(ConstructionCase::case3, in);
    REQUIRE(l.b0 == 0);
    REQUIRE(l.b1 == (48 - 4 * 11) + (48 - 4 * 1));
    for (const auto& c : l.components) {
      REQUIRE(c.copies == 4);
      REQUIRE(c.twisted);
    }
  }
  SECTION("d4 closed forms") {
    InvariantInput in;
    in.second = t(6, 6, 1);
    in.third = t(6, 6, 1);
    SingularLocusModel l = singular_locus(ConstructionCase::d4, in);
    REQUIRE(l.b0 == 8);
    REQUIRE(l.b1 == 88);
  }
  SECTION("inadmissible input is rejected with a reason") {
    InvariantInput in;
    in.second = t(10, 10, 0);
    REQUIRE_THROWS_AS(singular_locus(ConstructionCase::case1, in), InadmissibleError);
  }
}

TEST_CASE("resolution Betti numbers") {
  SingularLocusModel l;
  l.b0 = 2;
  l.b1 = 42;
  REQUIRE(resolve_betti({0, 0, 23}, l) == std::array<int, 3>{0, 2, 65});
  l.b0 = 0;
  l.b1 = 48;
  REQUIRE(resolve_betti({0, 0, 23}, l) == std::array<int, 3>{0, 0, 71});
  SingularLocusModel zero;
  REQUIRE(resolve_betti({0, 0, 23}, zero) == std::array<int, 3>{0, 0, 23});
}

TEST_CASE("outcomes on the worked examples") {
  SECTION("case 2 example: (1,1) and (11,11) give (4, 67)") {
    InvariantInput in;
    in.first = t(1, 1, 1);
    in.second = t(11, 11, 1);
    in.third = t(10, 10, 0);
    G2Outcome o = outcome(ConstructionCase::case2, in);
    REQUIRE(o.b1 == 0);
    REQUIRE(o.b2 == 4);
    REQUIRE(o.b3 == 67);
    REQUIRE(o.pi1 == Pi1::trivial);
    REQUIRE(o.holonomy == Holonomy::g2);
    REQUIRE(!o.barely);
  }
  SECTION("case 3 example: a2 = 1, a3 = 11 gives (0, 71)") {
    InvariantInput in;
    in.first = t(10, 10, 0);
    in.second = t(1, 1, 1);
    in.third = t(11, 11, 1);
    G2Outcome o = outcome(ConstructionCase::case3, in);
    REQUIRE(o.b2 == 0);
    REQUIRE(o.b3 == 71);
    REQUIRE(o.pi1 == Pi1::trivial);
  }
  SECTION("case 1 at (10,10,1) gives (2, 29) and a barely manifold") {
    InvariantInput in;
    in.second = t(10, 10, 1);
    G2Outcome o = outcome(ConstructionCase::case1, in);
    REQUIRE(o.b2 == 2);
    REQUIRE(o.b3 == 29);
    REQUIRE(o.pi1 == Pi1::z_semi_z2);
    REQUIRE(o.holonomy == Holonomy::su3_semi_z2);
    REQUIRE(o.barely);
  }
  SECTION("case 2 with one empty locus reports a barely outcome") {
    InvariantInput in;
    in.first = t(10, 10, 0);
    in.second = t(11, 11, 1);
    G2Outcome o = outcome(ConstructionCase::case2, in);
    REQUIRE(o.barely);
    REQUIRE(o.b2 == 11 - 11 + 2);
    REQUIRE(o.b3 == 69 - 11 - 33);
    REQUIRE(o.pi1 == Pi1::z_semi_z2);
  }
}

TEST_CASE("dual-route Betti agreement over the classified tuples") {
  // outcome() internally cross-checks the corollary path against the
  // closed forms; run it over every admissible classified tuple in every
  // case as a property test.
  auto pairs = classify_pairs(4);
  auto tuples = tuple_census(pairs);
  int evaluated = 0;
  for (const auto& tu : tuples) {
    InvariantInput in = from_tuple(tu);
    for (auto c : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                   ConstructionCase::d4}) {
      if (!admissible(c, in).ok) continue;
      G2Outcome o = outcome(c, in);
      REQUIRE(o.b1 == 0);
      ++evaluated;
    }
  }
  REQUIRE(evaluated > 300);
}

TEST_CASE("genus and rational-count integrality over consumed triples") {
  auto pairs = classify_pairs(4);
  for (const auto& p : pairs) {
    if (!p.action_candidate()) continue;
    for (const auto& inv : p.invariants) {
      REQUIRE((22 - inv.r - inv.a) % 2 == 0);
      REQUIRE((inv.r - inv.a) % 2 == 0);
    }
  }
}
