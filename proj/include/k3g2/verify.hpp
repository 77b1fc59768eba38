#pragma once

#include <functional>
#include <sstream>

#include "k3g2/pipeline.hpp"
#include "k3g2/reference_tables.hpp"

namespace k3g2 {

struct CriterionResult {
  int number;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  std::string nikulin_path = "data/nikulin75.txt";
  std::string literature_path = "data/literature.json";
  bool skip_external = false;
  int threads = 0;
};

namespace detail {

struct Checker {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << (log.tellp() > 0 ? "; " : "") << what;
    }
  }
  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      std::ostringstream os;
      os << what << " (got " << got << ", want " << want << ")";
      log << (log.tellp() > 0 ? "; " : "") << os.str();
    }
  }
};

inline IntMat gram_3h() {
  GramLattice h = hyperbolic_plane();
  return direct_sum(direct_sum(h, h), h).gram;
}

}  // namespace detail

// Runs the acceptance criteria and returns one result per criterion.
// Criteria needing the bundled data files are skipped under skip_external.
inline std::vector<CriterionResult> run_verification(const VerifyOptions& opt) {
  std::vector<CriterionResult> results;
  Census census = Census::run(opt.threads);

  std::optional<NikulinCatalog> nikulin;
  std::optional<LiteratureCatalog> literature;
  std::string data_error;
  if (!opt.skip_external) {
    try {
      nikulin = NikulinCatalog::load(opt.nikulin_path);
      literature = LiteratureCatalog::load(opt.literature_path);
    } catch (const CatalogError& e) {
      data_error = e.what();
    }
  }

  auto add = [&](int number, const std::string& name, bool external,
                 const std::function<void(detail::Checker&)>& body) {
    CriterionResult r{number, name};
    if (external && opt.skip_external) {
      r.skipped = true;
      r.detail = "skipped (external data)";
      results.push_back(r);
      return;
    }
    if (external && !data_error.empty()) {
      r.passed = false;
      r.detail = data_error;
      results.push_back(r);
      return;
    }
    detail::Checker c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.passed = c.ok;
    r.detail = c.log.str();
    results.push_back(r);
  };

  // 1. invariant tables for the rho' and rho'' forms
  add(1, "invariant-tables", false, [&](detail::Checker& c) {
    IntMat g3h = detail::gram_3h();
    auto prime = [&](const RhoPrimeSpec& s) {
      return invariants_of(fixed_sublattice(s.matrix(), g3h)).triple();
    };
    using T = std::array<int, 3>;
    c.expect(prime(RhoPrimeSpec::diagonal(1, 2, 2)) == T{2, 0, 0}, "d122 invariants");
    c.expect(prime(RhoPrimeSpec::diagonal(1, 2, 4)) == T{3, 1, 1}, "d124 invariants");
    c.expect(prime(RhoPrimeSpec::diagonal(1, 4, 4)) == T{4, 2, 1}, "d144 invariants");
    c.expect(prime(RhoPrimeSpec::diagonal(3, 2, 2)) == T{1, 1, 1}, "d322 invariants");
    c.expect(prime(RhoPrimeSpec::diagonal(3, 2, 4)) == T{2, 2, 1}, "d324 invariants");
    c.expect(prime(RhoPrimeSpec::diagonal(3, 4, 4)) == T{3, 3, 1}, "d344 invariants");
    for (int k = 1; k <= 4; ++k) {
      c.expect(prime(RhoPrimeSpec::swap(1, 2, k, 2)) == T{2, 2, 0}, "swap m=2 invariants");
      c.expect(prime(RhoPrimeSpec::swap(1, 2, k, 4)) == T{3, 3, 1}, "swap m=4 invariants");
    }
    IntMat g2e8 = direct_sum(minus_e8(), minus_e8()).gram;
    auto dp = [&](int t) {
      return invariants_of(fixed_sublattice(RhoDoublePrimeSpec(t).matrix(), g2e8)).triple();
    };
    c.expect(dp(1) == T{16, 0, 0}, "e1 invariants");
    c.expect(dp(2) == T{8, 0, 0}, "e2 invariants");
    c.expect(dp(4) == T{0, 0, 0}, "e4 invariants");
    c.expect(dp(5) == T{8, 8, 0}, "e5 invariants");
  });

  // 2. pair census
  add(2, "pair-census", false, [&](detail::Checker& c) {
    c.expect_eq(census.prime_counts.diag_diag, 27, "diagonal/diagonal classes");
    c.expect_eq(census.prime_counts.swap_diag, 8, "swap/diagonal classes");
    c.expect_eq(census.prime_counts.diag_swap, 8, "diagonal/swap classes");
    c.expect_eq(census.prime_counts.swap_swap, 16, "swap/swap classes");
    c.expect_eq(census.prime_counts.total(), 59, "rho' pair classes");
    c.expect(enumerate_double_prime_pairs() == reference::double_prime_pairs(),
             "rho'' index pairs differ from the listed nine");
    c.expect_eq(int(census.pairs.size()), 531, "total pair classes");
    c.expect(prime_tuple_census() == reference::prime_tuples(),
             "rho' tuple census differs from the 38 listed tuples");
    c.expect(double_prime_tuple_census() == reference::double_prime_tuples(),
             "rho'' tuple census differs from the 9 listed tuples");
    c.expect_eq(int(census.tuples.size()), 342, "distinct invariant tuples");
  });

  // 3. simple triples
  add(3, "simple-triple-census", false, [&](detail::Checker& c) {
    auto triples = simple_triples();
    c.expect_eq(int(triples.size()), 28, "simple triple count");
    c.expect(triples.count({1, 1, 1}) == 1, "missing (1,1,1)");
    c.expect(triples.count({10, 10, 0}) == 1, "missing (10,10,0)");
    c.expect(triples.count({11, 11, 1}) == 1, "missing (11,11,1)");
    c.expect(triples.count({2, 0, 0}) == 1, "missing (2,0,0)");
  });

  // 4. structural suite over all 531 pairs
  add(4, "structural-suite", false, [&](detail::Checker& c) {
    const IntMat& g = k3_lattice().gram;
    const IntMat id = IntMat::identity(22);
    int trivial = 0, rank22 = 0;
    for (const auto& p : census.pairs) {
      c.expect(p.rho1.matrix * p.rho2.matrix == p.rho2.matrix * p.rho1.matrix, "commuting");
      for (const K3Involution* inv : {&p.rho1, &p.rho2, &p.rho3}) {
        c.expect((inv->matrix * inv->matrix).is_identity(), "A^2 = I");
        c.expect(inv->matrix.transposed() * g * inv->matrix == g, "isometry");
        FixedSublattice f = fixed_sublattice(*inv);
        for (const auto& fac : smith_normal_form(f.basis).invariant_factors())
          c.expect(fac == 1, "primitive fixed lattice");
        if (f.gram.rows() > 0)
          c.expect(delta_bruteforce(f.gram) == delta_generators(f.gram), "delta routes");
      }
      c.expect(p.invariants[0].hyperbolic && p.invariants[1].hyperbolic,
               "hyperbolic fixed lattices of the generators");
      if (p.trivial_intersection) ++trivial;
      if (p.rank_sum() == 22) ++rank22;
      if (!c.ok) break;
    }
    // The published classification keeps swap-branch pairs whose fixed
    // lattices overlap; these two sub-checks fail on exactly those pairs.
    c.expect_eq(trivial, int(census.pairs.size()), "pairs with trivial common fixed lattice");
    c.expect_eq(rank22, int(census.pairs.size()), "pairs with r1+r2+r3 = 22");
  });

  // 5. torus fixed sets
  add(5, "torus-fixed-sets", false, [&](detail::Checker& c) {
    auto grid_check = [&](const AffineTorusMap& f) {
      TorusFixedSet s = fixed_set(f);
      auto member = [&](const Vec3Q& p) {
        if (s.empty()) return false;
        if (*s.dimension == 3) return true;
        for (const auto& comp : s.components) {
          if (!comp.direction) {
            bool eq = true;
            for (int i = 0; i < 3; ++i)
              if (frac_part(p[i] - comp.base[i]) != 0) eq = false;
            if (eq) return true;
            continue;
          }
          const Vec3I& d = *comp.direction;
          int i0 = -1;
          for (int i = 0; i < 3 && i0 < 0; ++i)
            if (d[i] != 0) i0 = i;
          Int steps = d[i0] < 0 ? Int(-d[i0]) : Int(d[i0]);
          for (Int sgp(0); sgp < steps; ++sgp) {
            Rat tpar = (p[i0] - comp.base[i0] + Rat(sgp)) / Rat(d[i0]);
            bool okc = true;
            for (int i = 0; i < 3; ++i)
              if (frac_part(comp.base[i] + tpar * Rat(d[i]) - p[i]) != 0) okc = false;
            if (okc) return true;
          }
        }
        return false;
      };
      for (int a = 0; a < 8 && c.ok; ++a)
        for (int b = 0; b < 8 && c.ok; ++b)
          for (int e = 0; e < 8 && c.ok; ++e) {
            Vec3Q p{Rat(a, 8), Rat(b, 8), Rat(e, 8)};
            bool fixed = true;
            for (int i = 0; i < 3; ++i) {
              Rat img = f.translation[i];
              for (int j = 0; j < 3; ++j) img += Rat(f.linear(i, j)) * p[j];
              if (frac_part(img - p[i]) != 0) fixed = false;
            }
            c.expect(fixed == member(p), "1/8-grid oracle");
          }
    };

    BuiltinAction a1 = builtin_action(ConstructionCase::case1);
    c.expect(fixed_set(a1.psi1).empty(), "case 1 Fix(psi1) empty");
    c.expect(fixed_set(compose(a1.psi1, a1.psi2)).empty(), "case 1 Fix(psi3) empty");
    c.expect(fixed_set(a1.psi2).components.size() == 4, "case 1 Fix(psi2) four circles");

    BuiltinAction a2 = builtin_action(ConstructionCase::case2);
    for (const auto& comp : fixed_set(a2.psi1).components)
      c.expect(comp.base[2] == Rat(0) || comp.base[2] == Rat(1, 2),
               "case 2 Fix(psi1) third coordinate");
    for (const auto& comp : fixed_set(a2.psi2).components)
      c.expect(comp.base[2] == Rat(1, 4) || comp.base[2] == Rat(3, 4),
               "case 2 Fix(psi2) third coordinate");

    BuiltinAction a3 = builtin_action(ConstructionCase::case3);
    for (const auto& el : a3.elements)
      if (el.rho_exponents[0] || el.rho_exponents[1])
        c.expect(fixed_set(el.map).components.size() == 4, "case 3 four circles");

    BuiltinAction d4 = builtin_action(ConstructionCase::d4);
    FiniteActionGroup gd = generate_group({d4.psi1, d4.psi2});
    c.expect(gd.order() == 8, "dihedral group order");
    c.expect(gd.is_dihedral(), "dihedral recognition");
    for (int j = 1; j < 4; ++j)
      c.expect(fixed_set(d4.elements[2 * j].map).empty(), "Fix(gamma_j0) empty for j != 0");
    std::set<Vec3Q> e01, e11, e21, e31;
    for (int x : {0, 1})
      for (int y : {0, 1}) {
        e01.insert({Rat(x, 2), Rat(0), Rat(y, 2)});
        e11.insert({Rat(1, 8) + Rat(x, 2), Rat(1, 8) + Rat(y, 2), Rat(0)});
        e21.insert({Rat(1, 4) + Rat(x, 2), Rat(0), Rat(y, 2)});
        e31.insert({Rat(3, 8) + Rat(x, 2), Rat(1, 8) + Rat(y, 2), Rat(0)});
      }
    auto bases = [&](int j) {
      std::set<Vec3Q> out;
      for (const auto& comp : fixed_set(d4.elements[2 * j + 1].map).components)
        out.insert(comp.base);
      return out;
    };
    c.expect(bases(0) == e01, "Fix(gamma_01) circle family");
    c.expect(bases(1) == e11, "Fix(gamma_11) circle family");
    c.expect(bases(2) == e21, "Fix(gamma_21) circle family");
    c.expect(bases(3) == e31, "Fix(gamma_31) circle family");

    for (auto cc : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                    ConstructionCase::d4})
      for (const auto& el : builtin_action(cc).elements) grid_check(el.map);
  });

  // 6. orbifold Betti numbers via character averaging
  add(6, "orbifold-betti", false, [&](detail::Checker& c) {
    for (auto cc : {ConstructionCase::case1, ConstructionCase::case2, ConstructionCase::case3,
                    ConstructionCase::d4}) {
      c.expect(orbifold_betti(cc, 1, 10, 11) == std::array<int, 3>{0, 0, 23},
               "averaging at (1,10,11)");
      c.expect(orbifold_betti(cc, 2, 2, 18) == std::array<int, 3>{0, 0, 23},
               "averaging at (2,2,18)");
      c.expect(orbifold_betti(cc, 10, 10, 2) == std::array<int, 3>{0, 0, 23},
               "averaging at (10,10,2)");
    }
  });

  // 7. first-construction table against the published rows
  add(7, "case1-table", true, [&](detail::Checker& c) {
    Case1Table t = case1_table(census, &*nikulin);
    c.expect(t.non_matching_ra == reference::case1_non_matching_pairs(),
             "classified pairs failing the matching criterion differ from the 7 listed");
    bool has1010 = false;
    for (const auto& r : t.rows)
      if (r.r == 10 && r.a == 10) has1010 = true;
    c.expect(has1010, "(10,10) missing from the table domain");
    c.expect(t.by_b2 == reference::case1_table(), "b2-grouped table rows differ");
  });

  // 8. second-construction counts and table
  add(8, "case2-table", false, [&](detail::Checker& c) {
    InvariantInput ex;
    ex.first = InvariantTriple{1, 1, 1};
    ex.second = InvariantTriple{11, 11, 1};
    ex.third = InvariantTriple{10, 10, 0};
    G2Outcome o = outcome(ConstructionCase::case2, ex);
    c.expect(o.b2 == 4 && o.b3 == 67, "example outcome (4, 67)");
    Case2Table t = case2_table(census);
    c.expect_eq(int(t.sums.size()), 60, "sum pairs");
    c.expect_eq(int(t.matching.size()), 31, "matching-reachable sums");
    c.expect_eq(int(t.new_rows.size()), 29, "surviving rows");
    std::vector<std::array<int, 4>> want = reference::case2_rows();
    std::sort(want.begin(), want.end());
    c.expect(t.new_rows == want, "29-row table differs");
  });

  // 9. third-construction values and exclusions
  add(9, "case3-values", false, [&](detail::Checker& c) {
    Case3Report r = case3_report(census);
    if (r.main_b3 != std::set<int>{63, 71, 79}) {
      std::ostringstream os;
      os << "main-branch b3 values (got {";
      bool first = true;
      for (int b : r.main_b3) { os << (first ? "" : ",") << b; first = false; }
      os << "}, want {63,71,79})";
      c.expect(false, os.str());
    }
    c.expect(r.barely == std::set<std::pair<int, int>>{{0, 71}}, "barely branch outcome");
    InvariantInput in;
    in.first = InvariantTriple{10, 10, 0};
    in.third = InvariantTriple{2, 0, 0};
    in.second = InvariantTriple{10, 8, 0};
    c.expect(!admissible(ConstructionCase::case3, in).ok, "(10,8,0) not rejected");
    in.second = InvariantTriple{6, 2, 0};
    c.expect(!admissible(ConstructionCase::case3, in).ok, "r-a >= 4 not rejected");
    in.second = InvariantTriple{12, 10, 1};
    c.expect(!admissible(ConstructionCase::case3, in).ok, "r+a = 22, r != a not rejected");
  });

  // 10. dihedral table and literature diffs
  add(10, "d4-and-literature", true, [&](detail::Checker& c) {
    D4Table t = d4_table(census, &*nikulin);
    c.expect(t.symmetry_verified, "(r2+r3, a2+a3) sums differ from (r1+r2, a1+a2) sums");
    c.expect_eq(int(t.values.size()), 95, "distinct (b2, b3) pairs");
    c.expect(t.by_b2 == reference::d4_table(), "b2-grouped table rows differ");
    LiteratureDiff dd4 = diff_literature(t.values, literature->d4);
    c.expect_eq(int(dd4.remaining.size()), 67, "new dihedral pairs");
    Case2Table t2 = case2_table(census);
    std::set<std::pair<int, int>> produced2;
    for (const auto& r : t2.new_rows) produced2.emplace(r[0], r[1]);
    LiteratureDiff d2 = diff_literature(produced2, literature->case2);
    c.expect(d2.remaining == reference::case2_new_pairs(),
             "remaining second-construction pairs differ from the 7 listed");
  });

  // 11. data validation
  add(11, "data-validation", true, [&](detail::Checker& c) {
    c.expect_eq(int(nikulin->triples.size()), 75, "catalog size");
    for (const auto& tri : nikulin->triples) {
      c.expect(tri[0] >= 1 && tri[0] <= 20, "r bound");
      c.expect(tri[1] >= 0 && tri[1] <= 11, "a bound");
      c.expect(tri[0] - tri[1] >= 0, "r - a bound");
    }
    // every simple triple arises from an actual involution and is in the catalog
    for (const auto& tri : simple_triples())
      c.expect(nikulin->contains(tri[0], tri[1], tri[2]),
               "simple triple missing from the catalog");
  });

  return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.skipped && !r.passed) return false;
  return true;
}

}  // namespace k3g2
