#pragma once

#include <optional>

#include "k3g2/catalog.hpp"
#include "k3g2/g2.hpp"
#include "k3g2/pairs.hpp"
#include "k3g2/table.hpp"

namespace k3g2 {

// The classification computed once: pairs, class counts, tuple census.
struct Census {
  std::vector<InvolutionPair> pairs;
  PrimePairCounts prime_counts;
  std::vector<InvariantTuple> tuples;

  static Census run(int threads = 0) {
    Census c;
    c.pairs = classify_pairs(threads);
    c.prime_counts = prime_pair_counts();
    c.tuples = tuple_census(c.pairs);
    return c;
  }
};

inline InvariantInput input_from_tuple(const InvariantTuple& t) {
  InvariantInput in;
  in.first = InvariantTriple{t.ra[0], t.ra[1], t.deltas[0]};
  in.second = InvariantTriple{t.ra[2], t.ra[3], t.deltas[1]};
  in.third = InvariantTriple{t.ra[4], t.ra[5], t.deltas[2]};
  return in;
}

inline InvariantInput input_from_pair(const InvolutionPair& p) {
  InvariantInput in;
  in.first = InvariantTriple{p.invariants[0].r, p.invariants[0].a, p.invariants[0].delta};
  in.second = InvariantTriple{p.invariants[1].r, p.invariants[1].a, p.invariants[1].delta};
  in.third = InvariantTriple{p.invariants[2].r, p.invariants[2].a, p.invariants[2].delta};
  return in;
}

namespace tables {

inline std::string matrix_cell(const IntMat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i || j) os << ' ';
      os << m(i, j);
    }
  return os.str();
}

// The 531 canonical pairs with specs, invariants, flags, and matrices.
inline TableArtifact pairs_table(const Census& c) {
  TableArtifact t;
  t.name = "pair-classes";
  t.columns = {"rho1_prime", "rho1_e8",  "rho2_prime", "rho2_e8",  "rho3_prime",
               "rho3_e8",    "r1", "a1", "d1", "r2",   "a2", "d2", "r3",
               "a3",         "d3", "trivial_intersection", "action_candidate",
               "rho1_matrix", "rho2_matrix", "rho3_matrix"};
  for (const auto& p : c.pairs) {
    std::vector<std::string> row = {
        p.rho1.prime.label(), p.rho1.double_prime.label(), p.rho2.prime.label(),
        p.rho2.double_prime.label(), p.rho3.prime.label(), p.rho3.double_prime.label()};
    for (int i = 0; i < 3; ++i) {
      row.push_back(std::to_string(p.invariants[i].r));
      row.push_back(std::to_string(p.invariants[i].a));
      row.push_back(std::to_string(p.invariants[i].delta));
    }
    row.push_back(p.trivial_intersection ? "1" : "0");
    row.push_back(p.action_candidate() ? "1" : "0");
    row.push_back(matrix_cell(p.rho1.matrix));
    row.push_back(matrix_cell(p.rho2.matrix));
    row.push_back(matrix_cell(p.rho3.matrix));
    t.rows.push_back(std::move(row));
  }
  t.sort_rows();
  return t;
}

inline TableArtifact tuples_table(const Census& c) {
  TableArtifact t;
  t.name = "invariant-tuples";
  t.columns = {"r1", "a1", "d1", "r2", "a2", "d2", "r3", "a3", "d3"};
  for (const auto& tu : c.tuples) {
    std::vector<std::string> row;
    for (int i = 0; i < 3; ++i) {
      row.push_back(std::to_string(tu.ra[2 * i]));
      row.push_back(std::to_string(tu.ra[2 * i + 1]));
      row.push_back(std::to_string(tu.deltas[i]));
    }
    t.rows.push_back(std::move(row));
  }
  t.sort_rows();
  return t;
}

inline TableArtifact simple_triples_table() {
  TableArtifact t;
  t.name = "simple-triples";
  t.columns = {"r", "a", "delta"};
  for (const auto& tri : simple_triples())
    t.rows.push_back({std::to_string(tri[0]), std::to_string(tri[1]), std::to_string(tri[2])});
  t.sort_rows();
  return t;
}

}  // namespace tables

// ---------------------------------------------------------------------------
// First construction: Betti table over (r2, a2).

struct Case1Row {
  int b2, b3, r, a;
  bool from_classification;  // appears as (r2, a2) of a classified action
  bool matching_admissible;  // reachable through the matching criterion
};

struct Case1Table {
  std::vector<Case1Row> rows;                      // one row per (r, a)
  std::map<int, std::set<int>> by_b2;              // b2 -> b3 values
  std::set<std::pair<int, int>> non_matching_ra;   // classified but not matching-reachable
};

// (r2, a2) values of classified actions with a nonempty fixed locus.
inline std::set<std::pair<int, int>> classified_second_slots(const Census& c) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : c.pairs) {
    if (!p.action_candidate()) continue;
    const TwoElementaryInvariants& v = p.invariants[1];
    if (v.r == 10 && v.a == 10 && v.delta == 0) continue;
    out.emplace(v.r, v.a);
  }
  return out;
}

inline Case1Table case1_table(const Census& c, const NikulinCatalog* nikulin) {
  std::set<std::pair<int, int>> classified = classified_second_slots(c);
  // matching-reachable: the best partner has (r1, a1) = (1, 1)
  std::set<std::pair<int, int>> domain;
  if (nikulin) {
    for (const auto& tri : nikulin->triples) {
      int r = tri[0], a = tri[1];
      if (!nikulin->nonempty_locus_exists(r, a)) continue;
      if (kovalev_lee_admissible(1, 1, r, a)) domain.emplace(r, a);
    }
  }
  Case1Table out;
  for (const auto& ra : classified) {
    if (!kovalev_lee_admissible(1, 1, ra.first, ra.second)) out.non_matching_ra.insert(ra);
    domain.insert(ra);
  }
  for (const auto& [r, a] : domain) {
    auto [b2, b3] = case1_betti(r, a);
    out.rows.push_back({b2, b3, r, a, classified.count({r, a}) > 0,
                        kovalev_lee_admissible(1, 1, r, a)});
    out.by_b2[b2].insert(b3);
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const Case1Row& x, const Case1Row& y) {
    return std::tie(x.b2, x.b3, x.r, x.a) < std::tie(y.b2, y.b3, y.r, y.a);
  });
  return out;
}

inline TableArtifact case1_artifact(const Case1Table& t) {
  TableArtifact a;
  a.name = "betti-case-1";
  a.columns = {"b2", "b3", "r2", "a2", "from_classification", "matching_admissible"};
  for (const auto& r : t.rows)
    a.rows.push_back({std::to_string(r.b2), std::to_string(r.b3), std::to_string(r.r),
                      std::to_string(r.a), r.from_classification ? "1" : "0",
                      r.matching_admissible ? "1" : "0"});
  a.sort_rows();
  return a;
}

// ---------------------------------------------------------------------------
// Second construction: sums (r1+r2, a1+a2) over the classification; the new
// table keeps the sums that fail the matching criterion.

struct Case2Table {
  std::set<std::pair<int, int>> sums;           // all 60
  std::set<std::pair<int, int>> matching;       // 31 already reachable
  std::vector<std::array<int, 4>> new_rows;     // 29 rows (b2, b3, r_sum, a_sum)
};

inline Case2Table case2_table(const Census& c) {
  Case2Table out;
  for (const auto& t : c.tuples)
    out.sums.emplace(t.ra[0] + t.ra[2], t.ra[1] + t.ra[3]);
  for (const auto& [sr, sa] : out.sums) {
    if (kovalev_lee_admissible(0, 0, sr, sa)) {  // criterion on the sums themselves
      out.matching.emplace(sr, sa);
      continue;
    }
    auto [b2, b3] = case2_betti_from_sums(sr, sa);
    out.new_rows.push_back({b2, b3, sr, sa});
  }
  std::sort(out.new_rows.begin(), out.new_rows.end());
  return out;
}

inline TableArtifact case2_artifact(const Case2Table& t) {
  TableArtifact a;
  a.name = "betti-case-2";
  a.columns = {"b2", "b3", "r1+r2", "a1+a2"};
  for (const auto& r : t.new_rows)
    a.rows.push_back({std::to_string(r[0]), std::to_string(r[1]), std::to_string(r[2]),
                      std::to_string(r[3])});
  a.sort_rows();
  return a;
}

// ---------------------------------------------------------------------------
// Third construction: outcomes over classified pairs with Fix(rho1) empty.

struct Case3Report {
  std::set<int> main_b3;                 // both loci nonempty
  std::set<std::pair<int, int>> barely;  // (b2, b3) of the one-locus branch
  int admissible_pairs = 0;
  int barely_pairs = 0;
};

inline Case3Report case3_report(const Census& c) {
  Case3Report out;
  for (const auto& p : c.pairs) {
    if (!p.action_candidate()) continue;
    InvariantInput in = input_from_pair(p);
    Admissibility adm = admissible(ConstructionCase::case3, in);
    if (!adm.ok) continue;
    G2Outcome o = outcome(ConstructionCase::case3, in);
    if (o.barely) {
      // The uniqueness argument for the barely branch rests on the fixed
      // lattices being orthogonal, so it ranges over the pairs that satisfy
      // the trivial-intersection assumption.
      if (!p.trivial_intersection) continue;
      out.barely.emplace(o.b2, o.b3);
      ++out.barely_pairs;
    } else {
      out.main_b3.insert(o.b3);
      ++out.admissible_pairs;
    }
  }
  return out;
}

inline TableArtifact case3_artifact(const Case3Report& r) {
  TableArtifact a;
  a.name = "betti-case-3";
  a.columns = {"branch", "b2", "b3"};
  for (int b3 : r.main_b3) a.rows.push_back({"main", "0", std::to_string(b3)});
  for (const auto& [b2, b3] : r.barely)
    a.rows.push_back({"barely", std::to_string(b2), std::to_string(b3)});
  a.sort_rows();
  return a;
}

// ---------------------------------------------------------------------------
// Dihedral construction: sums (r2+r3, a2+a3). By the relabeling symmetry
// these coincide with the (r1+r2, a1+a2) sums; the full table also feeds in
// the matching-reachable catalog pairs.

struct D4Table {
  std::set<std::pair<int, int>> sums;
  std::map<int, std::set<int>> by_b2;
  std::set<std::pair<int, int>> values;  // distinct (b2, b3)
  bool symmetry_verified = false;        // {(r2+r3,a2+a3)} == {(r1+r2,a1+a2)}
};

inline D4Table d4_table(const Census& c, const NikulinCatalog* nikulin) {
  D4Table out;
  std::set<std::pair<int, int>> sums12, sums23;
  for (const auto& t : c.tuples) {
    sums12.emplace(t.ra[0] + t.ra[2], t.ra[1] + t.ra[3]);
    sums23.emplace(t.ra[2] + t.ra[4], t.ra[3] + t.ra[5]);
  }
  out.symmetry_verified = sums12 == sums23;
  out.sums = sums23;
  if (nikulin) {
    std::set<std::pair<int, int>> ras;
    for (const auto& tri : nikulin->triples) ras.emplace(tri[0], tri[1]);
    for (const auto& [r1, a1] : ras)
      for (const auto& [r2, a2] : ras)
        if (kovalev_lee_admissible(r1, a1, r2, a2)) out.sums.emplace(r1 + r2, a1 + a2);
  }
  for (const auto& [sr, sa] : out.sums) {
    auto [b2, b3] = d4_betti_from_sums(sr, sa);
    out.by_b2[b2].insert(b3);
    out.values.emplace(b2, b3);
  }
  return out;
}

inline TableArtifact d4_artifact(const D4Table& t) {
  TableArtifact a;
  a.name = "betti-case-d4";
  a.columns = {"b2", "b3"};
  for (const auto& [b2, b3] : t.values)
    a.rows.push_back({std::to_string(b2), std::to_string(b3)});
  a.sort_rows();
  return a;
}

// ---------------------------------------------------------------------------
// Literature diff.

struct LiteratureDiff {
  std::set<std::pair<int, int>> produced, known, remaining;
};

inline LiteratureDiff diff_literature(const std::set<std::pair<int, int>>& produced,
                                      const std::vector<LiteratureCatalog::Entry>& catalog) {
  LiteratureDiff d;
  d.produced = produced;
  d.known = LiteratureCatalog::value_set(catalog);
  for (const auto& v : d.produced)
    if (!d.known.count(v)) d.remaining.insert(v);
  return d;
}

inline TableArtifact diff_artifact(const LiteratureDiff& d, const std::string& which) {
  TableArtifact a;
  a.name = "diff-literature-case-" + which;
  a.columns = {"b2", "b3", "status"};
  for (const auto& [b2, b3] : d.produced)
    a.rows.push_back({std::to_string(b2), std::to_string(b3),
                      d.known.count({b2, b3}) ? "known" : "new"});
  a.sort_rows();
  return a;
}

// ---------------------------------------------------------------------------
// Torus fixed sets of a builtin action.

inline TableArtifact fixed_sets_artifact(ConstructionCase c) {
  BuiltinAction action = builtin_action(c);
  TableArtifact a;
  a.name = std::string("fixed-sets-case-") + case_name(c);
  a.columns = {"element", "translation", "linear_diag", "fixed_dim", "components"};
  for (const auto& el : action.elements) {
    std::string label = "psi1^" + std::to_string(el.rho_exponents[0]) + " psi2^" +
                        std::to_string(el.rho_exponents[1]);
    std::ostringstream tr, ld, comps;
    for (int i = 0; i < 3; ++i) tr << (i ? " " : "") << el.map.translation[i];
    for (int i = 0; i < 3; ++i) ld << (i ? " " : "") << el.map.linear(i, i);
    TorusFixedSet f = fixed_set(el.map);
    std::string dim = f.empty() ? "empty" : std::to_string(*f.dimension);
    bool first = true;
    for (const auto& comp : f.components) {
      if (!first) comps << "; ";
      first = false;
      comps << "(" << comp.base[0] << "," << comp.base[1] << "," << comp.base[2] << ")";
      if (comp.direction)
        comps << "+t(" << (*comp.direction)[0] << "," << (*comp.direction)[1] << ","
              << (*comp.direction)[2] << ")";
    }
    a.rows.push_back({label, tr.str(), ld.str(), dim, comps.str()});
  }
  // keep group-element order rather than lexicographic: identity first
  return a;
}

}  // namespace k3g2
