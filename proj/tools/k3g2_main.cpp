// Command-line pipeline around the classification engine: enumerate the
// involution pairs, emit the census and Betti tables, diff against the
// literature catalog, and run the self-verification suite.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "k3g2/verify.hpp"

namespace {

using namespace k3g2;

struct GlobalOptions {
  std::string format = "csv";
  std::string out;
  std::string nikulin_path = "data/nikulin75.txt";
  std::string literature_path = "data/literature.json";
  bool simple_only = false;
  int threads = 0;
};

OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::csv;
  if (f == "json") return OutputFormat::json;
  return OutputFormat::md;
}

// Table to --out (summary to stdout), or table to stdout (summary to stderr).
void emit(const GlobalOptions& g, const TableArtifact& table,
          const std::string& path_suffix = "") {
  std::string rendered = table.render(parse_format(g.format));
  if (!g.out.empty()) {
    std::string path = g.out + path_suffix;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << rendered;
  } else {
    std::cout << rendered;
  }
}

std::ostream& summary(const GlobalOptions& g) { return g.out.empty() ? std::cerr : std::cout; }

NikulinCatalog load_nikulin(const GlobalOptions& g) {
  return NikulinCatalog::load(g.nikulin_path);  // throws CatalogError
}

int cmd_classify(const GlobalOptions& g, bool prime_only) {
  if (prime_only) {
    PrimePairCounts c = prime_pair_counts();
    TableArtifact t;
    t.name = "prime-pair-classes";
    t.columns = {"rho1", "rho2"};
    for (const auto& [a, b] : enumerate_prime_pairs()) t.rows.push_back({a.label(), b.label()});
    t.sort_rows();
    emit(g, t);
    summary(g) << "rho' pair classes: " << c.total() << " (" << c.diag_diag << " + "
               << c.swap_diag << " + " << c.diag_swap << " + " << c.swap_swap << ")\n";
    return 0;
  }
  Census census = Census::run(g.threads);
  emit(g, tables::pairs_table(census));
  emit(g, tables::tuples_table(census), g.out.empty() ? "" : ".tuples");
  summary(g) << "pair classes: " << census.pairs.size() << "\n"
             << "distinct invariant tuples: " << census.tuples.size() << "\n";
  return 0;
}

int cmd_tuples(const GlobalOptions& g) {
  Census census = Census::run(g.threads);
  emit(g, tables::tuples_table(census));
  summary(g) << "distinct invariant tuples: " << census.tuples.size() << "\n";
  return 0;
}

int cmd_simple_triples(const GlobalOptions& g) {
  TableArtifact t = tables::simple_triples_table();
  emit(g, t);
  summary(g) << "simple involution triples: " << t.rows.size() << "\n";
  return 0;
}

int cmd_betti(const GlobalOptions& g, const std::string& which) {
  Census census = Census::run(g.threads);
  if (which == "1") {
    std::optional<NikulinCatalog> nik;
    if (!g.simple_only) nik = load_nikulin(g);
    Case1Table t = case1_table(census, nik ? &*nik : nullptr);
    emit(g, case1_artifact(t));
    summary(g) << "distinct (r2, a2): " << t.rows.size() << "\n";
    if (!t.non_matching_ra.empty()) {
      summary(g) << "classified pairs outside the matching criterion:";
      for (const auto& [r, a] : t.non_matching_ra) summary(g) << " (" << r << "," << a << ")";
      summary(g) << "\n";
    }
  } else if (which == "2") {
    Case2Table t = case2_table(census);
    emit(g, case2_artifact(t));
    summary(g) << "sum pairs: " << t.sums.size() << ", matching-reachable: "
               << t.matching.size() << ", new rows: " << t.new_rows.size() << "\n";
  } else if (which == "3") {
    Case3Report r = case3_report(census);
    emit(g, case3_artifact(r));
    summary(g) << "main-branch b3 values:";
    for (int b3 : r.main_b3) summary(g) << " " << b3;
    summary(g) << "\nbarely outcomes:";
    for (const auto& [b2, b3] : r.barely) summary(g) << " (" << b2 << "," << b3 << ")";
    summary(g) << "\n";
  } else {  // d4
    std::optional<NikulinCatalog> nik;
    if (!g.simple_only) nik = load_nikulin(g);
    D4Table t = d4_table(census, nik ? &*nik : nullptr);
    emit(g, d4_artifact(t));
    summary(g) << "distinct (b2, b3): " << t.values.size() << "\n";
    if (!t.symmetry_verified)
      summary(g) << "warning: (r2+r3, a2+a3) sums differ from (r1+r2, a1+a2) sums\n";
  }
  return 0;
}

int cmd_diff_literature(const GlobalOptions& g, const std::string& which) {
  LiteratureCatalog lit = LiteratureCatalog::load(g.literature_path);
  Census census = Census::run(g.threads);
  std::set<std::pair<int, int>> produced;
  const std::vector<LiteratureCatalog::Entry>* catalog;
  if (which == "2") {
    Case2Table t = case2_table(census);
    for (const auto& r : t.new_rows) produced.emplace(r[0], r[1]);
    catalog = &lit.case2;
  } else {
    std::optional<NikulinCatalog> nik;
    if (!g.simple_only) nik = load_nikulin(g);
    D4Table t = d4_table(census, nik ? &*nik : nullptr);
    produced = t.values;
    catalog = &lit.d4;
  }
  LiteratureDiff d = diff_literature(produced, *catalog);
  emit(g, diff_artifact(d, which));
  summary(g) << "produced: " << d.produced.size() << ", known: " << d.known.size()
             << ", remaining: " << d.remaining.size() << "\n";
  return 0;
}

int cmd_fixed_sets(const GlobalOptions& g, const std::string& which) {
  ConstructionCase c = which == "1"   ? ConstructionCase::case1
                       : which == "2" ? ConstructionCase::case2
                       : which == "3" ? ConstructionCase::case3
                                      : ConstructionCase::d4;
  emit(g, fixed_sets_artifact(c));
  return 0;
}

int cmd_verify(const GlobalOptions& g, bool skip_external) {
  VerifyOptions opt;
  opt.nikulin_path = g.nikulin_path;
  opt.literature_path = g.literature_path;
  opt.skip_external = skip_external;
  opt.threads = g.threads;
  auto results = run_verification(opt);
  for (const auto& r : results) {
    std::cout << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " criterion-"
              << (r.number < 10 ? "0" : "") << r.number << " " << r.name;
    if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
    std::cout << "\n";
  }
  bool ok = all_passed(results);
  std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of commuting non-symplectic involution pairs on the "
               "K3 lattice and Betti numbers of the associated quotient constructions"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("--out", g.out, "Write tables to this path instead of stdout");
  app.add_option("--nikulin-data", g.nikulin_path, "Path to the 75-triple data file");
  app.add_option("--literature-data", g.literature_path, "Path to the literature catalog");
  app.add_flag("--simple-only", g.simple_only, "Use only the classified simple pairs");
  app.add_option("--threads", g.threads, "Worker threads for the classification");

  bool prime_only = false;
  CLI::App* classify = app.add_subcommand("classify-pairs", "Run the pair classification");
  classify->add_flag("--prime-only", prime_only, "Only enumerate the rho' pair classes");

  CLI::App* tuples = app.add_subcommand("tuples", "Emit the invariant-tuple census");
  CLI::App* simple = app.add_subcommand("simple-triples", "Emit the simple-involution triples");

  std::string betti_case, diff_case, fixed_case;
  CLI::App* betti = app.add_subcommand("betti", "Emit a Betti table");
  betti->add_option("--case", betti_case, "Construction case")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "d4"}));
  CLI::App* diff = app.add_subcommand("diff-literature", "Diff produced values against the catalog");
  diff->add_option("--case", diff_case, "Construction case")
      ->required()
      ->check(CLI::IsMember({"2", "d4"}));
  CLI::App* fixed = app.add_subcommand("fixed-sets", "Emit torus fixed sets for a case");
  fixed->add_option("--case", fixed_case, "Construction case")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "d4"}));

  bool skip_external = false;
  CLI::App* verify = app.add_subcommand("verify-paper", "Run every acceptance criterion");
  verify->add_flag("--skip-external", skip_external,
                   "Skip criteria that need the bundled data files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(g, prime_only);
    if (tuples->parsed()) return cmd_tuples(g);
    if (simple->parsed()) return cmd_simple_triples(g);
    if (betti->parsed()) return cmd_betti(g, betti_case);
    if (diff->parsed()) return cmd_diff_literature(g, diff_case);
    if (fixed->parsed()) return cmd_fixed_sets(g, fixed_case);
    if (verify->parsed()) return cmd_verify(g, skip_external);
  } catch (const CatalogError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
