#pragma once

#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace k3g2 {

struct CatalogError : std::runtime_error {
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

// The 75 deformation classes (r, a, delta) of non-symplectic involutions,
// loaded from a plain-text data file: one triple per line, '#' comments.
struct NikulinCatalog {
  std::set<std::array<int, 3>> triples;

  static NikulinCatalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open data file: " + path);
    NikulinCatalog cat;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream is(line);
      int r, a, d;
      if (!(is >> r)) continue;  // blank or comment-only line
      if (!(is >> a >> d))
        throw CatalogError(path + ":" + std::to_string(lineno) + ": expected 'r a delta'");
      if (r < 1 || r > 20 || a < 0 || a > 11 || r - a < 0 || (d != 0 && d != 1))
        throw CatalogError(path + ":" + std::to_string(lineno) +
                           ": triple outside the stated bounds");
      if (!cat.triples.insert({r, a, d}).second)
        throw CatalogError(path + ":" + std::to_string(lineno) + ": duplicate triple");
    }
    if (cat.triples.size() != 75)
      throw CatalogError(path + ": expected 75 triples, found " +
                         std::to_string(cat.triples.size()));
    return cat;
  }

  bool contains(int r, int a, int d) const { return triples.count({r, a, d}) > 0; }
  bool contains_ra(int r, int a) const {
    return contains(r, a, 0) || contains(r, a, 1);
  }
  // (r, a) for which a nonempty fixed locus exists: any delta except the
  // lone (10,10,0) class.
  bool nonempty_locus_exists(int r, int a) const {
    return contains(r, a, 1) || (contains(r, a, 0) && !(r == 10 && a == 10));
  }
};

// Known (b2, b3) values from the literature, keyed by construction case.
struct LiteratureCatalog {
  struct Entry {
    int b2, b3;
    std::string source;
  };
  std::vector<Entry> case2, d4;

  static LiteratureCatalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open data file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CatalogError(path + ": " + e.what());
    }
    LiteratureCatalog cat;
    auto parse = [&](const char* key, std::vector<Entry>& out) {
      if (!j.contains(key)) throw CatalogError(path + ": missing key " + std::string(key));
      for (const auto& e : j.at(key))
        out.push_back({e.at("b2").get<int>(), e.at("b3").get<int>(),
                       e.at("source").get<std::string>()});
    };
    parse("case2", cat.case2);
    parse("d4", cat.d4);
    return cat;
  }

  static std::set<std::pair<int, int>> value_set(const std::vector<Entry>& entries) {
    std::set<std::pair<int, int>> out;
    for (const auto& e : entries) out.emplace(e.b2, e.b3);
    return out;
  }
};

}  // namespace k3g2
