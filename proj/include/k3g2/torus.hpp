#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "k3g2/smith.hpp"

namespace k3g2 {

struct NotFiniteError : std::runtime_error {
  NotFiniteError() : std::runtime_error("NotFinite") {}
};

// The quotient constructions of S x T^3.
enum class ConstructionCase { case1, case2, case3, d4 };

inline const char* case_name(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::case1: return "1";
    case ConstructionCase::case2: return "2";
    case ConstructionCase::case3: return "3";
    default: return "d4";
  }
}

using Vec3Q = std::array<Rat, 3>;
using Vec3I = std::array<Int, 3>;

// Isometry of T^3 = R^3/Z^3: x -> A x + v with A in SO(3) preserving Z^3
// (a signed permutation of determinant 1) and v rational mod 1. All maps in
// the builtin actions have translation denominators dividing 8, which the
// fixed-point grid oracle relies on.
struct AffineTorusMap {
  Matrix<int> linear;  // 3x3
  Vec3Q translation;   // entries reduced to [0,1)

  AffineTorusMap(Matrix<int> a, Vec3Q v) : linear(std::move(a)), translation(std::move(v)) {
    validate();
    for (auto& t : translation) t = frac_part(t);
  }

  static AffineTorusMap identity() {
    return AffineTorusMap(Matrix<int>::identity(3), {Rat(0), Rat(0), Rat(0)});
  }

  bool operator==(const AffineTorusMap& o) const {
    return linear == o.linear && translation == o.translation;
  }
  bool operator<(const AffineTorusMap& o) const {
    if (!(linear == o.linear)) return linear < o.linear;
    return translation < o.translation;
  }

 private:
  void validate() const {
    if (linear.rows() != 3 || linear.cols() != 3)
      throw std::invalid_argument("AffineTorusMap: linear part must be 3x3");
    // orthogonal integer matrix = signed permutation
    for (int c = 0; c < 3; ++c) {
      int nonzero = 0;
      for (int r = 0; r < 3; ++r) {
        int e = linear(r, c);
        if (e != 0 && e != 1 && e != -1)
          throw std::invalid_argument("AffineTorusMap: entries must be in {-1,0,1}");
        if (e != 0) ++nonzero;
      }
      if (nonzero != 1)
        throw std::invalid_argument("AffineTorusMap: linear part must be orthogonal");
    }
    long long det =
        (long long)linear(0, 0) * (linear(1, 1) * linear(2, 2) - linear(1, 2) * linear(2, 1)) -
        (long long)linear(0, 1) * (linear(1, 0) * linear(2, 2) - linear(1, 2) * linear(2, 0)) +
        (long long)linear(0, 2) * (linear(1, 0) * linear(2, 1) - linear(1, 1) * linear(2, 0));
    if (det != 1) throw std::invalid_argument("AffineTorusMap: determinant must be +1");
    for (const auto& t : translation)
      if (8 % denominator(t) != 0)
        throw std::invalid_argument("AffineTorusMap: translation denominator must divide 8");
  }
};

// f o g: apply g first.
inline AffineTorusMap compose(const AffineTorusMap& f, const AffineTorusMap& g) {
  Matrix<int> a = f.linear * g.linear;
  Vec3Q v;
  for (int i = 0; i < 3; ++i) {
    Rat s = f.translation[i];
    for (int j = 0; j < 3; ++j) s += Rat(f.linear(i, j)) * g.translation[j];
    v[i] = frac_part(s);
  }
  return AffineTorusMap(std::move(a), std::move(v));
}

inline AffineTorusMap inverse(const AffineTorusMap& f) {
  Matrix<int> at = f.linear.transposed();
  Vec3Q v;
  for (int i = 0; i < 3; ++i) {
    Rat s(0);
    for (int j = 0; j < 3; ++j) s -= Rat(at(i, j)) * f.translation[j];
    v[i] = frac_part(s);
  }
  return AffineTorusMap(std::move(at), std::move(v));
}

// Fixed-point set of an affine torus map: the solutions of
// (A - I) x = -v (mod Z^3). Components are points, circles, or the whole
// torus; dimension 2 cannot occur for A in SO(3).
struct TorusFixedSet {
  struct Component {
    Vec3Q base;
    std::optional<Vec3I> direction;  // primitive, first nonzero entry > 0
  };
  std::optional<int> dimension;  // empty set has no dimension
  std::vector<Component> components;

  bool empty() const { return !dimension.has_value(); }
};

namespace detail {

// Canonical base point of the circle {p + t d mod Z^3}: set the first
// coordinate moved by d to zero, then take the lexicographically smallest
// of the finitely many remaining representatives.
inline Vec3Q canonical_circle_base(const Vec3Q& p, const Vec3I& d) {
  int i0 = -1;
  for (int i = 0; i < 3 && i0 < 0; ++i)
    if (d[i] != 0) i0 = i;
  Vec3Q best{Rat(2), Rat(2), Rat(2)};
  Int di = d[i0];
  Int steps = di < 0 ? -di : di;
  for (Int s(0); s < steps; ++s) {
    Rat t = (Rat(s) - p[i0]) / Rat(di);
    Vec3Q q;
    for (int i = 0; i < 3; ++i) q[i] = frac_part(p[i] + t * Rat(d[i]));
    if (q < best) best = q;
  }
  return best;
}

}  // namespace detail

inline TorusFixedSet fixed_set(const AffineTorusMap& f) {
  IntMat a_minus_i(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a_minus_i(i, j) = Int(f.linear(i, j) - (i == j ? 1 : 0));
  SmithDecomposition snf = smith_normal_form(a_minus_i);

  // With A - I = U D V: D (V x) = -U^{-1} v (mod Z^3) coordinatewise.
  Vec3Q c;
  for (int i = 0; i < 3; ++i) {
    Rat s(0);
    for (int j = 0; j < 3; ++j) s -= Rat(snf.u_inv(i, j)) * f.translation[j];
    c[i] = s;
  }

  std::vector<int> free_idx;
  for (int i = 0; i < 3; ++i) {
    if (snf.diag(i) == 0) {
      if (!is_integer(c[i])) return TorusFixedSet{};  // inconsistent row: empty
      free_idx.push_back(i);
    }
  }
  int dim = int(free_idx.size());
  if (dim == 2) throw std::logic_error("fixed_set: nullity 2 impossible for SO(3) maps");

  TorusFixedSet out;
  out.dimension = dim;
  if (dim == 3) {
    out.components.push_back({{Rat(0), Rat(0), Rat(0)}, std::nullopt});
    return out;
  }

  std::optional<Vec3I> direction;
  if (dim == 1) {
    Vec3I d{snf.v_inv(0, free_idx[0]), snf.v_inv(1, free_idx[0]), snf.v_inv(2, free_idx[0])};
    int lead = -1;
    for (int i = 0; i < 3; ++i)
      if (d[i] != 0) { lead = i; break; }
    if (d[lead] < 0)
      for (auto& e : d) e = -e;
    direction = d;
  }

  // Enumerate the d_i residue choices per constrained coordinate.
  std::vector<Vec3Q> ys{{Rat(0), Rat(0), Rat(0)}};
  for (int i = 0; i < 3; ++i) {
    Int di = snf.diag(i);
    if (di == 0) continue;
    std::vector<Vec3Q> next;
    for (const auto& y : ys)
      for (Int t(0); t < di; ++t) {
        Vec3Q y2 = y;
        y2[i] = (c[i] + Rat(t)) / Rat(di);
        next.push_back(y2);
      }
    ys = std::move(next);
  }

  std::vector<TorusFixedSet::Component> comps;
  std::set<Vec3Q> seen;
  for (const auto& y : ys) {
    Vec3Q x;
    for (int i = 0; i < 3; ++i) {
      Rat s(0);
      for (int j = 0; j < 3; ++j) s += Rat(snf.v_inv(i, j)) * y[j];
      x[i] = frac_part(s);
    }
    if (direction) x = detail::canonical_circle_base(x, *direction);
    if (seen.insert(x).second) comps.push_back({x, direction});
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.base < b.base; });
  out.components = std::move(comps);
  return out;
}

// Group generated by affine torus maps, with multiplication table and
// small-order structure recognition.
struct FiniteActionGroup {
  std::vector<AffineTorusMap> elements;          // elements[0] = identity
  std::vector<std::vector<int>> multiplication;  // [i][j] = index of e_i o e_j

  int order() const { return int(elements.size()); }

  bool is_abelian() const {
    for (size_t i = 0; i < elements.size(); ++i)
      for (size_t j = i + 1; j < elements.size(); ++j)
        if (multiplication[i][j] != multiplication[j][i]) return false;
    return true;
  }

  int element_order(int i) const {
    int cur = i, n = 1;
    while (cur != 0) {
      cur = multiplication[cur][i];
      ++n;
    }
    return n;
  }

  // Dihedral group of order 2n, n >= 3: a rotation of order n and a
  // reflection s outside <r> with s r s^{-1} = r^{-1}.
  bool is_dihedral() const {
    int n2 = order();
    if (n2 % 2 != 0 || n2 < 6) return false;
    int n = n2 / 2;
    for (int r = 0; r < n2; ++r) {
      if (element_order(r) != n) continue;
      std::set<int> cyc;
      int cur = 0;
      do {
        cyc.insert(cur);
        cur = multiplication[cur][r];
      } while (cur != 0);
      for (int s = 0; s < n2; ++s) {
        if (cyc.count(s) || element_order(s) != 2) continue;
        // s r s = r^{-1}
        int srs = multiplication[multiplication[s][r]][s];
        int rinv = r;
        while (multiplication[rinv][r] != 0) rinv = multiplication[rinv][r];
        if (srs == rinv) return true;
      }
    }
    return false;
  }
};

inline FiniteActionGroup generate_group(const std::vector<AffineTorusMap>& generators,
                                        size_t cap = 10000) {
  FiniteActionGroup g;
  std::map<AffineTorusMap, int> index;
  g.elements.push_back(AffineTorusMap::identity());
  index.emplace(g.elements[0], 0);
  for (size_t head = 0; head < g.elements.size(); ++head) {
    AffineTorusMap cur = g.elements[head];
    for (const auto& gen : generators) {
      AffineTorusMap nxt = compose(cur, gen);
      if (index.emplace(nxt, int(g.elements.size())).second) {
        g.elements.push_back(nxt);
        if (g.elements.size() > cap) throw NotFiniteError();
      }
    }
  }
  int n = g.order();
  g.multiplication.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.multiplication[i][j] = index.at(compose(g.elements[i], g.elements[j]));
  return g;
}

// One element of a builtin action: the torus map, the exponents (j, k) of
// the K3 involutions rho1^j rho2^k it pairs with, and the induced signs on
// the Kaehler triple and the coordinate 1-forms. For every element of the
// builtin actions the linear part is diagonal and the two sign patterns
// agree, which is exactly the compatibility the product structure needs.
struct ActionElement {
  AffineTorusMap map;
  std::array<int, 2> rho_exponents;
  std::array<int, 3> omega_signs;
  std::array<int, 3> dx_signs;
};

struct BuiltinAction {
  ConstructionCase which;
  AffineTorusMap psi1, psi2;
  std::vector<ActionElement> elements;  // the full group, identity first
};

namespace detail {

inline Matrix<int> diag3(int a, int b, int c) {
  Matrix<int> m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

inline std::array<int, 3> rho_signs(int j, int k) {
  // rho1: (+,-,-), rho2: (-,+,-) on (omega1, omega2, omega3)
  std::array<int, 3> s{1, 1, 1};
  if (j % 2) { s[1] = -s[1]; s[2] = -s[2]; }
  if (k % 2) { s[0] = -s[0]; s[2] = -s[2]; }
  return s;
}

}  // namespace detail

inline BuiltinAction builtin_action(ConstructionCase c) {
  using detail::diag3;
  const Rat h(1, 2), q(1, 4), z(0);
  AffineTorusMap psi1 = AffineTorusMap::identity(), psi2 = psi1;
  int order1 = 2;
  switch (c) {
    case ConstructionCase::case1:
      psi1 = AffineTorusMap(diag3(1, -1, -1), {h, z, h});
      psi2 = AffineTorusMap(diag3(-1, 1, -1), {z, z, z});
      break;
    case ConstructionCase::case2:
      psi1 = AffineTorusMap(diag3(1, -1, -1), {z, z, z});
      psi2 = AffineTorusMap(diag3(-1, 1, -1), {z, z, h});
      break;
    case ConstructionCase::case3:
      psi1 = AffineTorusMap(diag3(1, -1, -1), {z, z, z});
      psi2 = AffineTorusMap(diag3(-1, 1, -1), {z, z, z});
      break;
    case ConstructionCase::d4:
      psi1 = AffineTorusMap(diag3(1, -1, -1), {q, q, z});
      psi2 = AffineTorusMap(diag3(-1, 1, -1), {z, z, z});
      order1 = 4;
      break;
  }

  BuiltinAction out{c, psi1, psi2, {}};
  for (int j = 0; j < order1; ++j)
    for (int k = 0; k < 2; ++k) {
      AffineTorusMap m = AffineTorusMap::identity();
      for (int t = 0; t < k; ++t) m = compose(psi2, m);
      for (int t = 0; t < j; ++t) m = compose(psi1, m);
      std::array<int, 3> dx{m.linear(0, 0), m.linear(1, 1), m.linear(2, 2)};
      out.elements.push_back({m, {j % 2, k}, detail::rho_signs(j, k), dx});
    }
  return out;
}

}  // namespace k3g2
