#include "hopfkit/examples.hpp"

#include <algorithm>
#include <array>

namespace hopfkit {

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  throw Error(ErrorCode::InvalidInput, "group table has no identity");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  const std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  throw Error(ErrorCode::InvalidInput, "element " + std::to_string(g) + " has no inverse");
}

void validate_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty group table");
  if (!g.names.empty() && g.names.size() != n) throw Error(ErrorCode::InvalidInput, "wrong number of element names");
  for (const auto& row : g.table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "group table is not square");
    for (auto x : row)
      if (x >= n) throw Error(ErrorCode::InvalidInput, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::InvalidInput, "group table is not associative");
  g.identity();
  for (std::size_t a = 0; a < n; ++a) g.inverse(a);
}

namespace {

std::vector<std::string> names_or_default(const GroupTable& g) {
  if (!g.names.empty()) return g.names;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back("g" + std::to_string(i));
  return out;
}

GroupTable from_elements(const std::vector<std::vector<std::size_t>>& perms, std::vector<std::string> names) {
  // composition (gh)(x) = g(h(x))
  GroupTable t;
  t.names = std::move(names);
  const std::size_t n = perms.size();
  t.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(perms[a].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
      t.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  validate_group(t);
  return t;
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group of order 0");
  GroupTable t;
  t.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.table[a][b] = (a + b) % n;
    t.names.push_back(a == 0 ? "e" : a == 1 ? "a" : "a" + std::to_string(a));
  }
  return t;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const auto na = names_or_default(a), nb = names_or_default(b);
  const std::size_t m = b.order(), n = a.order() * m;
  GroupTable t;
  t.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t.table[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
    t.names.push_back("(" + na[x / m] + "," + nb[x % m] + ")");
  }
  return t;
}

GroupTable klein_four_group() {
  GroupTable t = direct_product(cyclic_group(2), cyclic_group(2));
  t.names = {"e", "a", "b", "ab"};
  return t;
}

GroupTable symmetric_group_s3() {
  // x ↦ εx + c on ℤ/3: r = (1, 1), s = (−1, 0)
  std::vector<std::vector<std::size_t>> perms;
  for (int eps : {1, -1})
    for (int c : {0, 1, 2}) {
      const int shift = eps == 1 ? c : (3 - c) % 3;  // s r^c: x ↦ −x − c
      std::vector<std::size_t> p(3);
      for (int x = 0; x < 3; ++x) p[x] = static_cast<std::size_t>(((eps * x + shift) % 3 + 3) % 3);
      perms.push_back(p);
    }
  return from_elements(perms, {"e", "r", "r2", "s", "sr", "sr2"});
}

HopfData group_algebra(const Field& f, const GroupTable& g) {
  validate_group(g);
  const std::size_t n = g.order();
  Matrix mult(f, n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult(g.mul(a, b), a * n + b) = f.one();
  HopfData h;
  h.algebra = StructureAlgebra(f, n, std::move(mult), names_or_default(g));
  h.coproduct = Matrix(f, n * n, n);
  h.counit = Vec(n, f.one());
  h.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.coproduct(a * n + a, a) = f.one();
    h.antipode(g.inverse(a), a) = f.one();
  }
  return h;
}

HopfData dual_group_algebra(const Field& f, const GroupTable& g) { return dual_hopf(group_algebra(f, g)); }

HopfData sweedler_h4(const Field& f) {
  if (f.characteristic() == 2) throw Error(ErrorCode::InvalidInput, "Sweedler's algebra needs characteristic ≠ 2");
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  const Scalar one = f.one(), m1 = -f.one();
  struct Entry {
    std::size_t i, j, k;
    Scalar c;
  };
  const std::vector<Entry> prods = {
      {0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {0, 3, 3, one},  //
      {1, 0, 1, one}, {1, 1, 0, one}, {1, 2, 3, one}, {1, 3, 2, one},  //
      {2, 0, 2, one}, {2, 1, 3, m1},                                   // xg = −gx
      {3, 0, 3, one}, {3, 1, 2, m1},                                   // gx·g = −x
  };
  Matrix mult(f, 4, 16);
  for (const auto& e : prods) mult(e.k, e.i * 4 + e.j) = e.c;
  HopfData h;
  h.algebra = StructureAlgebra(f, 4, std::move(mult), {"1", "g", "x", "gx"});
  h.coproduct = Matrix(f, 16, 4);
  h.coproduct(0 * 4 + 0, 0) = one;
  h.coproduct(1 * 4 + 1, 1) = one;
  h.coproduct(2 * 4 + 0, 2) = one;  // x⊗1
  h.coproduct(1 * 4 + 2, 2) = one;  // g⊗x
  h.coproduct(3 * 4 + 1, 3) = one;  // gx⊗g
  h.coproduct(0 * 4 + 3, 3) = one;  // 1⊗gx
  h.counit = {one, one, f.zero(), f.zero()};
  h.antipode = Matrix(f, 4, 4);
  h.antipode(0, 0) = one;
  h.antipode(1, 1) = one;
  h.antipode(3, 2) = m1;   // S(x) = −gx
  h.antipode(2, 3) = one;  // S(gx) = x
  return h;
}

ComoduleAlgebra cocycle_twisted_group_algebra(const Field& f, const GroupTable& g,
                                              const std::vector<std::vector<Scalar>>& sigma) {
  validate_group(g);
  const std::size_t n = g.order();
  if (sigma.size() != n) throw Error(ErrorCode::InvalidInput, "cocycle has wrong size");
  for (const auto& row : sigma) {
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "cocycle has wrong size");
    for (const auto& s : row)
      if (s.is_zero()) throw Error(ErrorCode::InvalidInput, "cocycle takes the value 0");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (sigma[a][b] * sigma[g.mul(a, b)][c] != sigma[b][c] * sigma[a][g.mul(b, c)])
          throw Error(ErrorCode::InvalidInput, "2-cocycle identity fails at (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
  const HopfData h = group_algebra(f, g);
  Matrix mult(f, n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult(g.mul(a, b), a * n + b) = sigma[a][b];
  std::vector<std::string> labels;
  for (const auto& s : names_or_default(g)) labels.push_back("u_" + s);
  Matrix alpha(f, n * n, n);
  for (std::size_t a = 0; a < n; ++a) alpha(a * n + a, a) = f.one();
  ComoduleAlgebra out{h, StructureAlgebra(f, n, std::move(mult), std::move(labels)), alpha};
  ensure(check_comodule_algebra(out).all_passed(), "twisted group algebra is not a comodule algebra");
  ensure(coinvariants(out).dim() == 1 && is_galois(out), "twisted group algebra is not a Galois object");
  return out;
}

ComoduleAlgebra free_gset_function_algebra(const Field& f, const GroupTable& g, std::size_t set_size,
                                           const std::vector<std::vector<std::size_t>>& act) {
  validate_group(g);
  const std::size_t n = g.order(), e = g.identity();
  if (set_size == 0) throw Error(ErrorCode::InvalidInput, "empty G-set");
  if (act.size() != n) throw Error(ErrorCode::InvalidInput, "action table needs one row per group element");
  for (const auto& row : act) {
    if (row.size() != set_size) throw Error(ErrorCode::InvalidInput, "action row has wrong length");
    for (auto x : row)
      if (x >= set_size) throw Error(ErrorCode::InvalidInput, "action entry out of range");
  }
  for (std::size_t x = 0; x < set_size; ++x) {
    if (act[e][x] != x) throw Error(ErrorCode::InvalidInput, "identity does not act trivially");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (act[a][act[b][x]] != act[g.mul(a, b)][x]) throw Error(ErrorCode::InvalidInput, "not a group action");
      if (a != e && act[a][x] == x)
        throw Error(ErrorCode::InvalidInput, "action is not free: element " + std::to_string(a) +
                                                 " fixes point " + std::to_string(x));
    }
  }
  const HopfData h = dual_group_algebra(f, g);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < set_size; ++x) labels.push_back("p" + std::to_string(x));
  StructureAlgebra alg = diagonal_algebra(f, set_size);
  alg = StructureAlgebra(f, set_size, alg.mult(), labels);
  // α(δ_y) = Σ_{x◁a = y} δ_x ⊗ δ_a
  Matrix alpha(f, set_size * n, set_size);
  for (std::size_t x = 0; x < set_size; ++x)
    for (std::size_t a = 0; a < n; ++a) alpha(x * n + a, act[g.inverse(a)][x]) = f.one();
  ComoduleAlgebra out{h, alg, alpha};
  ensure(check_comodule_algebra(out).all_passed(), "function algebra of a G-set is not a comodule algebra");
  ensure(is_galois(out), "free G-set function algebra is not Galois");
  return out;
}

ComoduleAlgebra regular_gset_function_algebra(const Field& f, const GroupTable& g, std::size_t copies) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(n * copies));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t x = 0; x < n; ++x) act[a][c * n + x] = c * n + g.mul(a, x);
  return free_gset_function_algebra(f, g, n * copies, act);
}

ComoduleAlgebra self_coaction(const HopfData& h) { return {h, h.algebra, h.coproduct}; }

ComoduleAlgebra graded_matrix_algebra(const Field& f, const GroupTable& g, const std::vector<std::size_t>& degrees) {
  validate_group(g);
  const std::size_t n = degrees.size(), m = g.order();
  for (auto d : degrees)
    if (d >= m) throw Error(ErrorCode::InvalidInput, "degree out of range");
  const HopfData h = group_algebra(f, g);
  Matrix alpha(f, n * n * m, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t deg = g.mul(g.inverse(degrees[a]), degrees[b]);
      alpha((a * n + b) * m + deg, a * n + b) = f.one();
    }
  ComoduleAlgebra out{h, matrix_algebra(f, n), alpha};
  ensure(check_comodule_algebra(out).all_passed(), "graded matrix algebra is not a comodule algebra");
  return out;
}

ComoduleAlgebra direct_sum(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  if (!(a.hopf == b.hopf)) throw Error(ErrorCode::InvalidInput, "direct sum needs a common Hopf algebra");
  const Field& f = a.field();
  const std::size_t n = a.hopf.dim(), da = a.dim(), db = b.dim();
  Matrix alpha(f, (da + db) * n, da + db);
  for (std::size_t r = 0; r < da * n; ++r)
    for (std::size_t c = 0; c < da; ++c) alpha(r, c) = a.coaction(r, c);
  for (std::size_t r = 0; r < db * n; ++r)
    for (std::size_t c = 0; c < db; ++c) alpha(da * n + r, da + c) = b.coaction(r, c);
  return {a.hopf, direct_sum(a.algebra, b.algebra), alpha};
}

}  // namespace hopfkit
