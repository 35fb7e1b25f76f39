#include <algorithm>

#include "hopfkit/assoc.hpp"

namespace hopfkit {

// ---------------------------------------------------------------- radical

namespace {

Subspace radical_rational(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Vec tr(n, f.zero());
  for (std::size_t k = 0; k < n; ++k) tr[k] = a.left(k).trace();
  // Gram matrix of (x, y) -> tr(L_{xy}).
  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(a.product(i, j), tr);
  return kernel(gram);
}

using IntMat = std::vector<__int128>;

IntMat int_mul(const IntMat& x, const IntMat& y, std::size_t n, __int128 mod) {
  IntMat z(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const __int128 xik = x[i * n + k];
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i * n + j] = (z[i * n + j] + xik * y[k * n + j]) % mod;
    }
  return z;
}

/// (Tr(lift(M)^(p^i)) mod p^(i+1)) / p^i, entries of M lifted to [0, p).
std::int64_t g_value(const Matrix& m, std::int64_t p, unsigned i) {
  const std::size_t n = m.rows();
  __int128 mod = 1;
  for (unsigned k = 0; k < i; ++k) mod *= p;
  const __int128 pi = mod;  // p^i
  mod *= p;
  IntMat x(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) x[r * n + c] = m(r, c).residue();
  // x^(p^i) by repeated p-th powers.
  for (unsigned k = 0; k < i; ++k) {
    IntMat acc(n * n, 0);
    for (std::size_t d = 0; d < n; ++d) acc[d * n + d] = 1;
    IntMat base = x;
    for (std::int64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = int_mul(acc, base, n, mod);
      if (e > 1) base = int_mul(base, base, n, mod);
    }
    x = std::move(acc);
  }
  __int128 t = 0;
  for (std::size_t d = 0; d < n; ++d) t = (t + x[d * n + d]) % mod;
  ensure(t % pi == 0, "trace of p-power map not divisible by p^i");
  return static_cast<std::int64_t>((t / pi) % p);
}

Subspace radical_prime(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const std::int64_t p = f.characteristic();
  unsigned l = 0;
  for (std::int64_t q = p; q <= static_cast<std::int64_t>(n); q *= p) ++l;
  Subspace ideal = Subspace::full(f, n);
  for (unsigned i = 0; i <= l && !ideal.is_zero(); ++i) {
    const auto basis = ideal.basis_vectors();
    Matrix g(f, n, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec xy = a.multiply(basis[b], a.basis_vector(j));
        g(j, b) = f.from_int(g_value(a.left_mult(xy), p, i));
      }
    const Subspace coeffs = kernel(g);
    std::vector<Vec> next;
    for (const auto& c : coeffs.basis_vectors()) next.push_back(ideal.basis().apply_left(c));
    ideal = Subspace::span(f, n, next);
  }
  return ideal;
}

}  // namespace

Subspace radical(const StructureAlgebra& a) {
  a.unit_or_throw();
  if (a.dim() == 0) return Subspace(a.field(), 0);
  return a.field().is_rationals() ? radical_rational(a) : radical_prime(a);
}

bool is_semisimple(const StructureAlgebra& a) { return radical(a).is_zero(); }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view block_status_name(BlockStatus s) {
  switch (s) {
    case BlockStatus::Split: return "Split";
    case BlockStatus::NotSplit: return "NotSplit";
    case BlockStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view morita_verdict_name(MoritaVerdict v) {
  switch (v) {
    case MoritaVerdict::Strict: return "Strict";
    case MoritaVerdict::SurjectiveOnly: return "SurjectiveOnly";
    case MoritaVerdict::NotSurjective: return "NotSurjective";
  }
  return "?";
}

// ---------------------------------------------------------------- idempotents

std::vector<Vec> primitive_idempotents_split_commutative(const StructureAlgebra& c) {
  const Vec one = c.unit_or_throw();
  if (!c.is_commutative()) throw Error(ErrorCode::NotCommutative, "algebra is not commutative");
  const Field& f = c.field();
  std::vector<Vec> idem{one};
  for (std::size_t b = 0; b < c.dim(); ++b) {
    const Matrix lb = c.left(b);
    const Polynomial m = min_poly(lb);
    const auto roots = rational_roots(m);
    Polynomial rest = m;
    for (const auto& r : roots) {
      const Polynomial lin = Polynomial::linear_root(r);
      while ((rest % lin).is_zero()) rest = rest / lin;
    }
    if (rest.degree() > 0)
      throw Error(ErrorCode::NotSplit, "minimal polynomial " + m.to_string() +
                                           " of " + c.labels()[b] + " has non-rational roots");
    if (static_cast<long>(roots.size()) != m.degree())
      throw Error(ErrorCode::NotSemisimple, "repeated eigenvalue in " + m.to_string());
    if (roots.size() == 1) continue;
    // Lagrange idempotents prod_{s != r} (b - s) / (r - s).
    std::vector<Vec> lagrange;
    for (const auto& r : roots) {
      Polynomial q = Polynomial::constant(f.one());
      for (const auto& s : roots)
        if (s != r) q = q * ((r - s).inverse() * Polynomial::linear_root(s));
      lagrange.push_back(q.eval(lb).apply(one));
    }
    std::vector<Vec> refined;
    for (const auto& e : idem)
      for (const auto& l : lagrange) {
        Vec x = c.multiply(e, l);
        if (!is_zero_vec(x)) refined.push_back(std::move(x));
      }
    idem = std::move(refined);
  }
  std::sort(idem.begin(), idem.end(), canonical_vec_less);
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j) {
      const Vec prod = c.multiply(idem[i], idem[j]);
      ensure(i == j ? prod == idem[i] : is_zero_vec(prod), "idempotents not orthogonal");
    }
  return idem;
}

// ---------------------------------------------------------------- Wedderburn

bool WedderburnForm::all_split() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const WedderburnBlock& b) { return b.status == BlockStatus::Split; });
}

WedderburnForm wedderburn(const StructureAlgebra& d, const Options& opts) {
  d.unit_or_throw();
  if (!is_semisimple(d)) throw Error(ErrorCode::NotSemisimple, "algebra has a nonzero radical");
  const Field& f = d.field();
  const Subspace z = center(d);
  const StructureAlgebra zalg = subalgebra(d, z);
  std::vector<Vec> central;
  try {
    for (const auto& e : primitive_idempotents_split_commutative(zalg))
      central.push_back(z.from_coordinates(e));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSplit)
      throw Error(ErrorCode::NotSplitCenter, std::string("center does not split: ") + e.what());
    throw;
  }
  std::sort(central.begin(), central.end(), canonical_vec_less);

  WedderburnForm form;
  const AlgModule reg = regular_module(d);
  for (const auto& zi : central) {
    WedderburnBlock blk;
    blk.central_idempotent = zi;
    const Subspace block = Subspace::column_space(d.left_mult(zi));
    blk.dim = block.dim();
    const AlgModule bm = submodule(reg, block);
    try {
      const auto summands = meataxe_decompose(bm, opts);
      const AlgModule& s = summands.front().module;
      const std::size_t k = s.dim;
      const std::size_t end_dim = endomorphism_algebra(s).basis.size();
      if (end_dim > 1) {
        blk.status = BlockStatus::NotSplit;
      } else {
        ensure(k * k == blk.dim, "block dimension is not a square");
        blk.n = k;
        Matrix to(f, k * k, d.dim());
        for (std::size_t e = 0; e < d.dim(); ++e) {
          const Matrix& rho = s.action[e];
          for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) to(a * k + b, e) = rho(a, b);
        }
        const Matrix emb = block.embedding();
        const Matrix restricted = to * emb;
        const Matrix back = inverse(restricted);  // k² × k², bijective on the block
        blk.to_matrix_units = to;
        blk.from_matrix_units = emb * back;
        // Exact algebra map on block products.
        const auto bb = block.basis_vectors();
        for (const auto& x : bb)
          for (const auto& y : bb) {
            const Vec xy = to.apply(d.multiply(x, y));
            Matrix mx(f, k, k), my(f, k, k);
            const Vec vx = to.apply(x), vy = to.apply(y);
            for (std::size_t a = 0; a < k * k; ++a) {
              mx(a / k, a % k) = vx[a];
              my(a / k, a % k) = vy[a];
            }
            const Matrix prod = mx * my;
            for (std::size_t a = 0; a < k * k; ++a)
              ensure(prod(a / k, a % k) == xy[a], "block isomorphism is not multiplicative");
          }
        blk.status = BlockStatus::Split;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Undetermined) throw;
      blk.status = BlockStatus::Undetermined;
    }
    form.blocks.push_back(std::move(blk));
  }
  return form;
}

Verdict is_absolutely_semisimple(const StructureAlgebra& d, const Options& opts) {
  d.unit_or_throw();
  if (!is_semisimple(d)) return Verdict::No;
  WedderburnForm w;
  try {
    w = wedderburn(d, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSplitCenter) return Verdict::No;
    throw;
  }
  bool undetermined = false;
  for (const auto& b : w.blocks) {
    if (b.status == BlockStatus::NotSplit) return Verdict::No;
    if (b.status == BlockStatus::Undetermined) undetermined = true;
  }
  return undetermined ? Verdict::Undetermined : Verdict::Yes;
}

// ---------------------------------------------------------------- Morita contexts

Vec MoritaContextData::multiply(int i, int j, int k, const Vec& x, const Vec& y) const {
  return products[i][j][k].apply(tensor(x, y));
}

StructureAlgebra MoritaContextData::a() const {
  return StructureAlgebra(field, dims[0][0], products[0][0][0]);
}

StructureAlgebra MoritaContextData::b() const {
  return StructureAlgebra(field, dims[1][1], products[1][1][1]);
}

MoritaContextData context_from_subspaces(const StructureAlgebra& ambient,
                                         const std::array<std::array<Subspace, 2>, 2>& parts) {
  MoritaContextData ctx;
  ctx.field = ambient.field();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ctx.dims[i][j] = parts[i][j].dim();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Subspace& x = parts[i][j];
        const Subspace& y = parts[j][k];
        const Subspace& z = parts[i][k];
        Matrix m(ctx.field, z.dim(), x.dim() * y.dim());
        const auto xb = x.basis_vectors(), yb = y.basis_vectors();
        for (std::size_t a = 0; a < xb.size(); ++a) {
          const Matrix lx = ambient.left_mult(xb[a]);
          for (std::size_t b = 0; b < yb.size(); ++b) {
            auto c = z.coordinates(lx.apply(yb[b]));
            if (!c) throw Error(ErrorCode::AxiomViolation, "context product leaves its target space");
            m.set_col(a * yb.size() + b, *c);
          }
        }
        ctx.products[i][j][k] = std::move(m);
      }
  return ctx;
}

MoritaVerdict verify_morita(const MoritaContextData& ctx, std::stop_token stop) {
  const Field& f = ctx.field;
  // Associativity on basis triples for all index quadruples.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "verify_morita");
          for (std::size_t x = 0; x < ctx.dims[i][j]; ++x)
            for (std::size_t y = 0; y < ctx.dims[j][k]; ++y) {
              const Vec xv = unit_vec(f, ctx.dims[i][j], x);
              const Vec yv = unit_vec(f, ctx.dims[j][k], y);
              const Vec xy = ctx.multiply(i, j, k, xv, yv);
              for (std::size_t z = 0; z < ctx.dims[k][l]; ++z) {
                const Vec zv = unit_vec(f, ctx.dims[k][l], z);
                const Vec lhs = ctx.multiply(i, k, l, xy, zv);
                const Vec rhs = ctx.multiply(i, j, l, xv, ctx.multiply(j, k, l, yv, zv));
                if (lhs != rhs)
                  throw Error(ErrorCode::AxiomViolation,
                              "Morita context is not associative at indices " +
                                  std::to_string(i) + std::to_string(j) + std::to_string(k) +
                                  std::to_string(l));
              }
            }
        }
  if (ctx.dims[0][0] == 0 || ctx.dims[1][1] == 0)
    throw Error(ErrorCode::NonUnital, "Morita context over a zero algebra");
  ctx.a().unit_or_throw();
  ctx.b().unit_or_throw();
  bool surjective = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        if (rank(ctx.products[i][j][k]) != ctx.dims[i][k]) surjective = false;
  // Surjective contexts between unital algebras are strict, so the middle
  // verdict cannot occur here.
  return surjective ? MoritaVerdict::Strict : MoritaVerdict::NotSurjective;
}

CornerResult corner(const StructureAlgebra& d, const Vec& p) {
  if (d.multiply(p, p) != p) throw Error(ErrorCode::NotIdempotent, "p is not idempotent");
  const Matrix lp = d.left_mult(p), rp = d.right_mult(p);
  const Subspace whole = Subspace::full(d.field(), d.dim());
  const Subspace dp = Subspace::column_space(rp);
  const Subspace pd = Subspace::column_space(lp);
  const Subspace pdp = Subspace::column_space(lp * rp);
  CornerResult out;
  out.corner_space = pdp;
  out.corner = subalgebra(d, pdp);
  out.context = context_from_subspaces(d, {{{whole, dp}, {pd, pdp}}});
  out.full = product_space(d, dp, pd) == whole;
  return out;
}

}  // namespace hopfkit
