#include "hopfkit/cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "hopfkit/document.hpp"
#include "hopfkit/examples.hpp"
#include "hopfkit/igalois.hpp"

namespace hopfkit {

namespace {

struct Settings {
  Options opts;
  std::string output, object, direction = "to-galois", field = "Q";
  std::size_t index = 0;
  std::string path;
  std::vector<std::string> params;
};

// Outcome of a command that ran to completion.
enum class Outcome { Pass = 0, Negative = 1 };

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string scalars(const std::vector<Scalar>& v) { return vec_to_string(v); }

// Cycle notation on 0-based indices, fixed points omitted.
std::string permutation_word(const std::vector<std::size_t>& p) {
  std::string s;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = true;
      cyc.push_back(j);
    }
    s += "(" + join(cyc) + ")";
  }
  return s.empty() ? "id" : s;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).to_string();
    out << "\n";
  }
}

void emit(const Document& doc, const Settings& s, std::ostream& out) {
  if (s.output.empty()) {
    out << serialize_document(doc);
  } else {
    write_document(doc, s.output);
    out << "wrote " << s.output << "\n";
  }
}

const DocumentObject& pick(const Document& doc, const std::string& name, std::size_t kind, const char* what) {
  for (const auto& o : doc.objects)
    if ((name.empty() || o.name == name) && (kind == std::size_t(-1) || o.value.index() == kind)) return o;
  throw Error(ErrorCode::InvalidInput,
              name.empty() ? std::string("document has no ") + what : "no " + std::string(what) + " named '" + name + "'");
}

const ComoduleAlgebra& pick_comodule(const Document& doc, const std::string& name) {
  return std::get<ComoduleAlgebra>(pick(doc, name, 2, "comodule-algebra block").value);
}

// ---------------------------------------------------------------- check

Outcome cmd_check(const Settings& s, std::ostream& out) {
  const Document doc = read_document(s.path);
  bool ok = true;
  for (const auto& o : doc.objects) {
    AxiomReport rep;
    if (auto a = std::get_if<StructureAlgebra>(&o.value)) {
      const auto v = a->associativity_violation();
      std::string detail;
      if (v) detail = "(" + join({(*v)[0], (*v)[1], (*v)[2]}, ",") + ")";
      rep.checks.push_back({"associativity", !v, detail});
      rep.checks.push_back({"unit", a->unit().has_value(), ""});
    } else if (auto h = std::get_if<HopfData>(&o.value)) {
      rep = check_hopf(*h);
    } else if (auto c = std::get_if<ComoduleAlgebra>(&o.value)) {
      rep = check_comodule_algebra(*c);
    } else {
      rep.checks.push_back({"module action", std::get<AlgModule>(o.value).is_valid(), ""});
    }
    out << "object " << o.name << ": " << (rep.all_passed() ? "pass" : "FAIL") << "\n";
    std::istringstream lines(rep.to_string());
    for (std::string l; std::getline(lines, l);) out << "  " << l << "\n";
    ok = ok && rep.all_passed();
  }
  return ok ? Outcome::Pass : Outcome::Negative;
}

// ---------------------------------------------------------------- analyze

Outcome cmd_analyze(const Settings& s, std::ostream& out) {
  const Document doc = read_document(s.path);
  const ComoduleAlgebra& a = pick_comodule(doc, s.object);
  const AxiomReport rep = check_comodule_algebra(a);
  if (!rep.all_passed()) {
    out << "diagnostic AxiomViolation: " << rep.first_failure()->name << "\n";
    return Outcome::Negative;
  }
  IGaloisObject g;
  try {
    g = analyze(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGalois && e.code() != ErrorCode::CoinvariantsNotSplit) throw;
    out << "galois: " << (e.code() == ErrorCode::NotGalois ? "no" : "yes") << "\n";
    out << "diagnostic " << e.what() << "\n";
    return Outcome::Negative;
  }
  const std::size_t ni = g.size();
  out << "galois: yes\n";
  out << "index set size: " << ni << "\n";
  out << "component dimensions:\n";
  for (std::size_t i = 0; i < ni; ++i) {
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < ni; ++j) row.push_back(g.component(i, j).dim());
    out << "  " << join(row) << "\n";
  }
  out << "connectivity classes:";
  for (const auto& cls : connectivity(g)) out << " {" << join(cls, ",") << "}";
  out << "\n";
  out << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";

  const InvariantFunctionalData f = invariant_functional_data(g);
  const ModularData m = modular_data(g, f);
  out << "phi_A: " << scalars(f.phi_a) << "\n";
  out << "psi_A: " << scalars(f.psi_a) << "\n";
  out << "mu: " << permutation_word(f.mu) << "\n";
  out << "delta_A: " << scalars(m.delta_a) << "\n";
  out << "delta'_A: " << scalars(m.delta_a_prime) << "\n";
  out << "nu: " << scalars(m.nu) << "\n";
  bool mu_id = true, nu_one = true;
  for (std::size_t i = 0; i < ni; ++i) {
    mu_id = mu_id && f.mu[i] == i;
    nu_one = nu_one && m.nu[i].is_one();
  }
  if (!mu_id) out << "NOTE: mu is not the identity permutation\n";
  if (!nu_one) out << "NOTE: some nu_i differs from 1\n";
  out << "sigma_A" << (m.sigma_a.is_identity() ? " (identity)" : "") << ":\n";
  write_matrix(out, m.sigma_a);

  const auto beta = beta_maps(g);
  const auto e1 = check_eig1(g, f, beta);
  const auto e2 = check_eig2(g, f, beta);
  out << "eig1: " << (e1 ? "fails at " + *e1 : std::string("holds")) << "\n";
  out << "eig2: " << (e2 ? "fails at " + *e2 : std::string("holds")) << "\n";
  const bool routes = nakayama(g, f) == m.sigma_a && nakayama_explicit(g, f) == m.sigma_a;
  out << "nakayama routes: " << (routes ? "equal" : "differ") << "\n";
  return routes && !e1 && !e2 ? Outcome::Pass : Outcome::Negative;
}

// ---------------------------------------------------------------- correspond

Outcome cmd_correspond(const Settings& s, std::ostream& out) {
  const Document doc = read_document(s.path);
  const ComoduleAlgebra& a = pick_comodule(doc, s.object);
  try {
    if (s.direction == "to-galois") {
      const RoundTrip rt = round_trip(a, s.index, s.opts);
      const IGaloisObject& g = rt.forward.galois;
      out << "direction: to-galois\n";
      out << "double smash dimension: " << rt.forward.double_smash.outer.dim() << "\n";
      out << "corner dimension: " << g.base.dim() << "\n";
      out << "idempotent full: " << (rt.forward.full ? "yes" : "no") << "\n";
      out << "index set size: " << g.size() << "\n";
      out << "connected: " << (rt.connected ? "yes" : "no") << "\n";
      out << "morita context with corner " << s.index << ": " << morita_verdict_name(rt.verdict) << "\n";
      out << "corner isomorphism: " << (rt.corner_iso ? "yes" : "no") << "\n";
      emit(document_of(g.base), s, out);
      const bool ok = rt.forward.full && rt.connected && rt.verdict == MoritaVerdict::Strict && rt.corner_iso;
      return ok ? Outcome::Pass : Outcome::Negative;
    }
    if (s.direction == "to-homogeneous") {
      const IGaloisObject g = analyze(a);
      if (s.index >= g.size()) throw Error(ErrorCode::InvalidInput, "index out of range");
      const HomogeneousCorner c = homogeneous_from_galois(g, s.index);
      out << "direction: to-homogeneous\n";
      out << "index set size: " << g.size() << "\n";
      out << "corner dimension: " << c.algebra.dim() << "\n";
      out << "homogeneous: " << (is_homogeneous(c.algebra) ? "yes" : "no") << "\n";
      bool ok = is_homogeneous(c.algebra);
      for (std::size_t j = 0; j < c.contexts.size(); ++j) {
        out << "morita context (" << s.index << "," << j << "): " << morita_verdict_name(c.contexts[j]) << "\n";
        ok = ok && c.contexts[j] == MoritaVerdict::Strict;
      }
      emit(document_of(c.algebra), s, out);
      return ok ? Outcome::Pass : Outcome::Negative;
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotHomogeneous:
      case ErrorCode::Disconnected:
      case ErrorCode::CannotCertifySplit:
      case ErrorCode::NotEquivariantlyAbsolutelySemisimple:
      case ErrorCode::NotGalois:
      case ErrorCode::CoinvariantsNotSplit:
        out << "diagnostic " << e.what() << "\n";
        return Outcome::Negative;
      default:
        throw;
    }
  }
  throw Error(ErrorCode::InvalidInput, "direction must be to-galois or to-homogeneous");
}

// ---------------------------------------------------------------- example

GroupTable group_named(const std::string& name) {
  if (name == "V4" || name == "Klein") return klein_four_group();
  if (name == "S3") return symmetric_group_s3();
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == name.size() - 1 && n >= 1 && n <= 16) return cyclic_group(n);
  }
  throw Error(ErrorCode::InvalidInput, "unknown group '" + name + "' (Z<n>, V4, S3)");
}

void need(const std::vector<std::string>& p, std::size_t n, const std::string& usage) {
  if (p.size() != n) throw Error(ErrorCode::InvalidInput, "usage: example " + usage);
}

// Parses a Hopf algebra name starting at p[at]: "sweedler", "group G", "dual-group G".
HopfData hopf_named(const Field& f, const std::vector<std::string>& p, std::size_t at, std::size_t& used) {
  if (at < p.size() && p[at] == "sweedler") {
    used = 1;
    return sweedler_h4(f);
  }
  if (at + 1 < p.size() && p[at] == "group") {
    used = 2;
    return group_algebra(f, group_named(p[at + 1]));
  }
  if (at + 1 < p.size() && p[at] == "dual-group") {
    used = 2;
    return dual_group_algebra(f, group_named(p[at + 1]));
  }
  throw Error(ErrorCode::InvalidInput, "expected a Hopf algebra: sweedler | group G | dual-group G");
}

std::size_t count_param(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw Error(ErrorCode::InvalidInput, "expected a count, got '" + s + "'");
  return v;
}

Document example_document(const Field& f, const std::vector<std::string>& p) {
  if (p.empty()) throw Error(ErrorCode::InvalidInput, "example needs a generator name");
  const std::string& name = p[0];
  std::size_t used = 0;
  if (name == "sweedler") {
    need(p, 1, "sweedler");
    return document_of(sweedler_h4(f));
  }
  if (name == "group" || name == "dual-group") {
    need(p, 2, name + " G");
    return document_of(hopf_named(f, p, 0, used));
  }
  if (name == "self" || name == "trivial") {
    const HopfData h = hopf_named(f, p, 1, used);
    need(p, 1 + used, name + " HOPF");
    if (name == "self") return document_of(self_coaction(h));
    return document_of(trivial_coaction(h, diagonal_algebra(f, 1)));
  }
  if (name == "regular-module") {
    const HopfData h = hopf_named(f, p, 1, used);
    need(p, 1 + used, "regular-module HOPF");
    Document d = document_of(h);
    d.objects.push_back({"M", regular_module(h.algebra), "H"});
    return d;
  }
  if (name == "free-gset") {
    need(p, 3, "free-gset G SIZE");
    const GroupTable g = group_named(p[1]);
    const std::size_t size = count_param(p[2]);
    if (size == 0 || size % g.order() != 0)
      throw Error(ErrorCode::InvalidInput, "a free action needs |X| to be a positive multiple of |G|");
    return document_of(regular_gset_function_algebra(f, g, size / g.order()));
  }
  if (name == "twisted") {
    need(p, 3, "twisted G COCYCLE");
    const GroupTable g = group_named(p[1]);
    const std::size_t n = g.order();
    std::vector<std::vector<Scalar>> sigma(n, std::vector<Scalar>(n, f.one()));
    if (p[2] == "sign") {
      if (n != 2) throw Error(ErrorCode::InvalidInput, "the sign cocycle lives on Z2");
      sigma[1][1] = -f.one();
    } else if (p[2] == "quaternion") {
      if (n != 4 || p[1] == "Z4") throw Error(ErrorCode::InvalidInput, "the quaternion cocycle lives on V4");
      // elements e, a, b, ab as bit pairs
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
          const std::size_t x1 = x & 1, x2 = x >> 1, y1 = y & 1, y2 = y >> 1;
          if ((x1 * y1 + x2 * y2 + x1 * y2) % 2) sigma[x][y] = -f.one();
        }
    } else if (p[2] != "trivial") {
      throw Error(ErrorCode::InvalidInput, "unknown cocycle '" + p[2] + "' (trivial, sign, quaternion)");
    }
    return document_of(cocycle_twisted_group_algebra(f, g, sigma));
  }
  if (name == "graded-matrix") {
    need(p, 2, "graded-matrix G");
    const GroupTable g = group_named(p[1]);
    std::vector<std::size_t> degrees(g.order());
    for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] = i;
    return document_of(graded_matrix_algebra(f, g, degrees));
  }
  throw Error(ErrorCode::InvalidInput, "unknown generator '" + name +
                                           "' (sweedler, group, dual-group, self, trivial, regular-module, free-gset, twisted, graded-matrix)");
}

Outcome cmd_example(const Settings& s, std::ostream& out) {
  emit(example_document(Field::parse(s.field), s.params), s, out);
  return Outcome::Pass;
}

// ---------------------------------------------------------------- decompose

Outcome cmd_decompose(const Settings& s, std::ostream& out) {
  const Document doc = read_document(s.path);
  // default: the last block, which generators use for the main object
  if (s.object.empty() && doc.objects.empty()) throw Error(ErrorCode::InvalidInput, "empty document");
  const DocumentObject& o = s.object.empty() ? doc.objects.back() : pick(doc, s.object, std::size_t(-1), "object");
  if (auto m = std::get_if<AlgModule>(&o.value)) {
    if (!m->is_valid()) throw Error(ErrorCode::AxiomViolation, "module '" + o.name + "' is not a module");
    const auto parts = meataxe_decompose(*m, s.opts);
    out << "module " << o.name << " of dimension " << m->dim << ": " << parts.size() << " simple summand(s)\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << "  summand " << i << ": dim " << parts[i].module.dim
          << ", absolutely simple: " << (is_absolutely_simple(parts[i].module, s.opts) ? "yes" : "no") << "\n";
      write_matrix(out, parts[i].embedding.transpose());
    }
    return Outcome::Pass;
  }
  StructureAlgebra a;
  if (auto x = std::get_if<StructureAlgebra>(&o.value)) a = *x;
  else if (auto h = std::get_if<HopfData>(&o.value)) a = h->algebra;
  else a = std::get<ComoduleAlgebra>(o.value).algebra;
  out << "algebra " << o.name << " of dimension " << a.dim() << "\n";
  out << "radical dimension: " << radical(a).dim() << "\n";
  WedderburnForm w;
  try {
    w = wedderburn(a, s.opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSemisimple && e.code() != ErrorCode::NotSplitCenter) throw;
    out << "diagnostic " << e.what() << "\n";
    return Outcome::Negative;
  }
  out << "blocks: " << w.blocks.size() << "\n";
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    const auto& b = w.blocks[i];
    out << "  block " << i << ": dim " << b.dim << ", " << block_status_name(b.status);
    if (b.status == BlockStatus::Split) out << ", n = " << b.n;
    out << ", central idempotent " << scalars(b.central_idempotent) << "\n";
  }
  return w.all_split() ? Outcome::Pass : Outcome::Negative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"hopfkit: Hopf algebras, comodule algebras and Galois objects"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--seed", s.opts.seed, "seed for randomized splitting");
  app.add_option("--split-search-budget", s.opts.split_search_budget, "random elements tried per split")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", s.output, "write the produced document here");

  auto* check = app.add_subcommand("check", "run the axiom checkers on every object");
  check->add_option("path", s.path)->required();
  auto* an = app.add_subcommand("analyze", "I-Galois analysis of a comodule algebra");
  an->add_option("path", s.path)->required();
  an->add_option("--object", s.object);
  auto* co = app.add_subcommand("correspond", "homogeneous <-> I-Galois correspondence");
  co->add_option("path", s.path)->required();
  co->add_option("--direction", s.direction)->check(CLI::IsMember({"to-galois", "to-homogeneous"}));
  co->add_option("--index", s.index);
  co->add_option("--object", s.object);
  auto* ex = app.add_subcommand("example", "write a bundled fixture");
  ex->add_option("params", s.params)->required();
  ex->add_option("--field", s.field, "Q or Fp:<p>");
  auto* de = app.add_subcommand("decompose", "meataxe on a module, Wedderburn form of an algebra");
  de->add_option("path", s.path)->required();
  de->add_option("--object", s.object);
  for (auto* sub : {check, an, co, ex, de}) {
    sub->add_option("--output", s.output);
    sub->add_option("--seed", s.opts.seed);
    sub->add_option("--split-search-budget", s.opts.split_search_budget)->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Outcome r = Outcome::Pass;
    if (*check) r = cmd_check(s, out);
    else if (*an) r = cmd_analyze(s, out);
    else if (*co) r = cmd_correspond(s, out);
    else if (*ex) r = cmd_example(s, out);
    else r = cmd_decompose(s, out);
    return static_cast<int>(r);
  } catch (const Error& e) {
    out << "error " << e.what() << "\n";
    const bool usage = *ex && e.code() == ErrorCode::InvalidInput;
    return usage || e.code() == ErrorCode::ParseError || e.code() == ErrorCode::Io ? 2 : 1;
  }
}

}  // namespace hopfkit
