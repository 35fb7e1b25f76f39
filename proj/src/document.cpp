#include "hopfkit/document.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace hopfkit {

const DocumentObject* Document::find(const std::string& name) const {
  for (const auto& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

namespace {

bool same_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  return a == b && a.labels() == b.labels();
}

bool same_value(const DocumentValue& x, const DocumentValue& y) {
  if (x.index() != y.index()) return false;
  if (auto a = std::get_if<StructureAlgebra>(&x)) return same_algebra(*a, std::get<StructureAlgebra>(y));
  if (auto h = std::get_if<HopfData>(&x)) {
    const HopfData& g = std::get<HopfData>(y);
    return *h == g && same_algebra(h->algebra, g.algebra);
  }
  if (auto c = std::get_if<ComoduleAlgebra>(&x)) {
    const ComoduleAlgebra& d = std::get<ComoduleAlgebra>(y);
    return *c == d && same_algebra(c->algebra, d.algebra) && same_algebra(c->hopf.algebra, d.hopf.algebra);
  }
  const AlgModule& m = std::get<AlgModule>(x);
  const AlgModule& n = std::get<AlgModule>(y);
  return m.dim == n.dim && same_algebra(m.algebra, n.algebra) && m.action == n.action;
}

// ---------------------------------------------------------------- parsing

struct Token {
  std::string text;
  std::size_t line = 0, column = 0;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}
[[noreturn]] void fail(const Token& t, const std::string& what) { fail(t.line, t.column, what); }

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      toks.push_back({raw.substr(i, j - i), lineno, i + 1});
      i = j;
    }
    if (toks.empty() || toks[0].text[0] == '#') continue;
    lines.push_back(std::move(toks));
  }
  return lines;
}

std::size_t parse_index(const Token& t, std::size_t bound) {
  static const std::regex re("0|[1-9][0-9]{0,8}");
  if (!std::regex_match(t.text, re)) fail(t, "expected a non-negative integer, got '" + t.text + "'");
  const std::size_t v = std::stoul(t.text);
  if (v >= bound) fail(t, "index " + t.text + " out of range (< " + std::to_string(bound) + ")");
  return v;
}

Scalar parse_value(const Token& t, const Field& f) {
  static const std::regex re("-?(0|[1-9][0-9]*)(/[1-9][0-9]*|/0+)?");
  if (!std::regex_match(t.text, re)) fail(t, "malformed value '" + t.text + "'");
  const auto slash = t.text.find('/');
  mpz_class num(t.text.substr(0, slash)), den(1);
  if (slash != std::string::npos) den = mpz_class(t.text.substr(slash + 1));
  if (den == 0) fail(t, "zero denominator in '" + t.text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  try {
    return f.from_rational(q);
  } catch (const Error&) {
    fail(t, "denominator of '" + t.text + "' vanishes in " + f.to_string());
  }
}

struct Block {
  std::string kind, name, reference;
  Token head;
  std::size_t dim = 0;
  bool has_dim = false;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::pair<std::vector<std::size_t>, Scalar>>> entries;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  Document run() {
    Document doc;
    std::size_t pos = 0;
    if (lines_.empty()) fail(1, 1, "empty document");
    expect_header(lines_[pos++]);
    if (pos >= lines_.size()) fail(lines_.back()[0], "missing field line");
    {
      const auto& l = lines_[pos++];
      if (l[0].text != "field") fail(l[0], "expected 'field'");
      arity(l, 2);
      try {
        doc.field = Field::parse(l[1].text);
      } catch (const Error&) {
        fail(l[1], "bad field descriptor '" + l[1].text + "'");
      }
    }
    field_ = doc.field;
    while (pos < lines_.size()) {
      Block b = read_block(pos);
      if (doc.find(b.name)) fail(b.head, "duplicate object name '" + b.name + "'");
      doc.objects.push_back(build(b, doc));
    }
    return doc;
  }

 private:
  static void arity(const std::vector<Token>& l, std::size_t n) {
    if (l.size() != n)
      fail(l.size() > n ? l[n] : l.back(),
           "'" + l[0].text + "' takes " + std::to_string(n - 1) + " argument(s)");
  }

  static void expect_header(const std::vector<Token>& l) {
    if (l[0].text != "hopfkit-document") fail(l[0], "expected 'hopfkit-document <version>'");
    arity(l, 2);
    if (l[1].text != std::to_string(kDocumentVersion)) fail(l[1], "unsupported version '" + l[1].text + "'");
  }

  static std::size_t entry_arity(const std::string& kind, const std::string& key) {
    static const std::map<std::string, std::map<std::string, std::size_t>> table = {
        {"algebra", {{"mult", 3}}},
        {"hopf", {{"mult", 3}, {"coproduct", 3}, {"counit", 1}, {"antipode", 2}}},
        {"comodule-algebra", {{"mult", 3}, {"coaction", 3}}},
        {"module", {{"action", 3}}},
    };
    const auto& m = table.at(kind);
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  }

  Block read_block(std::size_t& pos) {
    const auto& h = lines_[pos++];
    static const std::set<std::string> kinds = {"algebra", "hopf", "comodule-algebra", "module"};
    if (!kinds.count(h[0].text)) fail(h[0], "unknown block kind '" + h[0].text + "'");
    arity(h, 2);
    Block b;
    b.kind = h[0].text;
    b.name = h[1].text;
    b.head = h[0];
    const bool needs_ref = b.kind == "comodule-algebra" || b.kind == "module";
    const std::string ref_key = b.kind == "module" ? "algebra" : "hopf";
    std::map<std::string, std::set<std::vector<std::size_t>>> seen;
    while (true) {
      if (pos >= lines_.size()) fail(h[0], "block '" + b.name + "' has no 'end'");
      const auto& l = lines_[pos++];
      const std::string& key = l[0].text;
      if (key == "end") {
        arity(l, 1);
        if (!b.has_dim) fail(l[0], "block '" + b.name + "' has no 'dim'");
        return b;
      }
      if (needs_ref && b.reference.empty()) {
        if (key != ref_key) fail(l[0], "expected '" + ref_key + "' first in " + b.kind + " block");
        arity(l, 2);
        b.reference = l[1].text;
        continue;
      }
      if (!b.has_dim) {
        if (key != "dim") fail(l[0], "expected 'dim'");
        arity(l, 2);
        b.dim = parse_index(l[1], 1u << 20);
        b.has_dim = true;
        continue;
      }
      if (key == "labels") {
        if (!b.labels.empty()) fail(l[0], "duplicate 'labels'");
        if (b.kind == "module") fail(l[0], "modules carry no labels");
        if (l.size() != b.dim + 1) fail(l[0], "expected " + std::to_string(b.dim) + " labels");
        for (std::size_t i = 1; i < l.size(); ++i) b.labels.push_back(l[i].text);
        if (b.dim == 0) fail(l[0], "labels on a zero-dimensional object");
        continue;
      }
      const std::size_t n = entry_arity(b.kind, key);
      if (n == 0) fail(l[0], "unknown field '" + key + "' in " + b.kind + " block");
      arity(l, n + 2);
      std::vector<std::size_t> idx;
      for (std::size_t i = 1; i <= n; ++i) idx.push_back(parse_index(l[i], bound(b, key, i - 1)));
      if (!seen[key].insert(idx).second) fail(l[0], "duplicate '" + key + "' entry");
      b.entries[key].push_back({idx, parse_value(l[n + 1], field_)});
    }
  }

  // Indices into the referenced object are range-checked in build().
  static std::size_t bound(const Block& b, const std::string& key, std::size_t slot) {
    if ((key == "coaction" && slot == 2) || (key == "action" && slot == 0)) return std::size_t(1) << 30;
    return b.dim;
  }

  const DocumentObject& lookup(const Block& b, const Document& doc) {
    const DocumentObject* o = doc.find(b.reference);
    if (!o) fail(b.head, "unknown reference '" + b.reference + "'");
    return *o;
  }

  DocumentObject build(const Block& b, const Document& doc) {
    const Field f = field_;
    auto entries = [&](const std::string& key) {
      auto it = b.entries.find(key);
      return it == b.entries.end() ? std::vector<std::pair<std::vector<std::size_t>, Scalar>>{} : it->second;
    };
    auto algebra = [&]() {
      Matrix mult(f, b.dim, b.dim * b.dim);
      for (const auto& [i, v] : entries("mult")) mult(i[2], i[0] * b.dim + i[1]) = v;
      return StructureAlgebra(f, b.dim, std::move(mult), b.labels);
    };
    DocumentObject out{b.name, StructureAlgebra{}, b.reference};
    if (b.kind == "algebra") {
      out.value = algebra();
    } else if (b.kind == "hopf") {
      HopfData h;
      h.algebra = algebra();
      const std::size_t n = b.dim;
      h.coproduct = Matrix(f, n * n, n);
      for (const auto& [i, v] : entries("coproduct")) h.coproduct(i[1] * n + i[2], i[0]) = v;
      h.counit = zero_vec(f, n);
      for (const auto& [i, v] : entries("counit")) h.counit[i[0]] = v;
      h.antipode = Matrix(f, n, n);
      for (const auto& [i, v] : entries("antipode")) h.antipode(i[1], i[0]) = v;
      out.value = std::move(h);
    } else if (b.kind == "comodule-algebra") {
      const DocumentObject& r = lookup(b, doc);
      const HopfData* h = std::get_if<HopfData>(&r.value);
      if (!h) fail(b.head, "'" + b.reference + "' is not a hopf block");
      ComoduleAlgebra c;
      c.hopf = *h;
      c.algebra = algebra();
      const std::size_t n = h->dim();
      c.coaction = Matrix(f, b.dim * n, b.dim);
      for (const auto& [i, v] : entries("coaction")) {
        if (i[2] >= n) fail(b.head, "coaction index exceeds dim of '" + b.reference + "'");
        c.coaction(i[1] * n + i[2], i[0]) = v;
      }
      out.value = std::move(c);
    } else {
      const DocumentObject& r = lookup(b, doc);
      AlgModule m;
      if (auto a = std::get_if<StructureAlgebra>(&r.value)) m.algebra = *a;
      else if (auto h = std::get_if<HopfData>(&r.value)) m.algebra = h->algebra;
      else if (auto c = std::get_if<ComoduleAlgebra>(&r.value)) m.algebra = c->algebra;
      else fail(b.head, "'" + b.reference + "' has no algebra");
      m.dim = b.dim;
      m.action.assign(m.algebra.dim(), Matrix(f, b.dim, b.dim));
      for (const auto& [i, v] : entries("action")) {
        if (i[0] >= m.algebra.dim()) fail(b.head, "action index exceeds dim of '" + b.reference + "'");
        m.action[i[0]](i[1], i[2]) = v;
      }
      out.value = std::move(m);
    }
    return out;
  }

  std::vector<std::vector<Token>> lines_;
  Field field_;
};

// ---------------------------------------------------------------- writing

void check_label(const std::string& s) {
  if (s.empty() || s[0] == '#' || s.find_first_of(" \t\r\n") != std::string::npos)
    throw Error(ErrorCode::InvalidInput, "label '" + s + "' cannot be written");
}

void write_algebra_body(std::ostream& out, const StructureAlgebra& a) {
  out << "  dim " << a.dim() << "\n";
  if (a.dim() > 0) {
    out << "  labels";
    for (const auto& l : a.labels()) {
      check_label(l);
      out << ' ' << l;
    }
    out << "\n";
  }
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = a.mult()(k, i * n + j);
        if (!v.is_zero()) out << "  mult " << i << ' ' << j << ' ' << k << ' ' << v.to_string() << "\n";
      }
}

void check_name(const std::string& s) {
  check_label(s);
}

}  // namespace

bool same_document(const Document& a, const Document& b) {
  if (a.field != b.field || a.objects.size() != b.objects.size()) return false;
  for (std::size_t i = 0; i < a.objects.size(); ++i) {
    const auto& x = a.objects[i];
    const auto& y = b.objects[i];
    if (x.name != y.name || x.reference != y.reference || !same_value(x.value, y.value)) return false;
  }
  return true;
}

Document parse_document(const std::string& text) { return Parser(text).run(); }

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  out << "hopfkit-document " << kDocumentVersion << "\n";
  out << "field " << doc.field.to_string() << "\n";
  std::set<std::string> names;
  for (const auto& o : doc.objects) {
    check_name(o.name);
    if (!names.insert(o.name).second) throw Error(ErrorCode::InvalidInput, "duplicate object name '" + o.name + "'");
    out << "\n";
    if (auto a = std::get_if<StructureAlgebra>(&o.value)) {
      out << "algebra " << o.name << "\n";
      write_algebra_body(out, *a);
    } else if (auto h = std::get_if<HopfData>(&o.value)) {
      out << "hopf " << o.name << "\n";
      write_algebra_body(out, h->algebra);
      const std::size_t n = h->dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n * n; ++j) {
          const Scalar& v = h->coproduct(j, i);
          if (!v.is_zero()) out << "  coproduct " << i << ' ' << j / n << ' ' << j % n << ' ' << v.to_string() << "\n";
        }
      for (std::size_t i = 0; i < n; ++i)
        if (!h->counit[i].is_zero()) out << "  counit " << i << ' ' << h->counit[i].to_string() << "\n";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!h->antipode(j, i).is_zero())
            out << "  antipode " << i << ' ' << j << ' ' << h->antipode(j, i).to_string() << "\n";
    } else if (auto c = std::get_if<ComoduleAlgebra>(&o.value)) {
      const DocumentObject* r = doc.find(o.reference);
      if (!r || !std::holds_alternative<HopfData>(r->value) || !(std::get<HopfData>(r->value) == c->hopf))
        throw Error(ErrorCode::InvalidInput, "comodule algebra '" + o.name + "' needs its hopf block before it");
      out << "comodule-algebra " << o.name << "\n";
      out << "  hopf " << o.reference << "\n";
      write_algebra_body(out, c->algebra);
      const std::size_t n = c->hopf.dim(), d = c->dim();
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t r2 = 0; r2 < d * n; ++r2) {
          const Scalar& v = c->coaction(r2, b);
          if (!v.is_zero()) out << "  coaction " << b << ' ' << r2 / n << ' ' << r2 % n << ' ' << v.to_string() << "\n";
        }
    } else {
      const AlgModule& m = std::get<AlgModule>(o.value);
      if (!doc.find(o.reference)) throw Error(ErrorCode::InvalidInput, "module '" + o.name + "' needs its algebra block");
      out << "module " << o.name << "\n";
      out << "  algebra " << o.reference << "\n";
      out << "  dim " << m.dim << "\n";
      for (std::size_t i = 0; i < m.action.size(); ++i)
        for (std::size_t r2 = 0; r2 < m.dim; ++r2)
          for (std::size_t c2 = 0; c2 < m.dim; ++c2)
            if (!m.action[i](r2, c2).is_zero())
              out << "  action " << i << ' ' << r2 << ' ' << c2 << ' ' << m.action[i](r2, c2).to_string() << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

void write_document(const Document& doc, const std::string& path) {
  const std::string text = serialize_document(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

Document document_of(const HopfData& h, const std::string& name) {
  return Document{h.field(), {{name, h, ""}}};
}

Document document_of(const ComoduleAlgebra& a, const std::string& name) {
  return Document{a.field(), {{"H", a.hopf, ""}, {name, a, "H"}}};
}

Document document_of(const StructureAlgebra& a, const std::string& name) {
  return Document{a.field(), {{name, a, ""}}};
}

}  // namespace hopfkit
