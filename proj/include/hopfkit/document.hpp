#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hopfkit/coact.hpp"

namespace hopfkit {

/// Text format, one statement per line, '#' starts a comment line:
///
///   hopfkit-document 1
///   field Q                      (or Fp:<p>)
///   hopf H                       (block kinds: algebra, hopf, comodule-algebra, module)
///     dim 2
///     labels e a
///     mult 1 1 0 1               e_1 e_1 has coefficient 1 on e_0
///     coproduct 1 1 1 1          Δ(e_1) has coefficient 1 on e_1⊗e_1
///     counit 0 1
///     antipode 1 1 1             S(e_1) has coefficient 1 on e_1
///   end
///   comodule-algebra A
///     hopf H                     earlier hopf block
///     dim ... labels ... mult ...
///     coaction b a t v           α(e_b) has coefficient v on e_a⊗e_t
///   end
///   module M
///     algebra NAME               any earlier block; its algebra acts
///     dim ...
///     action i r c v             ρ(e_i) has entry v at (r, c)
///   end
///
/// Values are integers or "num/den". Entries not listed are zero.
const int kDocumentVersion = 1;

using DocumentValue = std::variant<StructureAlgebra, HopfData, ComoduleAlgebra, AlgModule>;

struct DocumentObject {
  std::string name;
  DocumentValue value;
  /// Block name a module or comodule algebra refers to.
  std::string reference;
};

struct Document {
  Field field;
  std::vector<DocumentObject> objects;

  const DocumentObject* find(const std::string& name) const;
};

/// Exact structural equality, labels included.
bool same_document(const Document& a, const Document& b);

/// Throws ParseError with "line L, column C" in the message.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);
std::string serialize_document(const Document& doc);
void write_document(const Document& doc, const std::string& path);

/// Single-object documents; comodule algebras carry their Hopf algebra as "H".
Document document_of(const HopfData& h, const std::string& name = "H");
Document document_of(const ComoduleAlgebra& a, const std::string& name = "A");
Document document_of(const StructureAlgebra& a, const std::string& name = "D");

}  // namespace hopfkit
