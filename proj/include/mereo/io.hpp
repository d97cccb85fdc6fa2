#ifndef MEREO_IO_HPP
#define MEREO_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "mereo/equivalence.hpp"
#include "mereo/morphisms.hpp"
#include "mereo/structures.hpp"
#include "mereo/topology.hpp"

namespace mereo {

/// One parsed structure document. Exactly one payload is engaged, matching
/// the "type" field of the JSON form.
struct Document {
  enum class Kind { Contact, Lca, Mvd, Hom, MeetMap, Space, Map };

  Kind kind = Kind::Contact;
  std::optional<ContactStructure> contact;
  std::optional<LocalContactStructure> lca;
  std::optional<MvdStructure> mvd;
  std::optional<CompleteHomomorphism> hom;
  std::optional<MeetFunctionTable> meetmap;
  std::optional<FiniteSpace> space;
  std::optional<SpaceMap> map;

  static Document of(ContactStructure s);
  static Document of(LocalContactStructure s);
  static Document of(MvdStructure s);
  static Document of(CompleteHomomorphism h);
  static Document of(MeetFunctionTable t);
  static Document of(FiniteSpace s);
  static Document of(SpaceMap m);
};

const char* kind_name(Document::Kind kind);

/// Parses a JSON document; errors carry a field path. Throws Error with
/// ParseError / SyntaxError / UnknownAtom / ... codes.
Document parse_document(const std::string& text);
Document parse_document_json(const nlohmann::json& j);

/// Canonical JSON form: sorted keys, two-space indent, trailing newline.
/// parse(serialize(d)) == d for every valid document.
nlohmann::json document_json(const Document& doc);
std::string serialize_document(const Document& doc);
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json witness_json(const Witness& w);
nlohmann::json report_json(const AxiomReport& report);
nlohmann::json classification_json(const Classification& c);
nlohmann::json equivalence_json(const EquivalenceReport& r, Document::Kind in);
nlohmann::json galois_json(const GaloisReport& r);

}  // namespace mereo

#endif
