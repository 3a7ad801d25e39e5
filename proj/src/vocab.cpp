#include "oppo/vocab.hpp"

namespace oppo::vocab {

namespace {
Iri make(std::string_view ns, std::string_view local) {
  return Iri(std::string(ns) + std::string(local));
}
}  // namespace

const Iri& rdf_type() {
  static const Iri iri = make(kRdfNs, "type");
  return iri;
}

const Iri& rdfs_sub_class_of() {
  static const Iri iri = make(kRdfsNs, "subClassOf");
  return iri;
}

const Iri& rdfs_sub_property_of() {
  static const Iri iri = make(kRdfsNs, "subPropertyOf");
  return iri;
}

const Iri& rdfs_domain() {
  static const Iri iri = make(kRdfsNs, "domain");
  return iri;
}

const Iri& rdfs_range() {
  static const Iri iri = make(kRdfsNs, "range");
  return iri;
}

const Iri& rdfs_label() {
  static const Iri iri = make(kRdfsNs, "label");
  return iri;
}

const Iri& owl_disjoint_with() {
  static const Iri iri = make(kOwlNs, "disjointWith");
  return iri;
}

const Iri& skos_definition() {
  static const Iri iri = make(kSkosNs, "definition");
  return iri;
}

const Iri& xsd_string() {
  static const Iri iri = make(kXsdNs, "string");
  return iri;
}

const Iri& xsd_integer() {
  static const Iri iri = make(kXsdNs, "integer");
  return iri;
}

const Iri& xsd_boolean() {
  static const Iri iri = make(kXsdNs, "boolean");
  return iri;
}

}  // namespace oppo::vocab
