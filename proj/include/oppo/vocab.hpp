#pragma once

#include <string_view>

#include "oppo/term.hpp"

namespace oppo::vocab {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkosNs = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kBfoNs = "http://purl.obolibrary.org/obo/bfo#";
inline constexpr std::string_view kIaoNs = "http://purl.obolibrary.org/obo/iao#";
inline constexpr std::string_view kObiNs = "http://purl.obolibrary.org/obo/obi#";
inline constexpr std::string_view kOmrseNs = "http://purl.obolibrary.org/obo/omrse#";
inline constexpr std::string_view kDpvoNs = "https://w3id.org/dpv/owl#";
inline constexpr std::string_view kTimeNs = "http://www.w3.org/2006/time#";

/// Default namespace for the vocabulary's own terms; overridable through
/// SchemaConfig (and the OPPO_PREFIX_BASE environment variable in the CLI).
inline constexpr std::string_view kDefaultOppoNs = "https://example.org/oppo#";

const Iri& rdf_type();
const Iri& rdfs_sub_class_of();
const Iri& rdfs_sub_property_of();
const Iri& rdfs_domain();
const Iri& rdfs_range();
const Iri& rdfs_label();
const Iri& owl_disjoint_with();
const Iri& skos_definition();
const Iri& xsd_string();
const Iri& xsd_integer();
const Iri& xsd_boolean();

}  // namespace oppo::vocab
