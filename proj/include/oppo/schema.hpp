#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/prefix.hpp"
#include "oppo/term.hpp"

namespace oppo {

struct ClassDef {
  Iri iri;
  std::string label;
  std::vector<Iri> parents;
  std::vector<Iri> disjoint_with;
  std::optional<std::string> definition;
  /// Designated hierarchy root; the only kind of class allowed no parents.
  bool tier_root = false;
};

enum class PropertyKind { object, data };

struct PropertyDef {
  Iri iri;
  PropertyKind kind = PropertyKind::object;
  Iri domain;
  Iri range;  // a class for object properties, a datatype IRI for data properties
  std::string label;
};

enum class DiagnosticCode {
  SubclassCycle,
  UnknownParent,
  MissingParent,
  NoTierRoot,
  MultipleTierRoots,
  UnknownDomain,
  UnknownRange,
  InvalidDataRange,
  UnknownDisjointTarget,
  AsymmetricDisjoint,
  DisjointOverlap,
};

struct Diagnostic {
  DiagnosticCode code;
  std::vector<Iri> subjects;
  std::string message;
};

std::string_view diagnostic_code_name(DiagnosticCode code);

/// The vocabulary: class and property definitions plus the prefix table.
/// Immutable once built; extension returns a new value and the caller
/// re-runs validate_schema on it.
class Schema {
 public:
  Schema(std::vector<ClassDef> classes, std::vector<PropertyDef> properties,
         PrefixMap prefixes);

  const std::map<Iri, ClassDef>& classes() const { return classes_; }
  const std::map<Iri, PropertyDef>& properties() const { return properties_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  bool has_class(const Iri& iri) const { return classes_.contains(iri); }

  /// Reflexive-transitive subclass test; false when either class is unknown.
  bool is_subclass_of(const Iri& sub, const Iri& super) const;

  /// Reflexive-transitive superclass set (empty for unknown classes).
  std::set<Iri> superclasses_of(const Iri& iri) const;

  /// Normalized disjointness axioms, one per unordered pair, smaller IRI first.
  std::vector<std::pair<Iri, Iri>> disjoint_pairs() const;

  /// Expands "label:local" through the prefix table. Throws Error on unknown
  /// labels or malformed input.
  Iri resolve(std::string_view prefixed_name) const;

  Schema extended_with(std::vector<ClassDef> classes,
                       std::vector<PropertyDef> properties) const;

 private:
  std::map<Iri, ClassDef> classes_;
  std::map<Iri, PropertyDef> properties_;
  PrefixMap prefixes_;
};

struct SchemaConfig {
  std::string oppo_namespace;  // empty means the built-in default
};

/// The built-in vocabulary: the class taxonomy (policies, practices, data
/// items, roles, duration descriptions, security mechanisms, upper-level
/// stubs) and its seventeen properties.
Schema build_schema();
Schema build_schema(const SchemaConfig& config);

/// Prefix table used for the built-in vocabulary and the bundled queries.
PrefixMap builtin_prefixes(const SchemaConfig& config = {});

/// Emits the schema as triples: one rdfs:subClassOf per parent edge, one
/// owl:disjointWith per unordered pair (smaller subject first), rdfs:domain,
/// rdfs:range, rdfs:label and skos:definition. Deterministic for equal input.
Graph schema_to_graph(const Schema& schema);

/// Structural checks: acyclic subclass graph, resolvable parents and
/// domains/ranges, datatype ranges restricted to xsd string/integer/boolean,
/// symmetric disjointness, no class under both members of a disjoint pair,
/// and exactly one tier root above every class. Empty result means valid.
std::vector<Diagnostic> validate_schema(const Schema& schema);

}  // namespace oppo
