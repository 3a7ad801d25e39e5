#include "oppo/schema.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "oppo/vocab.hpp"

namespace oppo {

namespace vb = vocab;

std::string_view diagnostic_code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::SubclassCycle: return "SubclassCycle";
    case DiagnosticCode::UnknownParent: return "UnknownParent";
    case DiagnosticCode::MissingParent: return "MissingParent";
    case DiagnosticCode::NoTierRoot: return "NoTierRoot";
    case DiagnosticCode::MultipleTierRoots: return "MultipleTierRoots";
    case DiagnosticCode::UnknownDomain: return "UnknownDomain";
    case DiagnosticCode::UnknownRange: return "UnknownRange";
    case DiagnosticCode::InvalidDataRange: return "InvalidDataRange";
    case DiagnosticCode::UnknownDisjointTarget: return "UnknownDisjointTarget";
    case DiagnosticCode::AsymmetricDisjoint: return "AsymmetricDisjoint";
    case DiagnosticCode::DisjointOverlap: return "DisjointOverlap";
  }
  return "?";
}

Schema::Schema(std::vector<ClassDef> classes, std::vector<PropertyDef> properties,
               PrefixMap prefixes)
    : prefixes_(std::move(prefixes)) {
  for (auto& c : classes) {
    Iri key = c.iri;
    classes_.insert_or_assign(std::move(key), std::move(c));
  }
  for (auto& p : properties) {
    Iri key = p.iri;
    properties_.insert_or_assign(std::move(key), std::move(p));
  }
  // Normalize disjointness to be symmetric wherever both classes exist.
  for (auto& [iri, def] : classes_) {
    for (const Iri& other : def.disjoint_with) {
      auto it = classes_.find(other);
      if (it == classes_.end()) continue;
      auto& back = it->second.disjoint_with;
      if (std::find(back.begin(), back.end(), iri) == back.end()) back.push_back(iri);
    }
  }
  for (auto& [iri, def] : classes_) {
    std::sort(def.disjoint_with.begin(), def.disjoint_with.end());
    def.disjoint_with.erase(
        std::unique(def.disjoint_with.begin(), def.disjoint_with.end()),
        def.disjoint_with.end());
  }
}

std::set<Iri> Schema::superclasses_of(const Iri& iri) const {
  std::set<Iri> seen;
  if (!classes_.contains(iri)) return seen;
  std::deque<Iri> queue{iri};
  seen.insert(iri);
  while (!queue.empty()) {
    Iri current = queue.front();
    queue.pop_front();
    auto it = classes_.find(current);
    if (it == classes_.end()) continue;
    for (const Iri& parent : it->second.parents) {
      if (seen.insert(parent).second) queue.push_back(parent);
    }
  }
  return seen;
}

bool Schema::is_subclass_of(const Iri& sub, const Iri& super) const {
  if (!classes_.contains(sub) || !classes_.contains(super)) return false;
  return superclasses_of(sub).contains(super);
}

std::vector<std::pair<Iri, Iri>> Schema::disjoint_pairs() const {
  std::set<std::pair<Iri, Iri>> pairs;
  for (const auto& [iri, def] : classes_) {
    for (const Iri& other : def.disjoint_with) {
      if (iri < other) {
        pairs.emplace(iri, other);
      } else if (other < iri) {
        pairs.emplace(other, iri);
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

Iri Schema::resolve(std::string_view prefixed_name) const {
  auto expanded = prefixes_.expand(prefixed_name);
  if (!expanded) throw Error("cannot resolve prefixed name: " + std::string(prefixed_name));
  return *expanded;
}

Schema Schema::extended_with(std::vector<ClassDef> classes,
                             std::vector<PropertyDef> properties) const {
  std::vector<ClassDef> all_classes;
  all_classes.reserve(classes_.size() + classes.size());
  for (const auto& [iri, def] : classes_) all_classes.push_back(def);
  for (auto& def : classes) all_classes.push_back(std::move(def));
  std::vector<PropertyDef> all_properties;
  all_properties.reserve(properties_.size() + properties.size());
  for (const auto& [iri, def] : properties_) all_properties.push_back(def);
  for (auto& def : properties) all_properties.push_back(std::move(def));
  return Schema(std::move(all_classes), std::move(all_properties), prefixes_);
}

PrefixMap builtin_prefixes(const SchemaConfig& config) {
  const std::string oppo_ns = config.oppo_namespace.empty()
                                  ? std::string(vb::kDefaultOppoNs)
                                  : config.oppo_namespace;
  PrefixMap prefixes;
  prefixes.add("oppo", Iri(oppo_ns));
  prefixes.add("rdf", Iri(std::string(vb::kRdfNs)));
  prefixes.add("rdfs", Iri(std::string(vb::kRdfsNs)));
  prefixes.add("owl", Iri(std::string(vb::kOwlNs)));
  prefixes.add("xsd", Iri(std::string(vb::kXsdNs)));
  prefixes.add("skos", Iri(std::string(vb::kSkosNs)));
  prefixes.add("bfo", Iri(std::string(vb::kBfoNs)));
  prefixes.add("iao", Iri(std::string(vb::kIaoNs)));
  prefixes.add("obi", Iri(std::string(vb::kObiNs)));
  prefixes.add("omrse", Iri(std::string(vb::kOmrseNs)));
  prefixes.add("dpvo", Iri(std::string(vb::kDpvoNs)));
  prefixes.add("time", Iri(std::string(vb::kTimeNs)));
  return prefixes;
}

Schema build_schema() { return build_schema(SchemaConfig{}); }

Schema build_schema(const SchemaConfig& config) {
  PrefixMap prefixes = builtin_prefixes(config);
  const std::string oppo_ns = prefixes.namespace_of("oppo")->value();

  auto oppo = [&](std::string_view local) { return Iri(oppo_ns + std::string(local)); };
  auto ext = [](std::string_view ns, std::string_view local) {
    return Iri(std::string(ns) + std::string(local));
  };

  std::vector<ClassDef> classes;
  auto cls = [&](Iri iri, std::string label, std::vector<Iri> parents,
                 std::optional<std::string> definition = std::nullopt) -> ClassDef& {
    classes.push_back(ClassDef{std::move(iri), std::move(label), std::move(parents),
                               {}, std::move(definition), false});
    return classes.back();
  };

  // Upper-level stubs. Only the subclass edges the vocabulary itself needs
  // are asserted; nothing else is imported.
  const Iri entity = ext(vb::kBfoNs, "Entity");
  const Iri role = ext(vb::kBfoNs, "Role");
  const Iri disposition = ext(vb::kBfoNs, "Disposition");
  const Iri spatial_region = ext(vb::kBfoNs, "SpatialRegion");
  const Iri site = ext(vb::kBfoNs, "Site");
  const Iri ice = ext(vb::kIaoNs, "InformationContentEntity");
  const Iri data_item = ext(vb::kIaoNs, "DataItem");
  const Iri organization = ext(vb::kObiNs, "Organization");
  const Iri legal_person_role = ext(vb::kOmrseNs, "LegalPersonRole");
  const Iri organization_role = ext(vb::kOmrseNs, "OrganizationRole");
  const Iri purpose = ext(vb::kDpvoNs, "Purpose");
  const Iri inferred_personal = ext(vb::kDpvoNs, "InferredPersonalData");
  const Iri synthetic = ext(vb::kDpvoNs, "SyntheticData");
  const Iri duration_description = ext(vb::kTimeNs, "GeneralizedDurationDescription");

  cls(entity, "entity", {}).tier_root = true;
  cls(role, "role", {entity});
  cls(disposition, "disposition", {entity});
  cls(ice, "information content entity", {entity});
  cls(organization, "organization", {entity});
  cls(legal_person_role, "legal person role", {role});
  cls(organization_role, "organization role", {role});
  cls(purpose, "purpose", {disposition},
      "A reason for which data is collected, stored or processed.");
  cls(duration_description, "generalized duration description", {entity});

  // Information content entities.
  cls(oppo("PrivacyPolicy"), "privacy policy", {ice},
      "The content of a document describing the entirety of an organization's "
      "data practices.");
  cls(oppo("DataPractice"), "data practice", {ice},
      "A portion of a privacy policy describing one way an organization "
      "collects, stores or processes data.");
  cls(oppo("PrivacyRegulation"), "privacy regulation", {ice},
      "The content of a legal text regulating the handling of personal data.");
  cls(data_item, "data item", {ice},
      "A piece of information held about one or more individuals.");

  // Data item taxonomy.
  cls(oppo("IndividualData"), "individual data", {data_item},
      "Data related to a single individual.");
  cls(oppo("AggregatedData"), "aggregated data", {data_item},
      "Data combined across multiple individuals.");
  cls(oppo("AnonymizedData"), "anonymized data", {oppo("IndividualData")},
      "Individual data from which everything that could identify the person "
      "has been removed.");
  cls(oppo("PersonalData"), "personal data", {oppo("IndividualData")},
      "Individual data that can directly or indirectly identify the person.");
  cls(oppo("StatisticalData"), "statistical data", {oppo("AggregatedData")},
      "Aggregated data produced by statistical operations, such as view "
      "counts.");
  cls(synthetic, "synthetic data", {oppo("AggregatedData")},
      "Artificial data produced to resemble real data.");

  cls(oppo("DemographicPersonalData"), "demographic personal data", {oppo("PersonalData")},
      "Personal data about demographic attributes such as age or gender.");
  cls(oppo("FinancialPersonalData"), "financial personal data", {oppo("PersonalData")},
      "Personal data about financial matters, such as payment details.");
  cls(oppo("IdentityPersonalData"), "identity personal data", {oppo("PersonalData")},
      "Personal data establishing who a person is, such as a name or account "
      "profile.");
  cls(oppo("ActivityPersonalData"), "activity personal data", {oppo("PersonalData")},
      "Personal data about what a person does, such as posts or reviews.");
  cls(oppo("BiometricPersonalData"), "biometric personal data", {oppo("PersonalData")},
      "Personal data derived from physical characteristics, such as "
      "fingerprints.");
  cls(oppo("TechnicalPersonalData"), "technical personal data", {oppo("PersonalData")},
      "Personal data about a person's equipment or connection, such as an IP "
      "address.");
  cls(oppo("HealthPersonalData"), "health personal data", {oppo("PersonalData")},
      "Personal data about a person's health.");
  cls(oppo("LocationPersonalData"), "location personal data", {oppo("PersonalData")},
      "Personal data about where a person is or has been.");
  cls(oppo("ContactPersonalData"), "contact personal data", {oppo("PersonalData")},
      "Personal data used to reach a person, such as a phone number.");
  cls(oppo("MediaPersonalData"), "media personal data", {oppo("PersonalData")},
      "Personal data in media form, such as photos or videos.");
  cls(oppo("CommunicationPersonalData"), "communication personal data",
      {oppo("PersonalData")},
      "Personal data exchanged in conversations, such as messages or chats.");
  cls(oppo("PseudonymizedPersonalData"), "pseudonymized personal data",
      {oppo("PersonalData")},
      "Personal data whose identifiers are replaced by a pseudo-identity that "
      "a mapping can still resolve to the person.");
  cls(inferred_personal, "inferred personal data", {oppo("PersonalData")},
      "Personal data derived from other data rather than collected directly.");

  // Roles.
  cls(oppo("DataSubjectRole"), "data subject role", {legal_person_role},
      "The role of the person the data is about.");
  cls(oppo("MinorDataSubjectRole"), "minor data subject role", {oppo("DataSubjectRole")},
      "A data subject role played by a person under the age of majority.");
  cls(oppo("DataRecipientRole"), "data recipient role", {organization_role},
      "The role of an organization that receives data.");
  cls(oppo("FirstPartyDataRecipientRole"), "first party data recipient role",
      {oppo("DataRecipientRole")},
      "A recipient role of the organization that collects data directly from "
      "the person.");
  cls(oppo("ThirdPartyDataRecipientRole"), "third party data recipient role",
      {oppo("DataRecipientRole")},
      "A recipient role of an organization that obtains data from another "
      "organization.");
  cls(oppo("DataProviderRole"), "data provider role", {role},
      "The role of a person or organization that shares data with others.");
  cls(oppo("LegalPersonDataProviderRole"), "legal person data provider role",
      {oppo("DataProviderRole"), legal_person_role});
  cls(oppo("OrganizationalDataProviderRole"), "organizational data provider role",
      {oppo("DataProviderRole"), organization_role});

  // Data practice taxonomy.
  cls(oppo("DataStoragePractice"), "data storage practice", {oppo("DataPractice")},
      "A data practice about the storage and retention of data.");
  cls(oppo("DataStorageDurationPractice"), "data storage duration practice",
      {oppo("DataStoragePractice")},
      "A storage practice stating how long data is retained.");
  cls(oppo("DataStorageLocationPractice"), "data storage location practice",
      {oppo("DataStoragePractice")},
      "A storage practice stating where or in what kind of infrastructure "
      "data is kept.");
  cls(oppo("DataStorageModificationPractice"), "data storage modification practice",
      {oppo("DataStoragePractice")},
      "A storage practice describing how stored data can be corrected or "
      "deleted on request.");
  cls(oppo("DataSecurityPractice"), "data security practice", {oppo("DataPractice")},
      "A data practice about keeping collected or stored data secure.");
  cls(oppo("DataSecurityAuditingPractice"), "data security auditing practice",
      {oppo("DataSecurityPractice")},
      "A security practice that inspects whether safeguards are maintained.");
  cls(oppo("DataSecurityRestorationPractice"), "data security restoration practice",
      {oppo("DataSecurityPractice")},
      "A security practice describing how lost or compromised data is "
      "recovered.");
  cls(oppo("DataSecurityAccessPractice"), "data security access practice",
      {oppo("DataSecurityPractice")},
      "A security practice that limits who may access the data.");

  // Storage locations and durations.
  cls(oppo("SpatialEntity"), "spatial entity", {entity},
      "A place data can be stored in, generalizing spatial regions and sites.");
  cls(spatial_region, "spatial region", {oppo("SpatialEntity")});
  cls(site, "site", {oppo("SpatialEntity")});
  cls(oppo("StorageEntity"), "storage entity", {entity},
      "Physical infrastructure data is stored in, such as a data center or a "
      "user device.");
  cls(oppo("DefiniteDurationDescription"), "definite duration description",
      {duration_description},
      "A duration with a stated bound, such as a maximum number of months.");
  cls(oppo("IndefiniteDurationDescription"), "indefinite duration description",
      {duration_description},
      "A duration with no stated bound.");

  // Security mechanisms.
  cls(oppo("SecurityMechanism"), "security mechanism", {entity},
      "A technique or tool used to protect data.");
  cls(oppo("PseudonymizationMechanism"), "pseudonymization mechanism",
      {oppo("SecurityMechanism")},
      "A mechanism replacing personal identifiers with a pseudo-identity.");
  cls(oppo("EncryptionMechanism"), "encryption mechanism", {oppo("SecurityMechanism")},
      "A mechanism making data unintelligible without a decryption key.");
  cls(oppo("HashingMechanism"), "hashing mechanism", {oppo("SecurityMechanism")},
      "A mechanism applying a cryptographic hash to data.");
  cls(oppo("AuthenticationMechanism"), "authentication mechanism",
      {oppo("SecurityMechanism")},
      "A mechanism verifying identity before granting access to data.");
  cls(oppo("TwoFactorAuthenticationMechanism"), "two factor authentication mechanism",
      {oppo("AuthenticationMechanism")},
      "An authentication mechanism requiring a second, independent factor.");

  // Declared disjointness. Symmetric closure is applied by the constructor.
  auto declare_disjoint = [&](const Iri& a, const Iri& b) {
    for (auto& def : classes) {
      if (def.iri == a) def.disjoint_with.push_back(b);
      if (def.iri == b) def.disjoint_with.push_back(a);
    }
  };
  declare_disjoint(oppo("AnonymizedData"), oppo("PersonalData"));
  declare_disjoint(oppo("IndividualData"), oppo("AggregatedData"));
  declare_disjoint(oppo("DefiniteDurationDescription"), oppo("IndefiniteDurationDescription"));

  std::vector<PropertyDef> properties;
  auto obj = [&](std::string_view local, Iri domain, Iri range, std::string label) {
    properties.push_back(PropertyDef{oppo(local), PropertyKind::object, std::move(domain),
                                     std::move(range), std::move(label)});
  };
  auto dat = [&](std::string_view local, Iri domain, const Iri& range, std::string label) {
    properties.push_back(PropertyDef{oppo(local), PropertyKind::data, std::move(domain),
                                     range, std::move(label)});
  };

  obj("hasDataPractice", oppo("PrivacyPolicy"), oppo("DataPractice"), "has data practice");
  obj("allows", oppo("PrivacyRegulation"), oppo("DataPractice"), "allows");
  obj("disallows", oppo("PrivacyRegulation"), oppo("DataPractice"), "disallows");
  obj("actsOn", oppo("DataPractice"), data_item, "acts on");
  obj("isAbout", data_item, oppo("DataSubjectRole"), "is about");
  obj("isProvidedBy", data_item, oppo("DataProviderRole"), "is provided by");
  obj("isReceivedBy", data_item, oppo("DataRecipientRole"), "is received by");
  obj("hasPurpose", oppo("DataPractice"), purpose, "has purpose");
  obj("appliesTo", oppo("SecurityMechanism"), data_item, "applies to");
  obj("hasResponseDelay", oppo("DataStorageModificationPractice"), duration_description,
      "has response delay");
  // Artifact extensions: the linkage and month-count fields the bundled
  // queries and the transparency report rely on.
  obj("hasStorageDuration", oppo("DataStorageDurationPractice"), duration_description,
      "has storage duration");
  obj("hasStorageLocation", oppo("DataStorageLocationPractice"), oppo("SpatialEntity"),
      "has storage location");
  obj("hasStorageEntity", oppo("DataStorageLocationPractice"), oppo("StorageEntity"),
      "has storage entity");
  dat("RequestType", oppo("DataStorageModificationPractice"), vb::xsd_string(),
      "request type");
  dat("ResponseType", oppo("DataStorageModificationPractice"), vb::xsd_string(),
      "response type");
  dat("hasMaxDurationMonths", oppo("DefiniteDurationDescription"), vb::xsd_integer(),
      "has max duration months");
  dat("hasMinDurationMonths", oppo("DefiniteDurationDescription"), vb::xsd_integer(),
      "has min duration months");

  return Schema(std::move(classes), std::move(properties), std::move(prefixes));
}

Graph schema_to_graph(const Schema& schema) {
  Graph g;
  auto str = [](const std::string& s) { return Term::str(s); };
  for (const auto& [iri, def] : schema.classes()) {
    Term subject = Term::iri(iri);
    for (const Iri& parent : def.parents) {
      g.insert(Triple(subject, Term::iri(vb::rdfs_sub_class_of()), Term::iri(parent)));
    }
    g.insert(Triple(subject, Term::iri(vb::rdfs_label()), str(def.label)));
    if (def.definition) {
      g.insert(Triple(subject, Term::iri(vb::skos_definition()), str(*def.definition)));
    }
  }
  for (const auto& [a, b] : schema.disjoint_pairs()) {
    g.insert(Triple(Term::iri(a), Term::iri(vb::owl_disjoint_with()), Term::iri(b)));
  }
  for (const auto& [iri, def] : schema.properties()) {
    Term subject = Term::iri(iri);
    g.insert(Triple(subject, Term::iri(vb::rdfs_domain()), Term::iri(def.domain)));
    g.insert(Triple(subject, Term::iri(vb::rdfs_range()), Term::iri(def.range)));
    g.insert(Triple(subject, Term::iri(vb::rdfs_label()), str(def.label)));
  }
  return g;
}

namespace {

// Tarjan strongly-connected components over the parent edges; SCCs of size
// greater than one (or with a self-edge) are subclass cycles.
struct SccFinder {
  const std::map<Iri, ClassDef>& classes;
  std::map<Iri, int> index, lowlink;
  std::vector<Iri> stack;
  std::set<Iri> on_stack;
  int counter = 0;
  std::vector<std::vector<Iri>> cycles;

  explicit SccFinder(const std::map<Iri, ClassDef>& c) : classes(c) {}

  void run() {
    for (const auto& [iri, def] : classes) {
      if (!index.contains(iri)) visit(iri);
    }
  }

  void visit(const Iri& v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    auto it = classes.find(v);
    if (it != classes.end()) {
      for (const Iri& parent : it->second.parents) {
        if (!classes.contains(parent)) continue;
        if (!index.contains(parent)) {
          visit(parent);
          lowlink[v] = std::min(lowlink[v], lowlink[parent]);
        } else if (on_stack.contains(parent)) {
          lowlink[v] = std::min(lowlink[v], index[parent]);
        }
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<Iri> component;
      while (true) {
        Iri w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        bool done = (w == v);
        component.push_back(std::move(w));
        if (done) break;
      }
      bool self_loop = false;
      if (component.size() == 1) {
        const auto& parents = classes.at(component.front()).parents;
        self_loop = std::find(parents.begin(), parents.end(), component.front()) !=
                    parents.end();
      }
      if (component.size() > 1 || self_loop) {
        std::sort(component.begin(), component.end());
        cycles.push_back(std::move(component));
      }
    }
  }
};

std::string iri_list(const std::vector<Iri>& iris) {
  std::string out;
  for (const Iri& iri : iris) {
    if (!out.empty()) out += ", ";
    out += "<" + iri.value() + ">";
  }
  return out;
}

}  // namespace

std::vector<Diagnostic> validate_schema(const Schema& schema) {
  std::vector<Diagnostic> out;
  const auto& classes = schema.classes();

  SccFinder scc(classes);
  scc.run();
  std::sort(scc.cycles.begin(), scc.cycles.end());
  for (auto& cycle : scc.cycles) {
    out.push_back(Diagnostic{DiagnosticCode::SubclassCycle, cycle,
                             "subclass cycle through " + iri_list(cycle)});
  }

  for (const auto& [iri, def] : classes) {
    for (const Iri& parent : def.parents) {
      if (!classes.contains(parent)) {
        out.push_back(Diagnostic{DiagnosticCode::UnknownParent,
                                 {iri, parent},
                                 "<" + iri.value() + "> names unknown parent <" +
                                     parent.value() + ">"});
      }
    }
    if (def.parents.empty() && !def.tier_root) {
      out.push_back(Diagnostic{DiagnosticCode::MissingParent,
                               {iri},
                               "<" + iri.value() + "> has no parent and is not a tier root"});
    }
    for (const Iri& other : def.disjoint_with) {
      auto it = classes.find(other);
      if (it == classes.end()) {
        out.push_back(Diagnostic{DiagnosticCode::UnknownDisjointTarget,
                                 {iri, other},
                                 "<" + iri.value() + "> disjoint with unknown <" +
                                     other.value() + ">"});
        continue;
      }
      const auto& back = it->second.disjoint_with;
      if (std::find(back.begin(), back.end(), iri) == back.end()) {
        out.push_back(Diagnostic{DiagnosticCode::AsymmetricDisjoint,
                                 {iri, other},
                                 "disjointness of <" + iri.value() + "> and <" +
                                     other.value() + "> is not symmetric"});
      }
    }
  }

  // Root reachability is only meaningful on an acyclic hierarchy.
  if (scc.cycles.empty()) {
    for (const auto& [iri, def] : classes) {
      int roots = 0;
      for (const Iri& super : schema.superclasses_of(iri)) {
        auto it = classes.find(super);
        if (it != classes.end() && it->second.tier_root) ++roots;
      }
      if (roots == 0) {
        out.push_back(Diagnostic{DiagnosticCode::NoTierRoot,
                                 {iri},
                                 "<" + iri.value() + "> does not reach a tier root"});
      } else if (roots > 1) {
        out.push_back(Diagnostic{DiagnosticCode::MultipleTierRoots,
                                 {iri},
                                 "<" + iri.value() + "> reaches more than one tier root"});
      }
    }
  }

  for (const auto& [iri, def] : schema.properties()) {
    if (!classes.contains(def.domain)) {
      out.push_back(Diagnostic{DiagnosticCode::UnknownDomain,
                               {iri, def.domain},
                               "property <" + iri.value() + "> has unknown domain <" +
                                   def.domain.value() + ">"});
    }
    if (def.kind == PropertyKind::object) {
      if (!classes.contains(def.range)) {
        out.push_back(Diagnostic{DiagnosticCode::UnknownRange,
                                 {iri, def.range},
                                 "property <" + iri.value() + "> has unknown range <" +
                                     def.range.value() + ">"});
      }
    } else if (def.range != vb::xsd_string() && def.range != vb::xsd_integer() &&
               def.range != vb::xsd_boolean()) {
      out.push_back(Diagnostic{DiagnosticCode::InvalidDataRange,
                               {iri, def.range},
                               "data property <" + iri.value() +
                                   "> must range over xsd string/integer/boolean"});
    }
  }

  // A class transitively below both members of a disjoint pair can have no
  // instances; flag each such class once per pair.
  if (scc.cycles.empty()) {
    for (const auto& [a, b] : schema.disjoint_pairs()) {
      for (const auto& [iri, def] : classes) {
        const auto supers = schema.superclasses_of(iri);
        if (supers.contains(a) && supers.contains(b)) {
          out.push_back(Diagnostic{DiagnosticCode::DisjointOverlap,
                                   {iri, a, b},
                                   "<" + iri.value() + "> is a subclass of both disjoint <" +
                                       a.value() + "> and <" + b.value() + ">"});
        }
      }
    }
  }

  return out;
}

}  // namespace oppo
