#include "oppo/transparency.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "oppo/vocab.hpp"

namespace oppo::transparency {

std::string_view dimension_name(DetailDimension d) {
  switch (d) {
    case DetailDimension::DURATION: return "DURATION";
    case DetailDimension::LOCATION: return "LOCATION";
    case DetailDimension::STORAGE_ENTITY: return "STORAGE_ENTITY";
    case DetailDimension::MODIFICATION_REQUEST: return "MODIFICATION_REQUEST";
    case DetailDimension::MODIFICATION_RESPONSE: return "MODIFICATION_RESPONSE";
    case DetailDimension::RESPONSE_DELAY: return "RESPONSE_DELAY";
    case DetailDimension::SECURITY_MECHANISM: return "SECURITY_MECHANISM";
    case DetailDimension::PURPOSE: return "PURPOSE";
    case DetailDimension::DATA_TYPE_SPECIFICITY: return "DATA_TYPE_SPECIFICITY";
  }
  return "?";
}

double TransparencyReport::score() const {
  if (applicable_weight <= 0.0) return 0.0;
  return specified_weight / applicable_weight;
}

UnknownPolicyError::UnknownPolicyError(const Iri& policy)
    : Error("not a known privacy policy: <" + policy.value() + ">") {}

namespace {

struct Terms {
  Term type;
  Term privacy_policy;
  Term has_data_practice;
  Term acts_on;
  Term has_purpose;
  Term applies_to;
  Term has_storage_duration;
  Term has_storage_location;
  Term has_storage_entity;
  Term has_response_delay;
  Term request_type;
  Term response_type;
  Term has_max_months;
  Term has_min_months;
  Term duration_practice;
  Term location_practice;
  Term modification_practice;
  Term security_mechanism;
  Term definite_duration;
  Term indefinite_duration;
  Iri data_item_root;

  explicit Terms(const Schema& schema)
      : type(Term::iri(vocab::rdf_type())),
        privacy_policy(Term::iri(schema.resolve("oppo:PrivacyPolicy"))),
        has_data_practice(Term::iri(schema.resolve("oppo:hasDataPractice"))),
        acts_on(Term::iri(schema.resolve("oppo:actsOn"))),
        has_purpose(Term::iri(schema.resolve("oppo:hasPurpose"))),
        applies_to(Term::iri(schema.resolve("oppo:appliesTo"))),
        has_storage_duration(Term::iri(schema.resolve("oppo:hasStorageDuration"))),
        has_storage_location(Term::iri(schema.resolve("oppo:hasStorageLocation"))),
        has_storage_entity(Term::iri(schema.resolve("oppo:hasStorageEntity"))),
        has_response_delay(Term::iri(schema.resolve("oppo:hasResponseDelay"))),
        request_type(Term::iri(schema.resolve("oppo:RequestType"))),
        response_type(Term::iri(schema.resolve("oppo:ResponseType"))),
        has_max_months(Term::iri(schema.resolve("oppo:hasMaxDurationMonths"))),
        has_min_months(Term::iri(schema.resolve("oppo:hasMinDurationMonths"))),
        duration_practice(Term::iri(schema.resolve("oppo:DataStorageDurationPractice"))),
        location_practice(Term::iri(schema.resolve("oppo:DataStorageLocationPractice"))),
        modification_practice(
            Term::iri(schema.resolve("oppo:DataStorageModificationPractice"))),
        security_mechanism(Term::iri(schema.resolve("oppo:SecurityMechanism"))),
        definite_duration(Term::iri(schema.resolve("oppo:DefiniteDurationDescription"))),
        indefinite_duration(Term::iri(schema.resolve("oppo:IndefiniteDurationDescription"))),
        data_item_root(schema.resolve("iao:DataItem")) {}
};

bool has_edge(const Graph& g, const Term& subject, const Term& predicate) {
  return !g.match({subject, predicate, std::nullopt}).empty();
}

double weight_of(const ScoreOptions& options, DetailDimension d) {
  auto it = options.weights.find(d);
  return it == options.weights.end() ? 1.0 : it->second;
}

}  // namespace

TransparencyReport score_policy(const Graph& g, const Iri& policy, const Schema& schema,
                                const ScoreOptions& options) {
  const Terms terms(schema);
  const Term policy_term = Term::iri(policy);
  if (!g.contains(Triple(policy_term, terms.type, terms.privacy_policy))) {
    throw UnknownPolicyError(policy);
  }

  std::set<Iri> practices;
  for (const Triple& t : g.match({policy_term, terms.has_data_practice, std::nullopt})) {
    if (t.object.is_iri()) practices.insert(t.object.as_iri());
  }

  TransparencyReport report{policy, {}, 0.0, 0.0};
  for (const Iri& practice : practices) {
    const Term subject = Term::iri(practice);
    auto typed_as = [&](const Term& cls) {
      return g.contains(Triple(subject, terms.type, cls));
    };

    std::vector<Term> acted_on;
    for (const Triple& t : g.match({subject, terms.acts_on, std::nullopt})) {
      acted_on.push_back(t.object);
    }

    PracticeRow row{practice, {}, {}, false};
    auto mark = [&](DetailDimension d, bool applicable, bool specified) {
      if (!applicable) return;
      row.applicable.insert(d);
      if (specified) row.specified.insert(d);
    };

    if (typed_as(terms.duration_practice)) {
      bool definite = has_edge(g, subject, terms.has_max_months) ||
                      has_edge(g, subject, terms.has_min_months);
      bool indefinite = false;
      for (const Triple& t : g.match({subject, terms.has_storage_duration, std::nullopt})) {
        const Term& duration = t.object;
        if (g.contains(Triple(duration, terms.type, terms.definite_duration)) &&
            (has_edge(g, duration, terms.has_max_months) ||
             has_edge(g, duration, terms.has_min_months))) {
          definite = true;
        }
        if (g.contains(Triple(duration, terms.type, terms.indefinite_duration))) {
          indefinite = true;
        }
      }
      row.indefinite_duration = indefinite && !definite;
      bool specified = definite || (indefinite && !options.strict);
      mark(DetailDimension::DURATION, true, specified);
    }

    if (typed_as(terms.location_practice)) {
      mark(DetailDimension::LOCATION, true, has_edge(g, subject, terms.has_storage_location));
      mark(DetailDimension::STORAGE_ENTITY, true,
           has_edge(g, subject, terms.has_storage_entity));
    }

    if (typed_as(terms.modification_practice)) {
      mark(DetailDimension::MODIFICATION_REQUEST, true,
           has_edge(g, subject, terms.request_type));
      mark(DetailDimension::MODIFICATION_RESPONSE, true,
           has_edge(g, subject, terms.response_type));
      mark(DetailDimension::RESPONSE_DELAY, true,
           has_edge(g, subject, terms.has_response_delay));
    }

    if (!acted_on.empty()) {
      bool protected_item = false;
      for (const Term& item : acted_on) {
        for (const Triple& t : g.match({std::nullopt, terms.applies_to, item})) {
          if (g.contains(Triple(t.subject, terms.type, terms.security_mechanism))) {
            protected_item = true;
            break;
          }
        }
        if (protected_item) break;
      }
      mark(DetailDimension::SECURITY_MECHANISM, true, protected_item);
    }

    mark(DetailDimension::PURPOSE, true, has_edge(g, subject, terms.has_purpose));

    bool specific_type = false;
    for (const Term& item : acted_on) {
      for (const Triple& t : g.match({item, terms.type, std::nullopt})) {
        if (!t.object.is_iri()) continue;
        const Iri& cls = t.object.as_iri();
        if (cls != terms.data_item_root && schema.is_subclass_of(cls, terms.data_item_root)) {
          specific_type = true;
          break;
        }
      }
      if (specific_type) break;
    }
    mark(DetailDimension::DATA_TYPE_SPECIFICITY, true, specific_type);

    for (DetailDimension d : row.applicable) report.applicable_weight += weight_of(options, d);
    for (DetailDimension d : row.specified) report.specified_weight += weight_of(options, d);
    report.per_practice.push_back(std::move(row));
  }

  return report;
}

std::vector<TransparencyReport> compare(std::vector<TransparencyReport> reports) {
  if (reports.empty()) throw Error("cannot rank an empty list of reports");
  std::stable_sort(reports.begin(), reports.end(),
                   [](const TransparencyReport& a, const TransparencyReport& b) {
                     if (a.score() != b.score()) return a.score() > b.score();
                     return a.policy < b.policy;
                   });
  return reports;
}

namespace {

std::string format_score(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::string dimension_list(const std::set<DetailDimension>& dims) {
  std::string out;
  for (DetailDimension d : dims) {
    if (!out.empty()) out += ", ";
    out += dimension_name(d);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string to_text(const TransparencyReport& report) {
  std::string out = "policy <" + report.policy.value() + ">\n";
  for (const PracticeRow& row : report.per_practice) {
    out += "  practice <" + row.practice.value() + ">";
    if (row.indefinite_duration) out += "  [indefinite duration]";
    out += "\n";
    out += "    applicable: " + dimension_list(row.applicable) + "\n";
    out += "    specified:  " + dimension_list(row.specified) + "\n";
  }
  out += "score: " + format_score(report.score()) + "\n";
  return out;
}

std::string to_json(const TransparencyReport& report) {
  nlohmann::ordered_json doc;
  doc["policy"] = report.policy.value();
  nlohmann::ordered_json practices = nlohmann::ordered_json::array();
  for (const PracticeRow& row : report.per_practice) {
    nlohmann::ordered_json entry;
    entry["practice"] = row.practice.value();
    nlohmann::ordered_json applicable = nlohmann::ordered_json::array();
    for (DetailDimension d : row.applicable) applicable.push_back(dimension_name(d));
    nlohmann::ordered_json specified = nlohmann::ordered_json::array();
    for (DetailDimension d : row.specified) specified.push_back(dimension_name(d));
    entry["applicable"] = std::move(applicable);
    entry["specified"] = std::move(specified);
    entry["indefinite_duration"] = row.indefinite_duration;
    practices.push_back(std::move(entry));
  }
  doc["practices"] = std::move(practices);
  doc["specified_weight"] = report.specified_weight;
  doc["applicable_weight"] = report.applicable_weight;
  doc["score"] = report.score();
  return doc.dump(2) + "\n";
}

}  // namespace oppo::transparency
