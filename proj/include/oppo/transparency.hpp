#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/schema.hpp"
#include "oppo/term.hpp"

namespace oppo::transparency {

/// The detail dimensions a data practice can specify. Which dimensions apply
/// to a practice depends on its classes; see score_policy.
enum class DetailDimension {
  DURATION,
  LOCATION,
  STORAGE_ENTITY,
  MODIFICATION_REQUEST,
  MODIFICATION_RESPONSE,
  RESPONSE_DELAY,
  SECURITY_MECHANISM,
  PURPOSE,
  DATA_TYPE_SPECIFICITY,
};

std::string_view dimension_name(DetailDimension d);

struct PracticeRow {
  Iri practice;
  std::set<DetailDimension> applicable;
  std::set<DetailDimension> specified;  // always a subset of applicable
  /// The practice discloses a retention period but only an indefinite one.
  bool indefinite_duration = false;
};

struct TransparencyReport {
  Iri policy;
  std::vector<PracticeRow> per_practice;  // ordered by practice IRI
  double specified_weight = 0.0;
  double applicable_weight = 0.0;

  /// Ratio of specified to applicable weight, 0 when nothing is applicable.
  double score() const;
};

struct ScoreOptions {
  /// Count indefinite durations as unspecified instead of specified-but-vague.
  bool strict = false;
  /// Per-dimension weights; anything absent weighs 1.0.
  std::map<DetailDimension, double> weights;
};

class UnknownPolicyError : public Error {
 public:
  explicit UnknownPolicyError(const Iri& policy);
};

/// Scores one policy over a materialized graph. Throws UnknownPolicyError
/// when (policy, rdf:type, oppo:PrivacyPolicy) is absent. Applicability:
/// DURATION for storage-duration practices; LOCATION and STORAGE_ENTITY for
/// storage-location practices; the three modification dimensions for
/// storage-modification practices; SECURITY_MECHANISM for practices acting
/// on at least one data item; PURPOSE and DATA_TYPE_SPECIFICITY for every
/// practice. A dimension is specified when the corresponding edge or literal
/// is present (for DATA_TYPE_SPECIFICITY: some acted-on item is typed by a
/// proper subclass of the data-item root).
TransparencyReport score_policy(const Graph& g, const Iri& policy,
                                const Schema& schema, const ScoreOptions& options = {});

/// Reports sorted by score descending, ties by policy IRI. Throws Error on
/// empty input.
std::vector<TransparencyReport> compare(std::vector<TransparencyReport> reports);

std::string to_text(const TransparencyReport& report);
std::string to_json(const TransparencyReport& report);

}  // namespace oppo::transparency
