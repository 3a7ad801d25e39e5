#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/schema.hpp"
#include "oppo/term.hpp"

namespace oppo::reasoner {

/// The fixed rule set. The first six are inference rules; the last two are
/// consistency checks and never add triples.
enum class RuleId {
  SCO_TRANS,           // (A sco B), (B sco C)  =>  (A sco C)
  TYPE_INHERIT,        // (x type A), (A sco B) =>  (x type B)
  SPO_TRANS,           // (p spo q), (q spo r)  =>  (p spo r)
  PROP_INHERIT,        // (x p y), (p spo q)    =>  (x q y)
  DOM_TYPE,            // (x p y), (p domain C) =>  (x type C)
  RNG_TYPE,            // (x p y), (p range C), y not literal => (y type C)
  DISJOINT_VIOLATION,  // x typed A and B with A,B disjoint
  DATATYPE_VIOLATION,  // data-property literal fails the declared range
};

std::string_view rule_name(RuleId id);

struct Violation {
  RuleId rule;
  Term focus;
  std::vector<Triple> details;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<Violation> violations;
};

/// One inference step; `rule` is absent and `premises` empty for asserted
/// triples.
struct Derivation {
  Triple conclusion;
  std::optional<RuleId> rule;
  std::vector<Triple> premises;
};

/// A materialized graph plus the provenance needed to explain it: which
/// triples were asserted and at which semi-naive round each inferred triple
/// first became derivable.
class Closure {
 public:
  Closure(Graph graph, Graph asserted, std::map<Triple, int> rounds);

  const Graph& graph() const { return graph_; }
  const Graph& asserted() const { return asserted_; }
  bool is_asserted(const Triple& t) const { return asserted_.contains(t); }

  /// 0 for asserted triples, the first derivable round for inferred ones,
  /// nullopt when the triple is not in the closure.
  std::optional<int> round_of(const Triple& t) const;

 private:
  Graph graph_;
  Graph asserted_;
  std::map<Triple, int> rounds_;
};

/// Least fixpoint of the six inference rules over data plus schema triples,
/// computed semi-naively (each round only joins against the previous round's
/// new triples). The result contains the input and is frozen.
Closure materialize(const Graph& data, const Graph& schema_graph);

/// Scans a materialized graph for individuals typed by two disjoint classes
/// and for data-property values whose lexical form breaks the declared range.
/// Deterministic: violations are ordered by disjoint pair then focus term.
ConsistencyReport check_consistency(const Graph& closure, const Schema& schema);

/// A derivation chain for `t`: its inference step followed by steps for every
/// inferred premise, ending in asserted triples. Deterministic: rules are
/// tried in RuleId order and premises in canonical triple order, restricted
/// to strictly earlier rounds. Throws Error when `t` is not in the closure.
std::vector<Derivation> explain(const Closure& closure, const Triple& t);

}  // namespace oppo::reasoner
