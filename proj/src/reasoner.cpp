#include "oppo/reasoner.hpp"

#include <functional>
#include <set>

#include "oppo/vocab.hpp"

namespace oppo::reasoner {

namespace {

const Term& t_type() {
  static const Term t = Term::iri(vocab::rdf_type());
  return t;
}
const Term& t_sco() {
  static const Term t = Term::iri(vocab::rdfs_sub_class_of());
  return t;
}
const Term& t_spo() {
  static const Term t = Term::iri(vocab::rdfs_sub_property_of());
  return t;
}
const Term& t_domain() {
  static const Term t = Term::iri(vocab::rdfs_domain());
  return t;
}
const Term& t_range() {
  static const Term t = Term::iri(vocab::rdfs_range());
  return t;
}

using Sink = std::function<void(Triple)>;

// Transitivity over a fixed predicate: (a P b), (b P c) => (a P c).
void fire_transitive(const Graph& full, const Triple& d, const Term& pred, const Sink& sink) {
  if (d.predicate != pred) return;
  // d as left premise: (d.s P d.o), (d.o P c)
  for (const Triple& right : full.match({d.object, pred, std::nullopt})) {
    sink(Triple(d.subject, pred, right.object));
  }
  // d as right premise: (a P d.s), (d.s P d.o)
  for (const Triple& left : full.match({std::nullopt, pred, d.subject})) {
    sink(Triple(left.subject, pred, d.object));
  }
}

// (x type A), (A sco B) => (x type B)
void fire_type_inherit(const Graph& full, const Triple& d, const Sink& sink) {
  if (d.predicate == t_type()) {
    for (const Triple& sco : full.match({d.object, t_sco(), std::nullopt})) {
      sink(Triple(d.subject, t_type(), sco.object));
    }
  }
  if (d.predicate == t_sco()) {
    for (const Triple& inst : full.match({std::nullopt, t_type(), d.subject})) {
      sink(Triple(inst.subject, t_type(), d.object));
    }
  }
}

// (x p y), (p spo q) => (x q y)
void fire_prop_inherit(const Graph& full, const Triple& d, const Sink& sink) {
  for (const Triple& spo : full.match({d.predicate, t_spo(), std::nullopt})) {
    if (!spo.object.is_iri()) continue;  // cannot stand in predicate position
    sink(Triple(d.subject, spo.object, d.object));
  }
  if (d.predicate == t_spo() && d.subject.is_iri() && d.object.is_iri()) {
    for (const Triple& use : full.match({std::nullopt, d.subject, std::nullopt})) {
      sink(Triple(use.subject, d.object, use.object));
    }
  }
}

// (x p y), (p domain C) => (x type C)
void fire_dom_type(const Graph& full, const Triple& d, const Sink& sink) {
  for (const Triple& dom : full.match({d.predicate, t_domain(), std::nullopt})) {
    sink(Triple(d.subject, t_type(), dom.object));
  }
  if (d.predicate == t_domain() && d.subject.is_iri()) {
    for (const Triple& use : full.match({std::nullopt, Term(d.subject), std::nullopt})) {
      sink(Triple(use.subject, t_type(), d.object));
    }
  }
}

// (x p y), (p range C), y not a literal => (y type C)
void fire_rng_type(const Graph& full, const Triple& d, const Sink& sink) {
  if (!d.object.is_literal()) {
    for (const Triple& rng : full.match({d.predicate, t_range(), std::nullopt})) {
      sink(Triple(d.object, t_type(), rng.object));
    }
  }
  if (d.predicate == t_range() && d.subject.is_iri()) {
    for (const Triple& use : full.match({std::nullopt, Term(d.subject), std::nullopt})) {
      if (use.object.is_literal()) continue;
      sink(Triple(use.object, t_type(), d.object));
    }
  }
}

}  // namespace

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::SCO_TRANS: return "SCO_TRANS";
    case RuleId::TYPE_INHERIT: return "TYPE_INHERIT";
    case RuleId::SPO_TRANS: return "SPO_TRANS";
    case RuleId::PROP_INHERIT: return "PROP_INHERIT";
    case RuleId::DOM_TYPE: return "DOM_TYPE";
    case RuleId::RNG_TYPE: return "RNG_TYPE";
    case RuleId::DISJOINT_VIOLATION: return "DISJOINT_VIOLATION";
    case RuleId::DATATYPE_VIOLATION: return "DATATYPE_VIOLATION";
  }
  return "?";
}

Closure::Closure(Graph graph, Graph asserted, std::map<Triple, int> rounds)
    : graph_(std::move(graph)), asserted_(std::move(asserted)), rounds_(std::move(rounds)) {}

std::optional<int> Closure::round_of(const Triple& t) const {
  if (asserted_.contains(t)) return 0;
  auto it = rounds_.find(t);
  if (it != rounds_.end()) return it->second;
  return std::nullopt;
}

Closure materialize(const Graph& data, const Graph& schema_graph) {
  Graph full = merge(data, schema_graph);
  Graph asserted = full;
  std::map<Triple, int> rounds;

  std::vector<Triple> delta(full.triples().begin(), full.triples().end());
  int round = 1;
  while (!delta.empty()) {
    std::set<Triple> fresh;
    Sink sink = [&](Triple t) {
      if (!full.contains(t)) fresh.insert(std::move(t));
    };
    for (const Triple& d : delta) {
      fire_transitive(full, d, t_sco(), sink);
      fire_type_inherit(full, d, sink);
      fire_transitive(full, d, t_spo(), sink);
      fire_prop_inherit(full, d, sink);
      fire_dom_type(full, d, sink);
      fire_rng_type(full, d, sink);
    }
    delta.assign(fresh.begin(), fresh.end());
    for (const Triple& t : delta) {
      full.insert(t);
      rounds.emplace(t, round);
    }
    ++round;
  }

  full.freeze();
  asserted.freeze();
  return Closure(std::move(full), std::move(asserted), std::move(rounds));
}

ConsistencyReport check_consistency(const Graph& closure, const Schema& schema) {
  ConsistencyReport report;

  for (const auto& [a, b] : schema.disjoint_pairs()) {
    const Term class_a = Term::iri(a);
    const Term class_b = Term::iri(b);
    for (const Triple& typed_a : closure.match({std::nullopt, t_type(), class_a})) {
      Triple typed_b(typed_a.subject, t_type(), class_b);
      if (!closure.contains(typed_b)) continue;
      report.violations.push_back(Violation{RuleId::DISJOINT_VIOLATION, typed_a.subject,
                                            {typed_a, typed_b}});
    }
  }

  for (const auto& [iri, prop] : schema.properties()) {
    if (prop.kind != PropertyKind::data) continue;
    for (const Triple& use : closure.match({std::nullopt, Term::iri(iri), std::nullopt})) {
      if (!use.object.is_literal()) continue;
      const Literal& value = use.object.as_literal();
      if (!Literal::lexical_valid_for(value.lexical(), prop.range)) {
        report.violations.push_back(Violation{RuleId::DATATYPE_VIOLATION, use.subject, {use}});
      }
    }
  }

  report.consistent = report.violations.empty();
  return report;
}

namespace {

// First rule instantiation (rules in RuleId order, premises in canonical
// order) whose premises all have strictly earlier rounds than `t`.
std::optional<Derivation> find_step(const Closure& closure, const Triple& t) {
  const Graph& g = closure.graph();
  const int t_round = *closure.round_of(t);
  auto earlier = [&](const Triple& premise) {
    auto r = closure.round_of(premise);
    return r.has_value() && *r < t_round;
  };
  auto step = [&](RuleId rule, Triple left, Triple right) {
    return Derivation{t, rule, {std::move(left), std::move(right)}};
  };
  auto transitive_step = [&](RuleId rule, const Term& pred) -> std::optional<Derivation> {
    for (const Triple& left : g.match({t.subject, pred, std::nullopt})) {
      if (left.object.is_literal()) continue;
      Triple right(left.object, pred, t.object);
      if (g.contains(right) && earlier(left) && earlier(right)) {
        return step(rule, left, right);
      }
    }
    return std::nullopt;
  };

  if (t.predicate == t_sco()) {
    if (auto found = transitive_step(RuleId::SCO_TRANS, t_sco())) return found;
  }

  if (t.predicate == t_type()) {
    // TYPE_INHERIT
    for (const Triple& inst : g.match({t.subject, t_type(), std::nullopt})) {
      if (inst.object.is_literal()) continue;
      Triple sco(inst.object, t_sco(), t.object);
      if (g.contains(sco) && earlier(inst) && earlier(sco)) {
        return step(RuleId::TYPE_INHERIT, inst, sco);
      }
    }
  }

  if (t.predicate == t_spo()) {
    if (auto found = transitive_step(RuleId::SPO_TRANS, t_spo())) return found;
  }

  // PROP_INHERIT
  for (const Triple& use : g.match({t.subject, std::nullopt, t.object})) {
    Triple spo(use.predicate, t_spo(), t.predicate);
    if (g.contains(spo) && earlier(use) && earlier(spo)) {
      return step(RuleId::PROP_INHERIT, use, spo);
    }
  }

  if (t.predicate == t_type()) {
    // DOM_TYPE
    for (const Triple& use : g.match({t.subject, std::nullopt, std::nullopt})) {
      Triple dom(use.predicate, t_domain(), t.object);
      if (g.contains(dom) && earlier(use) && earlier(dom)) {
        return step(RuleId::DOM_TYPE, use, dom);
      }
    }
    // RNG_TYPE
    for (const Triple& use : g.match({std::nullopt, std::nullopt, t.subject})) {
      Triple rng(use.predicate, t_range(), t.object);
      if (g.contains(rng) && earlier(use) && earlier(rng)) {
        return step(RuleId::RNG_TYPE, use, rng);
      }
    }
  }

  return std::nullopt;
}

}  // namespace

std::vector<Derivation> explain(const Closure& closure, const Triple& t) {
  if (!closure.graph().contains(t)) {
    throw Error("triple not in closure: " + render(t));
  }
  if (closure.is_asserted(t)) {
    return {Derivation{t, std::nullopt, {}}};
  }

  std::vector<Derivation> chain;
  std::set<Triple> visited;
  std::function<void(const Triple&)> walk = [&](const Triple& u) {
    if (closure.is_asserted(u)) return;
    if (!visited.insert(u).second) return;
    auto found = find_step(closure, u);
    if (!found) {
      throw Error("no derivation found for inferred triple: " + render(u));
    }
    chain.push_back(*found);
    for (const Triple& premise : found->premises) walk(premise);
  };
  walk(t);
  return chain;
}

}  // namespace oppo::reasoner
