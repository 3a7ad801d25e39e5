#pragma once

// Test-only helpers: random generators and independent oracle
// implementations. The oracles deliberately avoid the library's indexed
// match, semi-naive evaluation and greedy join paths: they re-derive results
// by brute force so the two routes can be compared.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/query.hpp"
#include "oppo/term.hpp"
#include "oppo/vocab.hpp"

namespace oppo::testing {

// ---------------------------------------------------------------------------
// Random data

struct TermPool {
  std::vector<Term> subjects;
  std::vector<Term> predicates;
  std::vector<Term> objects;
};

inline TermPool small_pool(std::uint64_t blank_count = 3) {
  TermPool pool;
  for (int i = 0; i < 8; ++i) {
    pool.subjects.push_back(Term::iri("http://example.org/n" + std::to_string(i)));
  }
  for (std::uint64_t b = 0; b < blank_count; ++b) pool.subjects.push_back(Term::blank(b));
  for (int i = 0; i < 4; ++i) {
    pool.predicates.push_back(Term::iri("http://example.org/p" + std::to_string(i)));
  }
  pool.objects = pool.subjects;
  pool.objects.push_back(Term::str("alpha"));
  pool.objects.push_back(Term::str("beta"));
  pool.objects.push_back(Term::integer(7));
  pool.objects.push_back(Term::integer(42));
  pool.objects.push_back(Term::boolean(true));
  return pool;
}

template <typename Rng>
const Term& pick(const std::vector<Term>& pool, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

template <typename Rng>
Graph random_graph(Rng& rng, const TermPool& pool, std::size_t max_triples) {
  std::uniform_int_distribution<std::size_t> count_dist(0, max_triples);
  Graph g;
  const std::size_t n = count_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    g.insert(Triple(pick(pool.subjects, rng), pick(pool.predicates, rng),
                    pick(pool.objects, rng)));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Rendering helpers

inline std::set<std::string> rendered_set(const Graph& g) {
  std::set<std::string> out;
  for (const Triple& t : g.triples()) out.insert(render(t));
  return out;
}

// ---------------------------------------------------------------------------
// Naive reasoner oracle: full re-evaluation of all six rules over the whole
// graph until nothing changes.

inline Graph naive_closure(const Graph& data, const Graph& schema_graph) {
  const Term type = Term::iri(vocab::rdf_type());
  const Term sco = Term::iri(vocab::rdfs_sub_class_of());
  const Term spo = Term::iri(vocab::rdfs_sub_property_of());
  const Term domain = Term::iri(vocab::rdfs_domain());
  const Term range = Term::iri(vocab::rdfs_range());

  Graph full = merge(data, schema_graph);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Triple> snapshot(full.triples().begin(), full.triples().end());
    std::vector<Triple> derived;
    for (const Triple& a : snapshot) {
      for (const Triple& b : snapshot) {
        // (A sco B), (B sco C) => (A sco C)
        if (a.predicate == sco && b.predicate == sco && a.object == b.subject) {
          derived.emplace_back(a.subject, sco, b.object);
        }
        // (x type A), (A sco B) => (x type B)
        if (a.predicate == type && b.predicate == sco && a.object == b.subject) {
          derived.emplace_back(a.subject, type, b.object);
        }
        // (p spo q), (q spo r) => (p spo r)
        if (a.predicate == spo && b.predicate == spo && a.object == b.subject) {
          derived.emplace_back(a.subject, spo, b.object);
        }
        // (x p y), (p spo q) => (x q y)
        if (b.predicate == spo && b.subject == a.predicate && b.object.is_iri()) {
          derived.emplace_back(a.subject, b.object, a.object);
        }
        // (x p y), (p domain C) => (x type C)
        if (b.predicate == domain && b.subject == a.predicate) {
          derived.emplace_back(a.subject, type, b.object);
        }
        // (x p y), (p range C), y not literal => (y type C)
        if (b.predicate == range && b.subject == a.predicate && !a.object.is_literal()) {
          derived.emplace_back(a.object, type, b.object);
        }
      }
    }
    for (const Triple& t : derived) {
      if (full.insert(t)) changed = true;
    }
  }
  return full;
}

// Random subclass hierarchy over ten classes, plus typed individuals,
// property assertions and schema declarations for them.
template <typename Rng>
std::pair<Graph, Graph> random_reasoner_instance(Rng& rng, std::size_t max_data_triples) {
  const Term type = Term::iri(vocab::rdf_type());
  const Term sco = Term::iri(vocab::rdfs_sub_class_of());
  const Term spo = Term::iri(vocab::rdfs_sub_property_of());
  const Term domain = Term::iri(vocab::rdfs_domain());
  const Term range = Term::iri(vocab::rdfs_range());

  std::vector<Term> classes;
  for (int i = 0; i < 10; ++i) {
    classes.push_back(Term::iri("http://example.org/hier/C" + std::to_string(i)));
  }
  std::vector<Term> properties;
  for (int i = 0; i < 3; ++i) {
    properties.push_back(Term::iri("http://example.org/hier/prop" + std::to_string(i)));
  }
  std::vector<Term> individuals;
  for (int i = 0; i < 8; ++i) {
    individuals.push_back(Term::iri("http://example.org/hier/x" + std::to_string(i)));
  }

  Graph schema;
  std::uniform_int_distribution<int> coin(0, 1);
  // Edges only from lower to higher index keep the hierarchy acyclic.
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) {
        schema.insert(Triple(classes[i], sco, classes[j]));
      }
    }
  }
  if (coin(rng)) schema.insert(Triple(properties[0], spo, properties[1]));
  for (const Term& p : properties) {
    if (coin(rng)) schema.insert(Triple(p, domain, pick(classes, rng)));
    if (coin(rng)) schema.insert(Triple(p, range, pick(classes, rng)));
  }

  Graph data;
  std::uniform_int_distribution<std::size_t> count_dist(0, max_data_triples);
  const std::size_t n = count_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) {
      data.insert(Triple(pick(individuals, rng), type, pick(classes, rng)));
    } else {
      data.insert(
          Triple(pick(individuals, rng), pick(properties, rng), pick(individuals, rng)));
    }
  }
  return {std::move(data), std::move(schema)};
}

// ---------------------------------------------------------------------------
// Query oracle: evaluates the basic graph pattern by plain nested loops over
// every pattern order, asserting that all orders agree.

namespace detail {

using Binding = std::map<std::string, Term>;

inline bool oracle_bind(const query::Pattern& p, const Triple& t, Binding& row) {
  auto one = [&](const query::PatternSlot& slot, const Term& value) {
    if (const Term* c = std::get_if<Term>(&slot)) return *c == value;
    const auto& name = std::get<query::Variable>(slot).name;
    auto [it, inserted] = row.emplace(name, value);
    return inserted || it->second == value;
  };
  return one(p.subject, t.subject) && one(p.predicate, t.predicate) &&
         one(p.object, t.object);
}

inline bool oracle_filter(const query::Filter& f, const Term& value) {
  using query::FilterOp;
  if (const std::string* s = std::get_if<std::string>(&f.constant)) {
    bool equal = value.is_literal() && value.as_literal().datatype() == vocab::xsd_string() &&
                 value.as_literal().lexical() == *s;
    return f.op == FilterOp::Eq ? equal : !equal;
  }
  const std::int64_t constant = std::get<std::int64_t>(f.constant);
  if (!value.is_literal() || value.as_literal().datatype() != vocab::xsd_integer()) {
    return f.op == FilterOp::Ne;
  }
  // Small lexicals only in tests; strtoll is enough here.
  const long long bound = std::stoll(value.as_literal().lexical());
  switch (f.op) {
    case FilterOp::Eq: return bound == constant;
    case FilterOp::Ne: return bound != constant;
    case FilterOp::Lt: return bound < constant;
    case FilterOp::Le: return bound <= constant;
    case FilterOp::Gt: return bound > constant;
    case FilterOp::Ge: return bound >= constant;
  }
  return false;
}

}  // namespace detail

/// Result rows for one fixed pattern order.
inline std::set<std::vector<Term>> oracle_execute_order(
    const query::QueryAst& q, const Graph& g, const std::vector<std::size_t>& order) {
  std::vector<detail::Binding> rows{detail::Binding{}};
  for (std::size_t index : order) {
    const query::Pattern& pattern = q.patterns[index];
    std::vector<detail::Binding> next;
    for (const detail::Binding& row : rows) {
      for (const Triple& t : g.triples()) {
        detail::Binding extended = row;
        if (detail::oracle_bind(pattern, t, extended)) next.push_back(std::move(extended));
      }
    }
    rows = std::move(next);
  }
  std::set<std::vector<Term>> out;
  for (const detail::Binding& row : rows) {
    bool keep = true;
    for (const query::Filter& f : q.filters) {
      auto it = row.find(f.variable);
      if (it == row.end() || !detail::oracle_filter(f, it->second)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    std::vector<Term> projected;
    for (const std::string& name : q.select) projected.push_back(row.at(name));
    out.insert(std::move(projected));
  }
  return out;
}

/// All pattern orders must agree; returns the common result.
inline std::set<std::vector<Term>> oracle_execute_all_orders(const query::QueryAst& q,
                                                             const Graph& g,
                                                             bool* orders_agree = nullptr) {
  std::vector<std::size_t> order(q.patterns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end());
  std::optional<std::set<std::vector<Term>>> reference;
  bool agree = true;
  do {
    auto result = oracle_execute_order(q, g, order);
    if (!reference) {
      reference = std::move(result);
    } else if (result != *reference) {
      agree = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (orders_agree != nullptr) *orders_agree = agree;
  return *reference;
}

inline std::set<std::vector<Term>> table_rows(const query::BindingTable& table) {
  return {table.rows.begin(), table.rows.end()};
}

}  // namespace oppo::testing
