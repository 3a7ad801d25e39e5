#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "oppo/term.hpp"

namespace oppo {

/// Match pattern; an empty slot is a wildcard.
struct TriplePattern {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;
};

bool matches(const TriplePattern& pattern, const Triple& triple);

/// In-memory set of triples with positional indexes on (S), (P), (O), (S,P)
/// and (P,O). Insertion keeps set semantics; iteration and match results are
/// in canonical term order. A graph can be frozen, after which any mutation
/// throws; frozen graphs are safe to share for concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Returns true iff the triple was absent. Throws Error on a frozen graph.
  bool insert(Triple t);

  bool contains(const Triple& t) const { return triples_.contains(t); }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  /// Triples unifying with the pattern, sorted canonically. Picks the index
  /// with the most bound slots and filters the remainder.
  std::vector<Triple> match(const TriplePattern& pattern) const;

  /// Number of triples the pattern would match, without materializing them.
  std::size_t match_count(const TriplePattern& pattern) const;

  const std::set<Triple>& triples() const { return triples_; }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  /// First blank-node id not used by this graph; merge renames the
  /// right-hand graph's blanks past this watermark.
  std::uint64_t blank_watermark() const { return blank_watermark_; }
  std::uint64_t fresh_blank();

  /// Verifies that every index entry corresponds exactly to the triple set.
  bool audit_indexes() const;

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  bool frozen_ = false;
  std::uint64_t blank_watermark_ = 0;
  std::set<Triple> triples_;
  std::map<Term, std::set<Triple>> idx_s_;
  std::map<Term, std::set<Triple>> idx_p_;
  std::map<Term, std::set<Triple>> idx_o_;
  std::map<std::pair<Term, Term>, std::set<Triple>> idx_sp_;
  std::map<std::pair<Term, Term>, std::set<Triple>> idx_po_;
};

/// Set union; blank nodes of `h` are renamed past `g`'s watermark so the two
/// graphs' blank scopes never collide.
Graph merge(const Graph& g, const Graph& h);

}  // namespace oppo
