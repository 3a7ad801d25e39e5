#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/prefix.hpp"
#include "oppo/term.hpp"
#include "oppo/turtle.hpp"

namespace oppo::query {

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

using PatternSlot = std::variant<Variable, Term>;

struct Pattern {
  PatternSlot subject;
  PatternSlot predicate;
  PatternSlot object;
};

enum class FilterOp { Eq, Ne, Lt, Le, Gt, Ge };

/// Comparison of a variable against an integer or string constant. Ordering
/// operators take integer constants only and hold just when the variable is
/// bound to an xsd:integer literal; integer comparison is exact on the
/// lexical forms (no overflow).
struct Filter {
  std::string variable;
  FilterOp op = FilterOp::Eq;
  std::variant<std::int64_t, std::string> constant;
};

struct QueryAst {
  std::vector<std::string> select;
  std::vector<Pattern> patterns;
  std::vector<Filter> filters;
  /// Lint notes (currently: pattern variables that occur exactly once and are
  /// never selected or filtered). Promoted to errors under strict parsing.
  std::vector<std::string> warnings;
};

/// Grammar:
///   'SELECT' var+ 'WHERE' '{' (triplePattern '.')+ ('FILTER' '(' var OP const ')')* '}'
/// Keywords are case-insensitive, variables are '?name', terms follow the
/// Turtle subset, 'a' stands for rdf:type in the predicate slot, '#' starts
/// a comment. Prefixed names resolve against `prefixes`.
QueryAst parse_query(std::string_view text, const PrefixMap& prefixes,
                     bool strict = false);

struct BindingTable {
  std::vector<std::string> header;
  std::vector<std::vector<Term>> rows;  // deduplicated, canonically sorted

  bool operator==(const BindingTable&) const = default;
};

struct ExecOptions {
  /// Apply filters as soon as their variable is bound instead of after the
  /// full join. Never changes results; exposed so tests can compare paths.
  bool filter_pushdown = true;
};

/// Set-semantics join of all patterns with filters applied. Join order is
/// greedy by bound-slot count then index cardinality; results are independent
/// of the order chosen.
BindingTable execute(const QueryAst& q, const Graph& g, const ExecOptions& options = {});

/// Bundled competency questions.
enum class CqId {
  CQ1_STORAGE_LOCATION,    // where (region / facility) data is stored
  CQ2_MAX_12_MONTHS,       // data retained for at most twelve months
  CQ3_SECURITY_BY_DATATYPE,  // mechanisms applied to a given data class
};

std::string_view cq_name(CqId id);

/// Accepts "CQ1".."CQ3", "1".."3" and the full enum names; nullopt otherwise.
std::optional<CqId> parse_cq_id(std::string_view text);

/// The query text as shipped in data/queries/*.rq, byte for byte.
std::string_view bundled_cq_text(CqId id);

/// Parses and executes a bundled question against `g`. CQ3 is parameterized
/// by a data class: when `data_class` is set, it replaces the default class
/// (oppo:BiometricPersonalData) in the rdf:type pattern.
BindingTable run_cq(CqId id, const Graph& g, const PrefixMap& prefixes,
                    const std::optional<Iri>& data_class = {});

/// Aligned-column text rendering; one header line, one rule line, one line
/// per row, trailing newline.
std::string to_text(const BindingTable& table);

/// {"header": [...], "rows": [[{"kind": ..., "value": ...}, ...], ...]}
std::string to_json(const BindingTable& table);

}  // namespace oppo::query
