#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace oppo {

/// Base error type for contract violations across the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An absolute IRI. Equality and ordering are plain string comparison on the
/// fully expanded form; prefixed names must be expanded before an Iri is made.
class Iri {
 public:
  /// Throws Error if the string is empty or contains whitespace.
  explicit Iri(std::string value);

  const std::string& value() const { return value_; }

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

/// A typed literal. Only xsd:string, xsd:integer and xsd:boolean are
/// representable; the lexical form is validated against the datatype at
/// construction (integers must be optionally signed decimal digits,
/// booleans must be exactly "true" or "false").
class Literal {
 public:
  Literal(std::string lexical, Iri datatype);

  /// True when `lexical` satisfies the lexical rules of `datatype`.
  /// Unlike the constructor this never throws; unknown datatypes are invalid.
  static bool lexical_valid_for(std::string_view lexical, const Iri& datatype);

  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }

  auto operator<=>(const Literal&) const = default;

 private:
  std::string lexical_;
  Iri datatype_;
};

struct BlankNode {
  std::uint64_t id = 0;
  auto operator<=>(const BlankNode&) const = default;
};

/// One RDF term: literal, IRI or blank node. The variant order fixes the
/// canonical term ordering (literals, then IRIs, then blank nodes; blanks
/// compare by numeric id) used everywhere deterministic output is promised.
class Term {
 public:
  static Term iri(Iri value);
  static Term iri(std::string value);
  static Term literal(Literal value);
  static Term str(std::string lexical);
  static Term integer(std::int64_t value);
  static Term boolean(bool value);
  static Term blank(std::uint64_t id);

  bool is_iri() const { return std::holds_alternative<Iri>(node_); }
  bool is_literal() const { return std::holds_alternative<Literal>(node_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(node_); }

  /// Accessors throw Error when the term is of a different kind.
  const Iri& as_iri() const;
  const Literal& as_literal() const;
  std::uint64_t blank_id() const;

  auto operator<=>(const Term&) const = default;

 private:
  explicit Term(std::variant<Literal, Iri, BlankNode> node) : node_(std::move(node)) {}

  std::variant<Literal, Iri, BlankNode> node_;
};

/// A single fact. Construction enforces the positional rules: the predicate
/// must be an IRI and the subject must not be a literal.
struct Triple {
  Triple(Term s, Term p, Term o);

  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

/// N-Triples-style rendering, used for stable output and set comparisons.
/// Blank nodes render as _:b<id>; xsd:string literals render without the
/// datatype suffix.
std::string render(const Term& term);
std::string render(const Triple& triple);

/// Escapes backslash, quote, newline, carriage return and tab.
std::string escape_string_literal(std::string_view raw);

}  // namespace oppo
