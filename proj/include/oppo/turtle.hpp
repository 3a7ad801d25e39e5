#pragma once

#include <string>
#include <string_view>

#include "oppo/graph.hpp"
#include "oppo/prefix.hpp"
#include "oppo/term.hpp"

namespace oppo::turtle {

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diagnostic);
  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

struct ParseResult {
  Graph graph;
  PrefixMap prefixes;
};

/// Parses the Turtle subset:
///
///   doc        := (prefixDecl | tripleStmt)*
///   prefixDecl := '@prefix' PNAME ':' IRIREF '.'
///   tripleStmt := subject predObjList '.'
///   predObjList:= verb objectList (';' verb objectList)*
///   objectList := object (',' object)*
///   verb       := 'a' | iri      subject := iri | blank
///   object     := iri | blank | literal
///   iri        := IRIREF | PNAME ':' localName      blank := '_:' name
///   literal    := STRING ('^^' iri)? | INTEGER | 'true' | 'false'
///
/// '#' comments run to end of line; '\n' and '\r\n' are both accepted.
/// Untyped strings are xsd:string, bare integers xsd:integer. The first
/// syntax error aborts with a ParseError carrying line and column.
ParseResult parse(std::string_view text);

/// Canonical serialization: prefixes sorted by label, subjects sorted, blank
/// nodes relabeled to a canonical numbering, predicate/object lists grouped
/// with ';' and ',', rdf:type written as 'a', integers and booleans unquoted.
/// Output is a pure function of the triple set (insertion order never shows)
/// and a fixed point of parse-then-serialize.
std::string serialize(const Graph& graph, const PrefixMap& prefixes);

}  // namespace oppo::turtle
