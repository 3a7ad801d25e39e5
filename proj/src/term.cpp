#include "oppo/term.hpp"

#include <cctype>

#include "oppo/vocab.hpp"

namespace oppo {

namespace {

bool integer_lexical(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw Error("IRI must not be empty");
  for (char c : value_) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw Error("IRI must not contain whitespace: <" + value_ + ">");
    }
  }
}

bool Literal::lexical_valid_for(std::string_view lexical, const Iri& datatype) {
  if (datatype == vocab::xsd_string()) return true;
  if (datatype == vocab::xsd_integer()) return integer_lexical(lexical);
  if (datatype == vocab::xsd_boolean()) return lexical == "true" || lexical == "false";
  return false;
}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (datatype_ != vocab::xsd_string() && datatype_ != vocab::xsd_integer() &&
      datatype_ != vocab::xsd_boolean()) {
    throw Error("unsupported literal datatype <" + datatype_.value() + ">");
  }
  if (!lexical_valid_for(lexical_, datatype_)) {
    throw Error("invalid lexical form \"" + lexical_ + "\" for <" + datatype_.value() + ">");
  }
}

Term Term::iri(Iri value) { return Term(std::variant<Literal, Iri, BlankNode>(std::move(value))); }

Term Term::iri(std::string value) { return Term::iri(Iri(std::move(value))); }

Term Term::literal(Literal value) {
  return Term(std::variant<Literal, Iri, BlankNode>(std::move(value)));
}

Term Term::str(std::string lexical) {
  return Term::literal(Literal(std::move(lexical), vocab::xsd_string()));
}

Term Term::integer(std::int64_t value) {
  return Term::literal(Literal(std::to_string(value), vocab::xsd_integer()));
}

Term Term::boolean(bool value) {
  return Term::literal(Literal(value ? "true" : "false", vocab::xsd_boolean()));
}

Term Term::blank(std::uint64_t id) {
  return Term(std::variant<Literal, Iri, BlankNode>(BlankNode{id}));
}

const Iri& Term::as_iri() const {
  if (const auto* v = std::get_if<Iri>(&node_)) return *v;
  throw Error("term is not an IRI: " + render(*this));
}

const Literal& Term::as_literal() const {
  if (const auto* v = std::get_if<Literal>(&node_)) return *v;
  throw Error("term is not a literal: " + render(*this));
}

std::uint64_t Term::blank_id() const {
  if (const auto* v = std::get_if<BlankNode>(&node_)) return v->id;
  throw Error("term is not a blank node: " + render(*this));
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) {
    throw Error("literal in subject position: " + render(subject));
  }
  if (!predicate.is_iri()) {
    throw Error("predicate must be an IRI: " + render(predicate));
  }
}

std::string escape_string_literal(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render(const Term& term) {
  if (term.is_iri()) return "<" + term.as_iri().value() + ">";
  if (term.is_blank()) return "_:b" + std::to_string(term.blank_id());
  const Literal& lit = term.as_literal();
  std::string out = "\"" + escape_string_literal(lit.lexical()) + "\"";
  if (lit.datatype() != vocab::xsd_string()) {
    out += "^^<" + lit.datatype().value() + ">";
  }
  return out;
}

std::string render(const Triple& triple) {
  return render(triple.subject) + " " + render(triple.predicate) + " " +
         render(triple.object) + " .";
}

}  // namespace oppo
