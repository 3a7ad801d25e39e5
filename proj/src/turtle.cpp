#include "oppo/turtle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "lexer.hpp"
#include "oppo/vocab.hpp"

namespace oppo::turtle {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

ParseError::ParseError(ParseDiagnostic diagnostic)
    : Error("parse error at " + std::to_string(diagnostic.line) + ":" +
            std::to_string(diagnostic.column) + ": " + diagnostic.message),
      diagnostic_(std::move(diagnostic)) {}

ParseResult parse(std::string_view text) {
  Lexer lexer(text, /*query_mode=*/false);
  Graph graph;
  PrefixMap prefixes;
  std::map<std::string, std::uint64_t> blank_ids;

  // One token of lookahead, needed after a string to probe for '^^'.
  std::optional<Token> pending;
  auto next = [&]() -> Token {
    if (pending) {
      Token t = *pending;
      pending.reset();
      return t;
    }
    return lexer.next();
  };

  auto resolve = [&](const Token& token) -> Iri {
    if (token.kind == TokenKind::IriRef) {
      try {
        return Iri(token.text);
      } catch (const Error& e) {
        lexer.fail(token, e.what());
      }
    }
    auto ns = prefixes.namespace_of(token.text);
    if (!ns) lexer.fail(token, "unknown prefix '" + token.text + ":'");
    if (token.text2.empty()) lexer.fail(token, "missing local name after '" + token.text + ":'");
    return Iri(ns->value() + token.text2);
  };

  auto blank_id = [&](const std::string& label) -> std::uint64_t {
    auto it = blank_ids.find(label);
    if (it != blank_ids.end()) return it->second;
    std::uint64_t id = graph.fresh_blank();
    blank_ids.emplace(label, id);
    return id;
  };

  auto make_literal = [&](const Token& at, const std::string& lexical,
                          const Iri& datatype) -> Term {
    try {
      return Term::literal(Literal(lexical, datatype));
    } catch (const Error& e) {
      lexer.fail(at, e.what());
    }
  };

  // object := iri | blank | literal
  auto object_term = [&](const Token& token) -> Term {
    switch (token.kind) {
      case TokenKind::IriRef:
      case TokenKind::PName:
        return Term::iri(resolve(token));
      case TokenKind::BlankLabel:
        return Term::blank(blank_id(token.text));
      case TokenKind::Integer:
        return make_literal(token, token.text, vocab::xsd_integer());
      case TokenKind::Word:
        if (token.text == "true" || token.text == "false") {
          return make_literal(token, token.text, vocab::xsd_boolean());
        }
        lexer.fail(token, "expected object (IRI, blank node or literal)");
      case TokenKind::String: {
        Token caret = next();
        if (caret.kind != TokenKind::Caret2) {
          pending = caret;
          return make_literal(token, token.text, vocab::xsd_string());
        }
        Token dt = next();
        if (dt.kind != TokenKind::IriRef && dt.kind != TokenKind::PName) {
          lexer.fail(dt, "expected datatype IRI after '^^'");
        }
        return make_literal(dt, token.text, resolve(dt));
      }
      default:
        lexer.fail(token, "expected object (IRI, blank node or literal)");
    }
  };

  Token token = next();
  while (token.kind != TokenKind::Eof) {
    if (token.kind == TokenKind::AtPrefix) {
      // prefixDecl := '@prefix' PNAME ':' IRIREF '.'
      Token label = next();
      if (label.kind != TokenKind::PName || !label.text2.empty()) {
        lexer.fail(label, "expected prefix label followed by ':'");
      }
      Token iri = next();
      if (iri.kind != TokenKind::IriRef) lexer.fail(iri, "expected IRI reference");
      Token dot = next();
      if (dot.kind != TokenKind::Dot) lexer.fail(dot, "expected '.' after prefix declaration");
      try {
        prefixes.add(label.text, Iri(iri.text));
      } catch (const Error& e) {
        lexer.fail(label, e.what());
      }
      token = next();
      continue;
    }

    // tripleStmt := subject predObjList '.'
    Term subject = [&]() -> Term {
      switch (token.kind) {
        case TokenKind::IriRef:
        case TokenKind::PName:
          return Term::iri(resolve(token));
        case TokenKind::BlankLabel:
          return Term::blank(blank_id(token.text));
        default:
          lexer.fail(token, "expected subject (IRI or blank node)");
      }
    }();

    bool statement_done = false;
    while (!statement_done) {
      Token verb = next();
      Term predicate = [&]() -> Term {
        switch (verb.kind) {
          case TokenKind::Word:
            if (verb.text == "a") return Term::iri(vocab::rdf_type());
            lexer.fail(verb, "expected predicate ('a' or IRI)");
          case TokenKind::IriRef:
          case TokenKind::PName:
            return Term::iri(resolve(verb));
          default:
            lexer.fail(verb, "expected predicate ('a' or IRI)");
        }
      }();

      bool object_list_done = false;
      while (!object_list_done) {
        Term object = object_term(next());
        graph.insert(Triple(subject, predicate, object));
        Token sep = next();
        switch (sep.kind) {
          case TokenKind::Comma:
            break;
          case TokenKind::Semicolon:
            object_list_done = true;
            break;
          case TokenKind::Dot:
            object_list_done = true;
            statement_done = true;
            break;
          default:
            lexer.fail(sep, "expected ',', ';' or '.' after object");
        }
      }
    }
    token = next();
  }

  return ParseResult{std::move(graph), std::move(prefixes)};
}

namespace {

// Relabels blank nodes by first occurrence in canonical triple order and
// re-sorts until the numbering is stable, so graphs differing only in blank
// ids (as reparsing introduces) serialize to equal bytes.
std::vector<Triple> canonical_triples(const Graph& graph) {
  std::vector<Triple> triples(graph.triples().begin(), graph.triples().end());
  for (int iteration = 0; iteration < 100; ++iteration) {
    std::map<std::uint64_t, std::uint64_t> remap;
    auto note = [&](const Term& term) {
      if (!term.is_blank()) return;
      std::uint64_t next_id = remap.size();
      remap.emplace(term.blank_id(), next_id);
    };
    for (const Triple& t : triples) {
      note(t.subject);
      note(t.object);
    }
    bool identity = true;
    for (const auto& [old_id, new_id] : remap) {
      if (old_id != new_id) {
        identity = false;
        break;
      }
    }
    if (identity) break;
    auto rename = [&](const Term& term) {
      return term.is_blank() ? Term::blank(remap.at(term.blank_id())) : term;
    };
    for (Triple& t : triples) {
      t = Triple(rename(t.subject), t.predicate, rename(t.object));
    }
    std::sort(triples.begin(), triples.end());
  }
  return triples;
}

std::string render_for_output(const Term& term, const PrefixMap& prefixes, bool verb) {
  if (term.is_iri()) {
    if (verb && term.as_iri() == vocab::rdf_type()) return "a";
    if (auto compacted = prefixes.compact(term.as_iri())) return *compacted;
    return "<" + term.as_iri().value() + ">";
  }
  if (term.is_blank()) return "_:b" + std::to_string(term.blank_id());
  const Literal& lit = term.as_literal();
  if (lit.datatype() == vocab::xsd_integer() || lit.datatype() == vocab::xsd_boolean()) {
    return lit.lexical();
  }
  return "\"" + escape_string_literal(lit.lexical()) + "\"";
}

}  // namespace

std::string serialize(const Graph& graph, const PrefixMap& prefixes) {
  std::string out;

  auto sorted_prefixes = prefixes.entries();
  std::sort(sorted_prefixes.begin(), sorted_prefixes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [label, ns] : sorted_prefixes) {
    out += "@prefix " + label + ": <" + ns.value() + "> .\n";
  }

  std::vector<Triple> triples = canonical_triples(graph);
  if (!sorted_prefixes.empty() && !triples.empty()) out += "\n";

  for (std::size_t i = 0; i < triples.size();) {
    const Term& subject = triples[i].subject;
    out += render_for_output(subject, prefixes, false);
    bool first_verb = true;
    while (i < triples.size() && triples[i].subject == subject) {
      const Term& predicate = triples[i].predicate;
      out += first_verb ? " " : " ;\n  ";
      first_verb = false;
      out += render_for_output(predicate, prefixes, true);
      bool first_object = true;
      while (i < triples.size() && triples[i].subject == subject &&
             triples[i].predicate == predicate) {
        out += first_object ? " " : " , ";
        first_object = false;
        out += render_for_output(triples[i].object, prefixes, false);
        ++i;
      }
    }
    out += " .\n";
  }

  if (out.empty()) out = "\n";
  return out;
}

}  // namespace oppo::turtle
