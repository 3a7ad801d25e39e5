#include "oppo/query.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "json.hpp"
#include "lexer.hpp"
#include "oppo/vocab.hpp"

namespace oppo::query {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;
using turtle::ParseDiagnostic;
using turtle::ParseError;

namespace {

bool keyword_is(const Token& token, std::string_view keyword) {
  if (token.kind != TokenKind::Word || token.text.size() != keyword.size()) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(token.text[i])) != keyword[i]) return false;
  }
  return true;
}

FilterOp parse_op(const Lexer& lexer, const Token& token) {
  if (token.kind != TokenKind::Op) {
    throw ParseError(ParseDiagnostic{token.line, token.column, "expected comparison operator"});
  }
  if (token.text == "=") return FilterOp::Eq;
  if (token.text == "!=") return FilterOp::Ne;
  if (token.text == "<") return FilterOp::Lt;
  if (token.text == "<=") return FilterOp::Le;
  if (token.text == ">") return FilterOp::Gt;
  if (token.text == ">=") return FilterOp::Ge;
  (void)lexer;
  throw ParseError(ParseDiagnostic{token.line, token.column,
                                   "unknown operator '" + token.text + "'"});
}

}  // namespace

QueryAst parse_query(std::string_view text, const PrefixMap& prefixes, bool strict) {
  Lexer lexer(text, /*query_mode=*/true);
  QueryAst ast;

  auto resolve = [&](const Token& token) -> Term {
    if (token.kind == TokenKind::IriRef) {
      try {
        return Term::iri(Iri(token.text));
      } catch (const Error& e) {
        lexer.fail(token, e.what());
      }
    }
    auto ns = prefixes.namespace_of(token.text);
    if (!ns) lexer.fail(token, "unknown prefix '" + token.text + ":'");
    if (token.text2.empty()) lexer.fail(token, "missing local name after '" + token.text + ":'");
    return Term::iri(Iri(ns->value() + token.text2));
  };

  Token token = lexer.next();
  if (!keyword_is(token, "SELECT")) lexer.fail(token, "expected SELECT");

  token = lexer.next();
  while (token.kind == TokenKind::Var) {
    ast.select.push_back(token.text);
    token = lexer.next();
  }
  if (ast.select.empty()) lexer.fail(token, "expected at least one ?variable after SELECT");
  if (!keyword_is(token, "WHERE")) lexer.fail(token, "expected WHERE");
  token = lexer.next();
  if (token.kind != TokenKind::LBrace) lexer.fail(token, "expected '{'");

  // (triplePattern '.')+
  auto slot = [&](const Token& t, bool predicate_slot, bool object_slot) -> PatternSlot {
    switch (t.kind) {
      case TokenKind::Var:
        return Variable{t.text};
      case TokenKind::IriRef:
      case TokenKind::PName:
        return resolve(t);
      case TokenKind::Word:
        if (predicate_slot && t.text == "a") return Term::iri(vocab::rdf_type());
        if (object_slot && (t.text == "true" || t.text == "false")) {
          return Term::boolean(t.text == "true");
        }
        lexer.fail(t, "unexpected name '" + t.text + "' in pattern");
      case TokenKind::Integer:
        if (object_slot) {
          try {
            return Term::literal(Literal(t.text, vocab::xsd_integer()));
          } catch (const Error& e) {
            lexer.fail(t, e.what());
          }
        }
        lexer.fail(t, "integer literal only allowed in object position");
      case TokenKind::String:
        if (object_slot) return Term::str(t.text);
        lexer.fail(t, "string literal only allowed in object position");
      default:
        lexer.fail(t, "expected variable or term in pattern");
    }
  };

  token = lexer.next();
  while (true) {
    if (token.kind == TokenKind::RBrace || keyword_is(token, "FILTER")) break;
    Pattern pattern{slot(token, false, false), slot(lexer.next(), true, false),
                    slot(lexer.next(), false, true)};
    if (const Term* p = std::get_if<Term>(&pattern.predicate); p && !p->is_iri()) {
      lexer.fail(token, "pattern predicate must be an IRI or variable");
    }
    ast.patterns.push_back(std::move(pattern));
    Token dot = lexer.next();
    if (dot.kind != TokenKind::Dot) lexer.fail(dot, "expected '.' after triple pattern");
    token = lexer.next();
  }
  if (ast.patterns.empty()) lexer.fail(token, "expected at least one triple pattern");

  // ('FILTER' '(' var OP const ')')*
  while (keyword_is(token, "FILTER")) {
    Token open = lexer.next();
    if (open.kind != TokenKind::LParen) lexer.fail(open, "expected '(' after FILTER");
    Token var = lexer.next();
    if (var.kind != TokenKind::Var) lexer.fail(var, "expected ?variable in FILTER");
    Token op_token = lexer.next();
    FilterOp op = parse_op(lexer, op_token);
    Token constant = lexer.next();
    Filter filter{var.text, op, std::int64_t{0}};
    if (constant.kind == TokenKind::Integer) {
      try {
        filter.constant = std::int64_t{std::stoll(constant.text)};
      } catch (const std::exception&) {
        lexer.fail(constant, "integer constant out of range");
      }
    } else if (constant.kind == TokenKind::String) {
      if (op != FilterOp::Eq && op != FilterOp::Ne) {
        lexer.fail(constant, "ordering comparison requires an integer constant");
      }
      filter.constant = constant.text;
    } else {
      lexer.fail(constant, "expected integer or string constant in FILTER");
    }
    Token close = lexer.next();
    if (close.kind != TokenKind::RParen) lexer.fail(close, "expected ')'");
    ast.filters.push_back(std::move(filter));
    token = lexer.next();
  }

  if (token.kind != TokenKind::RBrace) lexer.fail(token, "expected '}'");
  Token eof = lexer.next();
  if (eof.kind != TokenKind::Eof) lexer.fail(eof, "unexpected input after '}'");

  // Static checks: selected and filtered variables must occur in a pattern.
  std::map<std::string, int> occurrences;
  for (const Pattern& p : ast.patterns) {
    for (const PatternSlot* s : {&p.subject, &p.predicate, &p.object}) {
      if (const Variable* v = std::get_if<Variable>(s)) ++occurrences[v->name];
    }
  }
  for (const std::string& name : ast.select) {
    if (!occurrences.contains(name)) {
      throw ParseError(ParseDiagnostic{1, 1, "selected variable ?" + name +
                                                 " does not occur in any pattern"});
    }
  }
  std::set<std::string> filtered;
  for (const Filter& f : ast.filters) {
    filtered.insert(f.variable);
    if (!occurrences.contains(f.variable)) {
      throw ParseError(ParseDiagnostic{1, 1, "filtered variable ?" + f.variable +
                                                 " does not occur in any pattern"});
    }
  }
  // Lint: a variable used exactly once and never selected or filtered is
  // usually a typo.
  std::set<std::string> selected(ast.select.begin(), ast.select.end());
  for (const auto& [name, count] : occurrences) {
    if (count == 1 && !selected.contains(name) && !filtered.contains(name)) {
      ast.warnings.push_back("variable ?" + name +
                             " occurs once and is never selected or filtered");
    }
  }
  if (strict && !ast.warnings.empty()) {
    throw ParseError(ParseDiagnostic{1, 1, ast.warnings.front()});
  }

  return ast;
}

namespace {

using Binding = std::map<std::string, Term>;

// Sign-aware comparison of xsd:integer lexical forms of any length.
int compare_integer_lexicals(std::string_view a, std::string_view b) {
  auto normalize = [](std::string_view s) -> std::pair<bool, std::string_view> {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    if (s == "0") negative = false;
    return {negative, s};
  };
  auto [a_neg, a_digits] = normalize(a);
  auto [b_neg, b_digits] = normalize(b);
  if (a_neg != b_neg) return a_neg ? -1 : 1;
  int magnitude;
  if (a_digits.size() != b_digits.size()) {
    magnitude = a_digits.size() < b_digits.size() ? -1 : 1;
  } else {
    magnitude = a_digits.compare(b_digits) < 0 ? -1 : (a_digits == b_digits ? 0 : 1);
  }
  return a_neg ? -magnitude : magnitude;
}

bool filter_passes(const Filter& filter, const Term& value) {
  if (const std::string* s = std::get_if<std::string>(&filter.constant)) {
    bool equal = value.is_literal() && value.as_literal().datatype() == vocab::xsd_string() &&
                 value.as_literal().lexical() == *s;
    return filter.op == FilterOp::Eq ? equal : !equal;
  }
  const std::int64_t constant = std::get<std::int64_t>(filter.constant);
  const bool is_integer =
      value.is_literal() && value.as_literal().datatype() == vocab::xsd_integer();
  if (!is_integer) {
    // Only disequality can hold for a non-integer binding.
    return filter.op == FilterOp::Ne;
  }
  const int cmp =
      compare_integer_lexicals(value.as_literal().lexical(), std::to_string(constant));
  switch (filter.op) {
    case FilterOp::Eq: return cmp == 0;
    case FilterOp::Ne: return cmp != 0;
    case FilterOp::Lt: return cmp < 0;
    case FilterOp::Le: return cmp <= 0;
    case FilterOp::Gt: return cmp > 0;
    case FilterOp::Ge: return cmp >= 0;
  }
  return false;
}

std::optional<std::string> slot_variable(const PatternSlot& slot) {
  if (const Variable* v = std::get_if<Variable>(&slot)) return v->name;
  return std::nullopt;
}

int bound_slot_count(const Pattern& pattern, const std::set<std::string>& bound) {
  int count = 0;
  for (const PatternSlot* slot : {&pattern.subject, &pattern.predicate, &pattern.object}) {
    if (auto var = slot_variable(*slot)) {
      if (bound.contains(*var)) ++count;
    } else {
      ++count;
    }
  }
  return count;
}

// Cardinality of the pattern with only its concrete terms bound; a cheap,
// binding-independent selectivity estimate.
std::size_t concrete_cardinality(const Pattern& pattern, const Graph& g) {
  TriplePattern probe;
  if (const Term* t = std::get_if<Term>(&pattern.subject)) probe.subject = *t;
  if (const Term* t = std::get_if<Term>(&pattern.predicate)) probe.predicate = *t;
  if (const Term* t = std::get_if<Term>(&pattern.object)) probe.object = *t;
  return g.match_count(probe);
}

std::vector<Binding> join_pattern(const Pattern& pattern, const Graph& g,
                                  const std::vector<Binding>& rows) {
  std::vector<Binding> out;
  for (const Binding& row : rows) {
    TriplePattern probe;
    auto fill = [&](const PatternSlot& slot) -> std::optional<Term> {
      if (const Term* t = std::get_if<Term>(&slot)) return *t;
      auto it = row.find(std::get<Variable>(slot).name);
      if (it != row.end()) return it->second;
      return std::nullopt;
    };
    probe.subject = fill(pattern.subject);
    probe.predicate = fill(pattern.predicate);
    probe.object = fill(pattern.object);
    for (const Triple& t : g.match(probe)) {
      Binding extended = row;
      bool consistent = true;
      auto bind = [&](const PatternSlot& slot, const Term& value) {
        auto var = slot_variable(slot);
        if (!var) return;
        auto [it, inserted] = extended.emplace(*var, value);
        if (!inserted && it->second != value) consistent = false;
      };
      bind(pattern.subject, t.subject);
      bind(pattern.predicate, t.predicate);
      bind(pattern.object, t.object);
      if (consistent) out.push_back(std::move(extended));
    }
  }
  return out;
}

}  // namespace

BindingTable execute(const QueryAst& q, const Graph& g, const ExecOptions& options) {
  std::vector<Binding> rows{Binding{}};
  std::vector<const Pattern*> remaining;
  remaining.reserve(q.patterns.size());
  for (const Pattern& p : q.patterns) remaining.push_back(&p);

  std::set<std::string> bound;
  std::set<std::size_t> applied;  // filter indexes already evaluated

  auto apply_filters = [&](bool force) {
    for (std::size_t i = 0; i < q.filters.size(); ++i) {
      if (applied.contains(i)) continue;
      const Filter& f = q.filters[i];
      if (!force && !bound.contains(f.variable)) continue;
      applied.insert(i);
      std::vector<Binding> kept;
      for (Binding& row : rows) {
        auto it = row.find(f.variable);
        if (it != row.end() && filter_passes(f, it->second)) kept.push_back(std::move(row));
      }
      rows = std::move(kept);
    }
  };

  while (!remaining.empty()) {
    // Greedy order: most bound slots first, then fewest candidate triples.
    std::size_t best = 0;
    int best_bound = -1;
    std::size_t best_cardinality = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      int b = bound_slot_count(*remaining[i], bound);
      std::size_t cardinality = concrete_cardinality(*remaining[i], g);
      if (b > best_bound || (b == best_bound && cardinality < best_cardinality)) {
        best = i;
        best_bound = b;
        best_cardinality = cardinality;
      }
    }
    const Pattern* pattern = remaining[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    rows = join_pattern(*pattern, g, rows);
    for (const PatternSlot* slot : {&pattern->subject, &pattern->predicate, &pattern->object}) {
      if (auto var = slot_variable(*slot)) bound.insert(*var);
    }
    if (options.filter_pushdown) apply_filters(false);
  }
  apply_filters(true);

  BindingTable table;
  table.header = q.select;
  std::set<std::vector<Term>> projected;
  for (const Binding& row : rows) {
    std::vector<Term> out;
    out.reserve(q.select.size());
    bool complete = true;
    for (const std::string& name : q.select) {
      auto it = row.find(name);
      if (it == row.end()) {
        complete = false;
        break;
      }
      out.push_back(it->second);
    }
    if (complete) projected.insert(std::move(out));
  }
  table.rows.assign(projected.begin(), projected.end());
  return table;
}

std::string_view cq_name(CqId id) {
  switch (id) {
    case CqId::CQ1_STORAGE_LOCATION: return "CQ1_STORAGE_LOCATION";
    case CqId::CQ2_MAX_12_MONTHS: return "CQ2_MAX_12_MONTHS";
    case CqId::CQ3_SECURITY_BY_DATATYPE: return "CQ3_SECURITY_BY_DATATYPE";
  }
  return "?";
}

std::optional<CqId> parse_cq_id(std::string_view text) {
  std::string upper;
  upper.reserve(text.size());
  for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "1" || upper == "CQ1" || upper == "CQ1_STORAGE_LOCATION") {
    return CqId::CQ1_STORAGE_LOCATION;
  }
  if (upper == "2" || upper == "CQ2" || upper == "CQ2_MAX_12_MONTHS") {
    return CqId::CQ2_MAX_12_MONTHS;
  }
  if (upper == "3" || upper == "CQ3" || upper == "CQ3_SECURITY_BY_DATATYPE") {
    return CqId::CQ3_SECURITY_BY_DATATYPE;
  }
  return std::nullopt;
}

namespace {

// These strings are byte-identical to the files under data/queries/.
constexpr std::string_view kCq1Text =
    R"(SELECT ?data ?region ?facility WHERE {
  ?practice a oppo:DataStorageLocationPractice .
  ?practice oppo:actsOn ?data .
  ?practice oppo:hasStorageLocation ?region .
  ?practice oppo:hasStorageEntity ?facility .
}
)";

constexpr std::string_view kCq2Text =
    R"(SELECT ?d WHERE { ?p oppo:actsOn ?d . ?p oppo:hasMaxDurationMonths ?m . FILTER(?m <= 12) }
)";

constexpr std::string_view kCq3Text =
    R"(SELECT ?mechanism WHERE {
  ?mechanism oppo:appliesTo ?data .
  ?data a oppo:BiometricPersonalData .
}
)";

}  // namespace

std::string_view bundled_cq_text(CqId id) {
  switch (id) {
    case CqId::CQ1_STORAGE_LOCATION: return kCq1Text;
    case CqId::CQ2_MAX_12_MONTHS: return kCq2Text;
    case CqId::CQ3_SECURITY_BY_DATATYPE: return kCq3Text;
  }
  throw Error("unknown competency question id");
}

BindingTable run_cq(CqId id, const Graph& g, const PrefixMap& prefixes,
                    const std::optional<Iri>& data_class) {
  QueryAst ast = parse_query(bundled_cq_text(id), prefixes);
  if (id == CqId::CQ3_SECURITY_BY_DATATYPE && data_class) {
    auto default_class = prefixes.expand("oppo:BiometricPersonalData");
    if (!default_class) throw Error("prefix map lacks the oppo: namespace");
    const Term from = Term::iri(*default_class);
    const Term to = Term::iri(*data_class);
    for (Pattern& pattern : ast.patterns) {
      if (const Term* t = std::get_if<Term>(&pattern.object); t && *t == from) {
        pattern.object = to;
      }
    }
  }
  return execute(ast, g);
}

std::string to_text(const BindingTable& table) {
  std::vector<std::string> headers;
  headers.reserve(table.header.size());
  for (const std::string& name : table.header) headers.push_back("?" + name);

  std::vector<std::size_t> widths;
  widths.reserve(headers.size());
  for (const std::string& h : headers) widths.push_back(h.size());
  std::vector<std::vector<std::string>> rendered;
  rendered.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      cells.push_back(render(row[i]));
      widths[i] = std::max(widths[i], cells.back().size());
    }
    rendered.push_back(std::move(cells));
  }

  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(widths[i] - cells[i].size(), ' ');
    }
    out += "\n";
    return out;
  };

  std::string out = line(headers);
  std::size_t total = 0;
  for (std::size_t i = 0; i < widths.size(); ++i) total += widths[i] + (i == 0 ? 0 : 2);
  out += std::string(total, '-') + "\n";
  for (const auto& cells : rendered) out += line(cells);
  return out;
}

std::string to_json(const BindingTable& table) {
  nlohmann::ordered_json doc;
  doc["header"] = table.header;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Term& term : row) {
      nlohmann::ordered_json cell;
      if (term.is_iri()) {
        cell["kind"] = "iri";
        cell["value"] = term.as_iri().value();
      } else if (term.is_blank()) {
        cell["kind"] = "blank";
        cell["id"] = term.blank_id();
      } else {
        cell["kind"] = "literal";
        cell["value"] = term.as_literal().lexical();
        cell["datatype"] = term.as_literal().datatype().value();
      }
      cells.push_back(std::move(cell));
    }
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace oppo::query
