#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extrukit/errors.hpp"
#include "extrukit/graph.hpp"

namespace extrukit {

struct Variable {
  std::string name;  // without the leading '?'
  bool operator==(const Variable&) const = default;
  bool operator<(const Variable& o) const { return name < o.name; }
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

// Filter expression tree. DateTimeCast is the xsd:dateTime(...) function.
struct Expr {
  enum class Op { Var, Const, DateTimeCast, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
  Op op = Op::Const;
  Variable var;
  Term constant;
  std::shared_ptr<Expr> lhs;
  std::shared_ptr<Expr> rhs;
};
using ExprPtr = std::shared_ptr<Expr>;

struct GroupPattern;

struct UnionPattern {
  std::vector<GroupPattern> branches;  // two or more
};

struct FilterPattern {
  ExprPtr expr;
};

using GroupElement = std::variant<TriplePattern, UnionPattern, FilterPattern>;

struct GroupPattern {
  std::vector<GroupElement> elements;
};

struct OrderKey {
  ExprPtr expr;
  bool descending = false;
};

struct Query {
  enum class Form { Select, Ask };
  Form form = Form::Select;
  bool distinct = false;
  std::vector<Variable> projection;  // empty means SELECT *
  GroupPattern where;
  std::vector<OrderKey> order_by;
};

// Parses the SELECT/ASK subset: PREFIX, DISTINCT, basic graph patterns
// with ';' ',' and 'a', UNION between groups, FILTER with comparisons,
// && and ||, the xsd:dateTime cast, and ORDER BY [ASC|DESC]. Throws
// ParseError; a group without a triple pattern is an error.
Query parse_query(std::string_view text);

struct QueryResult {
  bool is_ask = false;
  bool ask_value = false;
  std::vector<std::string> variables;
  std::vector<std::vector<std::optional<Term>>> rows;
};

// Evaluates against g as-is (run the reasoner first if entailments should
// count). Evaluation order is deterministic: patterns extend solutions
// in text order, UNION concatenates branch results, filters apply at
// group end, and a filter type error makes the row false.
QueryResult evaluate(const Query& q, const Graph& g);

// Canonical term spelling used in TSV output and expectation files:
// <iri>, _:label, "lex", "lex"@lang or "lex"^^<datatype>.
std::string result_term_text(const Term& t);

std::string format_tsv(const QueryResult& r);
std::string format_json(const QueryResult& r);

}  // namespace extrukit
