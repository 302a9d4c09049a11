#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "extrukit/datetime.hpp"
#include "extrukit/inference.hpp"
#include "extrukit/kb.hpp"
#include "extrukit/query.hpp"
#include "extrukit/turtle.hpp"
#include "json.hpp"

using namespace extrukit;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string query_text(const std::string& name) {
  return read_file(kb::default_fixtures_dir() / "cq" / name);
}

const Graph& materialized_kb() {
  static const Graph g = materialize(kb::load_all());
  return g;
}

int pattern_count(const GroupPattern& g) {
  int n = 0;
  for (const auto& el : g.elements) {
    if (std::holds_alternative<TriplePattern>(el)) ++n;
  }
  return n;
}

const std::string kInst = "http://bdi.si.ehu.es/bdi/ontologies/ExtruOnt/Extruder01#";

}  // namespace

TEST_CASE("the part-membership ask query parses to two patterns") {
  Query q = parse_query(query_text("CQ1.4.rq"));
  CHECK(q.form == Query::Form::Ask);
  CHECK(pattern_count(q.where) == 2);
  CHECK(q.projection.empty());
}

TEST_CASE("the overlap query parses to a distinct select over a two-branch union") {
  Query q = parse_query(query_text("CQ2.2.rq"));
  CHECK(q.form == Query::Form::Select);
  CHECK(q.distinct);
  REQUIRE(q.where.elements.size() == 1);
  const auto* u = std::get_if<UnionPattern>(&q.where.elements[0]);
  REQUIRE(u != nullptr);
  CHECK(u->branches.size() == 2);
  CHECK(pattern_count(u->branches[0]) == 1);
  CHECK(pattern_count(u->branches[1]) == 1);
}

TEST_CASE("groups need at least one triple pattern") {
  CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { }"), ParseError);
  CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { FILTER(?x > 1) }"), ParseError);
}

TEST_CASE("keywords are case-insensitive") {
  Query q = parse_query("select distinct ?x where { ?x a <urn:C> . } order by desc(?x)");
  CHECK(q.form == Query::Form::Select);
  CHECK(q.distinct);
  REQUIRE(q.order_by.size() == 1);
  CHECK(q.order_by[0].descending);
}

TEST_CASE("ask queries answer against the materialized knowledge base") {
  Query q = parse_query(query_text("CQ1.4.rq"));
  QueryResult with = evaluate(q, materialized_kb());
  CHECK(with.is_ask);
  CHECK(with.ask_value);
  QueryResult without = evaluate(q, kb::load_all());
  CHECK_FALSE(without.ask_value);  // the subproperty step is an entailment
}

TEST_CASE("the overlap query finds exactly the screw and the sensor") {
  Query q = parse_query(query_text("CQ2.2.rq"));
  QueryResult r = evaluate(q, materialized_kb());
  REQUIRE(r.variables == std::vector<std::string>{"component"});
  std::set<std::string> got;
  for (const auto& row : r.rows) {
    REQUIRE(row.size() == 1);
    REQUIRE(row[0].has_value());
    got.insert(result_term_text(*row[0]));
  }
  CHECK(got == std::set<std::string>{"<" + kInst + "SCR01>", "<" + kInst + "TSEN01>"});
}

TEST_CASE("the torque query returns the full measure row") {
  Query q = parse_query(query_text("CQ3.3.rq"));
  QueryResult r = evaluate(q, materialized_kb());
  REQUIRE(r.rows.size() == 1);
  REQUIRE(r.rows[0].size() == 4);
  CHECK(result_term_text(*r.rows[0][0]) == "<" + kInst + "MotorTorque01>");
  CHECK(result_term_text(*r.rows[0][1]) == "<" + kInst + "TorqueMeasure01>");
  CHECK(result_term_text(*r.rows[0][2]) ==
        "\"620.0\"^^<http://www.w3.org/2001/XMLSchema#double>");
  CHECK(result_term_text(*r.rows[0][3]) ==
        "<http://www.ontology-of-units-of-measure.org/resource/om-2/newtonMetre>");
}

TEST_CASE("the exceedance query filters, casts and orders") {
  Query q = parse_query(query_text("CQ5.9.rq"));
  QueryResult r = evaluate(q, materialized_kb());
  REQUIRE(r.rows.size() == 2);
  CHECK(result_term_text(*r.rows[0][0]) ==
        "\"233.5\"^^<http://www.w3.org/2001/XMLSchema#double>");
  CHECK(result_term_text(*r.rows[0][1]) ==
        "\"2018-08-21T14:00:00Z\"^^<http://www.w3.org/2001/XMLSchema#dateTime>");
  CHECK(result_term_text(*r.rows[1][0]) ==
        "\"231.2\"^^<http://www.w3.org/2001/XMLSchema#double>");
  CHECK(result_term_text(*r.rows[1][1]) ==
        "\"2018-08-22T09:00:00Z\"^^<http://www.w3.org/2001/XMLSchema#dateTime>");
}

TEST_CASE("filters compare numbers, strings and cast datetimes") {
  Graph g = parse_turtle(
      "@prefix : <urn:x:> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      ":a :v 5 . :b :v 15 . :c :v \"9.5\"^^xsd:double .\n"
      ":a :name \"alpha\" . :b :name \"beta\" .\n"
      ":a :t \"2018-08-20T06:00:00Z\"^^xsd:dateTime .\n"
      ":b :t \"2018-08-20T14:00:00+02:00\"^^xsd:dateTime .\n");
  SUBCASE("numeric comparison spans integer and double") {
    Query q = parse_query("SELECT ?s WHERE { ?s <urn:x:v> ?v . FILTER(?v > 6) }");
    QueryResult r = evaluate(q, g);
    std::set<std::string> got;
    for (const auto& row : r.rows) got.insert(result_term_text(*row[0]));
    CHECK(got == std::set<std::string>{"<urn:x:b>", "<urn:x:c>"});
  }
  SUBCASE("string equality and inequality") {
    Query q = parse_query(
        "SELECT ?s WHERE { ?s <urn:x:name> ?n . FILTER(?n != \"alpha\") }");
    QueryResult r = evaluate(q, g);
    REQUIRE(r.rows.size() == 1);
    CHECK(result_term_text(*r.rows[0][0]) == "<urn:x:b>");
  }
  SUBCASE("datetime cast normalizes offsets") {
    Query q = parse_query(
        "PREFIX xsd: <http://www.w3.org/2001/XMLSchema#>\n"
        "SELECT ?s WHERE { ?s <urn:x:t> ?t . FILTER(xsd:dateTime(?t) = "
        "\"2018-08-20T12:00:00Z\"^^xsd:dateTime) }");
    QueryResult r = evaluate(q, g);
    REQUIRE(r.rows.size() == 1);
    CHECK(result_term_text(*r.rows[0][0]) == "<urn:x:b>");
  }
  SUBCASE("boolean connectives with parentheses") {
    Query q = parse_query(
        "SELECT ?s WHERE { ?s <urn:x:v> ?v . FILTER((?v > 4) && (?v < 10) || (?v = 15)) }");
    QueryResult r = evaluate(q, g);
    CHECK(r.rows.size() == 3);
  }
  SUBCASE("a type error makes the row false, not an error") {
    Query q = parse_query("SELECT ?s WHERE { ?s <urn:x:name> ?n . FILTER(?n > 3) }");
    QueryResult r = evaluate(q, g);
    CHECK(r.rows.empty());
  }
}

TEST_CASE("order by sorts rows deterministically") {
  Graph g = parse_turtle(
      "@prefix : <urn:x:> .\n"
      ":a :v 3 . :b :v 1 . :c :v 2 .\n");
  Query asc = parse_query("SELECT ?s ?v WHERE { ?s <urn:x:v> ?v . } ORDER BY ASC(?v)");
  QueryResult r = evaluate(asc, g);
  REQUIRE(r.rows.size() == 3);
  CHECK(result_term_text(*r.rows[0][0]) == "<urn:x:b>");
  CHECK(result_term_text(*r.rows[2][0]) == "<urn:x:a>");
  Query desc = parse_query("SELECT ?s ?v WHERE { ?s <urn:x:v> ?v . } ORDER BY DESC(?v)");
  QueryResult d = evaluate(desc, g);
  CHECK(result_term_text(*d.rows[0][0]) == "<urn:x:a>");
}

TEST_CASE("distinct collapses duplicate solutions") {
  Graph g = parse_turtle(
      "@prefix : <urn:x:> .\n"
      ":a :p :o1 . :a :p :o2 .\n");
  Query q = parse_query("SELECT DISTINCT ?s WHERE { ?s <urn:x:p> ?o . }");
  CHECK(evaluate(q, g).rows.size() == 1);
  Query all = parse_query("SELECT ?s WHERE { ?s <urn:x:p> ?o . }");
  CHECK(evaluate(all, g).rows.size() == 2);
}

TEST_CASE("result term spellings") {
  CHECK(result_term_text(Term::iri("urn:a")) == "<urn:a>");
  CHECK(result_term_text(Term::blank("n1")) == "_:n1");
  CHECK(result_term_text(Term::literal("hopper")) == "\"hopper\"");
  CHECK(result_term_text(Term::lang_literal("moteur", "fr")) == "\"moteur\"@fr");
  CHECK(result_term_text(Term::literal("620.0", xsd::double_)) ==
        "\"620.0\"^^<http://www.w3.org/2001/XMLSchema#double>");
  CHECK(result_term_text(Term::literal("a\tb\n\"q\"")) == "\"a\\tb\\n\\\"q\\\"\"");
}

TEST_CASE("tsv output") {
  Graph g = parse_turtle("@prefix : <urn:x:> .\n:a :p :o1 .\n");
  SUBCASE("no solutions means header only") {
    Query q = parse_query("SELECT ?s ?o WHERE { ?s <urn:x:zzz> ?o . }");
    CHECK(format_tsv(evaluate(q, g)) == "?s\t?o\n");
  }
  SUBCASE("iri cells come angle-bracketed") {
    Query q = parse_query("SELECT ?s ?o WHERE { ?s <urn:x:p> ?o . }");
    CHECK(format_tsv(evaluate(q, g)) == "?s\t?o\n<urn:x:a>\t<urn:x:o1>\n");
  }
  SUBCASE("ask renders a bare boolean") {
    Query q = parse_query("ASK { ?s <urn:x:p> ?o . }");
    CHECK(format_tsv(evaluate(q, g)) == "true\n");
    Query no = parse_query("ASK { ?s <urn:x:zzz> ?o . }");
    CHECK(format_tsv(evaluate(no, g)) == "false\n");
  }
}

TEST_CASE("json output follows the standard result layout") {
  Graph g = parse_turtle(
      "@prefix : <urn:x:> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      ":a :p \"620.0\"^^xsd:double .\n");
  Query q = parse_query("SELECT ?s ?o WHERE { ?s <urn:x:p> ?o . }");
  auto doc = nlohmann::json::parse(format_json(evaluate(q, g)));
  CHECK(doc["head"]["vars"] == nlohmann::json::array({"s", "o"}));
  REQUIRE(doc["results"]["bindings"].size() == 1);
  auto binding = doc["results"]["bindings"][0];
  CHECK(binding["s"]["type"] == "uri");
  CHECK(binding["s"]["value"] == "urn:x:a");
  CHECK(binding["o"]["type"] == "literal");
  CHECK(binding["o"]["value"] == "620.0");
  CHECK(binding["o"]["datatype"] == "http://www.w3.org/2001/XMLSchema#double");

  Query ask = parse_query("ASK { ?s <urn:x:p> ?o . }");
  auto adoc = nlohmann::json::parse(format_json(evaluate(ask, g)));
  CHECK(adoc["boolean"] == true);
}

TEST_CASE("datetime lexical forms parse to epoch milliseconds") {
  CHECK(parse_date_time_millis("1970-01-01T00:00:00Z") == 0);
  CHECK(parse_date_time_millis("1970-01-01T00:00:00") == 0);  // no offset means UTC
  CHECK(parse_date_time_millis("1970-01-01T01:00:00+01:00") == 0);
  CHECK(parse_date_time_millis("1970-01-01T00:00:00.500Z") == 500);
  CHECK(parse_date_time_millis("2018-08-21T14:00:00Z") >
        parse_date_time_millis("2018-08-21T08:00:00Z"));
  CHECK_FALSE(parse_date_time_millis("not a date").has_value());
  CHECK_FALSE(parse_date_time_millis("2018-13-01T00:00:00Z").has_value());
  CHECK_FALSE(parse_date_time_millis("2018-02-30T00:00:00Z").has_value());
}
