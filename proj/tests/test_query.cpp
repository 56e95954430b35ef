#include <doctest.h>

#include "fixtures.hpp"
#include "ltqp/query.hpp"

using namespace ltqp;

namespace {

const std::string kType(ns::rdf_type);

Term iri(const std::string& v) { return Term::iri(v); }

std::string d8_for(const std::string& person) {
    std::string text = fixtures::kDiscoverQuery8;
    text.replace(text.find("$person"), 7, "<" + person + ">");
    return text;
}

}  // namespace

TEST_CASE("discover-8 query parses with desugared blank node") {
    Query q = parse_query(d8_for("http://pods/p1/card#me"));
    CHECK(q.projection == std::vector<std::string>{"creator", "messageContent"});
    CHECK(q.distinct);
    REQUIRE(q.limit.has_value());
    CHECK(*q.limit == 10);
    REQUIRE(q.bgp.patterns.size() == 5);

    // the bracketed property list is emitted before the pattern that mentions it
    const auto& likes = q.bgp.patterns[1];
    CHECK(std::get<Term>(likes.subject) == iri("http://pods/p1/card#me"));
    const std::string blank = std::get<Variable>(likes.object).name;
    CHECK(is_blank_variable(blank));

    const auto& alt = q.bgp.patterns[0];
    CHECK(std::get<Variable>(alt.subject).name == blank);
    const auto& path = std::get<PredicatePath>(alt.predicate);
    const std::string snvoc = "http://localhost:3000/www.ldbc.eu/ldbc_socialnet/1.0/vocabulary/";
    CHECK(path.alternatives == std::vector<std::string>{snvoc + "hasPost", snvoc + "hasComment"});
    CHECK(path.contains(snvoc + "hasComment"));
    CHECK(std::get<Variable>(q.bgp.patterns[2].subject).name == "message");
    CHECK(std::get<Variable>(q.bgp.patterns[4].object).name == "messageContent");
}

TEST_CASE("parse_query simple forms and errors") {
    Query q = parse_query("SELECT ?s WHERE { ?s ?p ?o }");
    CHECK(q.bgp.patterns.size() == 1);
    CHECK_FALSE(q.limit);
    CHECK_FALSE(q.distinct);

    Query star = parse_query("SELECT * WHERE { ?s <http://p> ?o . }");
    CHECK(star.projection == std::vector<std::string>{"s", "o"});

    CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { }"), QueryError);
    CHECK_THROWS_AS(parse_query("SELECT ?s WHERE { ?s ex:p ?o }"), SyntaxError);
    CHECK_THROWS_AS(parse_query("SELECT ?s WHERE { ?s ?p ?o "), SyntaxError);
    CHECK_THROWS_AS(parse_query("SELECT ?s WHERE { ?s ?p ?o } LIMIT x"), SyntaxError);
}

TEST_CASE("serialize_query round trips") {
    Query q = parse_query(d8_for("http://pods/p1/card#me"));
    Query again = parse_query(serialize_query(q));
    CHECK(again.projection == q.projection);
    CHECK(again.distinct == q.distinct);
    CHECK(again.limit == q.limit);
    CHECK(again.bgp.patterns.size() == q.bgp.patterns.size());
    CHECK(serialize_query(again) == serialize_query(q));
}

TEST_CASE("match_pattern") {
    auto typed = parse_query("SELECT ?v WHERE { ?v a <http://e/Post> }").bgp.patterns[0];
    auto mu = match_pattern({iri("http://e/a"), iri(kType), iri("http://e/Post")}, typed);
    REQUIRE(mu);
    CHECK(*mu == SolutionMapping{{"v", iri("http://e/a")}});

    auto alt = parse_query("SELECT ?p ?m WHERE { ?p <http://e/hasPost>|<http://e/hasComment> ?m }").bgp.patterns[0];
    auto mu2 = match_pattern({iri("http://e/a"), iri("http://e/hasComment"), iri("http://e/m")}, alt);
    REQUIRE(mu2);
    CHECK(*mu2 == SolutionMapping{{"p", iri("http://e/a")}, {"m", iri("http://e/m")}});

    auto type_var = parse_query("SELECT ?v ?c WHERE { ?v a ?c }").bgp.patterns[0];
    CHECK_FALSE(match_pattern({iri("http://e/a"), iri("http://e/q"), iri("http://e/b")}, type_var));

    auto repeated = parse_query("SELECT ?x WHERE { ?x <http://e/p> ?x }").bgp.patterns[0];
    CHECK(match_pattern({iri("http://e/a"), iri("http://e/p"), iri("http://e/a")}, repeated));
    CHECK_FALSE(match_pattern({iri("http://e/a"), iri("http://e/p"), iri("http://e/b")}, repeated));
}

TEST_CASE("apply_mapping") {
    auto tp = parse_query("SELECT ?v ?o WHERE { ?v <http://e/p> ?o }").bgp.patterns[0];
    auto bound = apply_mapping({{"v", iri("http://e/a")}}, tp);
    CHECK(std::get<Term>(bound.subject) == iri("http://e/a"));
    CHECK(std::get<Variable>(bound.object).name == "o");
    CHECK(apply_mapping({}, tp) == tp);

    Query q = parse_query(d8_for("http://pods/p1/card#me"));
    auto creator = apply_mapping({{"message", iri("http://e/msg")}}, q.bgp.patterns[2]);
    CHECK(std::get<Term>(creator.subject) == iri("http://e/msg"));
    CHECK(std::get<Variable>(creator.object).name == "creator");
}

TEST_CASE("query_classes") {
    Query d8 = parse_query(d8_for("http://pods/p1/card#me"));
    auto c = query_classes(d8.bgp);
    CHECK(c.classes.empty());
    CHECK(c.has_untyped_subject);

    auto typed = query_classes(parse_query("SELECT ?c WHERE { ?v a <http://e/Post>; <http://e/content> ?c }").bgp);
    CHECK(typed.classes == std::set<std::string>{"http://e/Post"});
    CHECK_FALSE(typed.has_untyped_subject);

    auto empty = query_classes(Bgp{});
    CHECK(empty.classes.empty());
    CHECK_FALSE(empty.has_untyped_subject);
}

TEST_CASE("query_seed_iris") {
    CHECK(query_seed_iris(parse_query(d8_for("http://pods/p1/card#me"))) ==
          std::set<std::string>{"http://pods/p1/card"});
    CHECK(query_seed_iris(parse_query("SELECT ?s WHERE {?s ?p ?o}")).empty());
    CHECK(query_seed_iris(parse_query("SELECT * WHERE { <http://e/a> <http://e/p> <http://e/b> }")) ==
          std::set<std::string>{"http://e/a", "http://e/b"});
}

TEST_CASE("project drops unprojected variables") {
    SolutionMapping mu{{"a", iri("http://x")}, {"b", Term::literal("y")}};
    CHECK(project(mu, {"a"}) == SolutionMapping{{"a", iri("http://x")}});
    CHECK(project(mu, {"c"}).empty());
}
