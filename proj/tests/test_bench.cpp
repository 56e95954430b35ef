#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "ltqp/bench/environment_io.hpp"
#include "ltqp/bench/oracle.hpp"
#include "ltqp/bench/server.hpp"
#include "ltqp/bench/workload.hpp"
#include "ltqp/turtle.hpp"

using namespace ltqp;
using namespace ltqp::bench;

namespace {

SyntheticConfig tiny() {
    SyntheticConfig c;
    c.random_seed = 1;
    c.persons = 2;
    c.posts_per_person = 1;
    c.comments_per_post = 1;
    c.likes_per_person = 1;
    c.knows_per_person = 1;
    c.multiplication_factor = 1;
    c.strategy = FragmentationStrategy::Single;
    return c;
}

Message message(const std::string& local, const std::string& day, const std::string& place) {
    const std::string base = "http://h/";
    Message m;
    m.local = local;
    m.iri = base + "messages/" + local;
    m.creator = base + "pods/0/card#me";
    m.day = day;
    m.location = base + "dbpedia.org/resource/" + place;
    Term self = Term::iri(m.iri);
    m.triples.push_back({self, Term::iri("http://h/v/day"), Term::literal(day)});
    m.triples.push_back({self, Term::iri("http://h/v/at"), Term::iri(m.location)});
    return m;
}

SolutionMapping mu(std::initializer_list<std::pair<const std::string, Term>> init) { return SolutionMapping(init); }

}  // namespace

TEST_CASE("tiny single-file environment has ten documents") {
    auto env = generate_environment(tiny());
    CHECK(env.texts.size() == 10);
    CHECK(env.documents.size() == 10);
    CHECK(env.web_ids == std::vector<std::string>{"http://localhost:3000/pods/0/card#me",
                                                  "http://localhost:3000/pods/1/card#me"});
    CHECK(env.vault_roots == std::vector<std::string>{"http://localhost:3000/pods/0/",
                                                      "http://localhost:3000/pods/1/"});
    for (const char* path : {"pods/0/", "pods/0/card", "pods/0/publicTypeIndex", "pods/0/posts", "pods/0/comments"}) {
        CHECK_MESSAGE(env.texts.count(path) == 1, path);
    }
}

TEST_CASE("generator edge cases and determinism") {
    auto empty_cfg = tiny();
    empty_cfg.persons = 0;
    auto empty = generate_environment(empty_cfg);
    CHECK(empty.texts.empty());
    CHECK(empty.union_graph.empty());

    auto cfg = tiny();
    cfg.persons = 6;
    cfg.strategy = FragmentationStrategy::Composite;
    cfg.noise_documents_per_person = 2;
    CHECK(generate_environment(cfg).texts == generate_environment(cfg).texts);
    auto other = cfg;
    other.random_seed = 2;
    CHECK(generate_environment(cfg).texts != generate_environment(other).texts);

    auto bad = tiny();
    bad.base_url = "no-scheme/";
    CHECK_THROWS_AS(generate_environment(bad), std::invalid_argument);
}

TEST_CASE("every generated document parses and the union graph is consistent") {
    auto cfg = tiny();
    cfg.persons = 5;
    cfg.strategy = FragmentationStrategy::Composite;
    cfg.noise_documents_per_person = 1;
    auto env = generate_environment(cfg);
    std::set<Triple> all;
    for (const auto& [path, text] : env.texts) {
        auto doc = parse_turtle(text, env.url(path));
        CHECK(doc.triples == env.documents.at(path).triples);
        all.insert(doc.triples.begin(), doc.triples.end());
    }
    CHECK(all == std::set<Triple>(env.union_graph.begin(), env.union_graph.end()));
}

TEST_CASE("fragment_messages groups by strategy") {
    std::vector<Message> three = {message("post1", "2010-01-01", "A"), message("post2", "2010-01-02", "B"),
                                  message("post3", "2010-01-02", "A")};
    CHECK(fragment_messages(three, FragmentationStrategy::Location, "pods/0/posts/", "http://h/").files.size() == 2);
    CHECK(fragment_messages(three, FragmentationStrategy::Time, "pods/0/posts/", "http://h/").files.size() == 2);
    CHECK(fragment_messages(three, FragmentationStrategy::Single, "pods/0/posts", "http://h/").files.size() == 1);
    auto separate = fragment_messages(three, FragmentationStrategy::Separate, "pods/0/posts/", "http://h/");
    CHECK(separate.files.size() == 3);
    CHECK(separate.rewrites.at("http://h/messages/post2") == "http://h/pods/0/posts/post2#post2");
    CHECK(separate.files.at("pods/0/posts/post2")[0].subject == Term::iri("http://h/pods/0/posts/post2#post2"));
    CHECK(fragment_messages({}, FragmentationStrategy::Separate, "pods/0/posts/", "http://h/").files.empty());
}

TEST_CASE("environment save and load round trip") {
    auto cfg = tiny();
    cfg.persons = 3;
    cfg.strategy = FragmentationStrategy::Composite;
    cfg.noise_documents_per_person = 1;
    auto env = generate_environment(cfg);
    auto dir = std::filesystem::temp_directory_path() / "ltqp_env_roundtrip";
    std::filesystem::remove_all(dir);
    save_environment(env, dir);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    CHECK(std::filesystem::exists(dir / "pods/0/index.ttl"));
    CHECK(std::filesystem::exists(dir / "pods/0/card.ttl"));
    auto loaded = load_environment(dir);
    CHECK(loaded.texts == env.texts);
    CHECK(loaded.web_ids == env.web_ids);
    CHECK(loaded.vault_roots == env.vault_roots);
    CHECK(loaded.person_strategies == env.person_strategies);
    CHECK(loaded.union_graph == env.union_graph);
    CHECK(loaded.config.noise_documents_per_person == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS(load_environment(dir));
    CHECK(file_for_path("pods/0/") == "pods/0/index.ttl");
    CHECK(file_for_path("pods/0/card") == "pods/0/card.ttl");
}

TEST_CASE("HTTP server serves generated documents") {
    auto env = generate_environment(tiny());
    auto table = make_table(env);
    table->faults["pods/1/card"] = 500;
    DocumentServer server(table);
    CHECK(server.port() > 0);
    {
        HttpFetcher http;
        auto card = http.get(server.base_url() + "pods/0/card", FetchPolicy{});
        CHECK(card.status == 200);
        auto doc = parse_turtle(card.body, env.web_ids[0]);
        bool has_storage = false;
        for (const auto& t : doc.triples) has_storage |= t.predicate.value == std::string(ns::pim) + "storage";
        CHECK(has_storage);
        CHECK(http.get(server.base_url() + "nonexistent", FetchPolicy{}).status == 404);
        CHECK(http.get(server.base_url() + "pods/1/card", FetchPolicy{}).status == 500);
    }
    server.stop();

    EnvironmentFetcher local(env.config.base_url, table);
    CHECK(local.get(env.url("pods/0/card"), {}).status == 200);
    CHECK(local.get(env.url("nope"), {}).status == 404);
    CHECK(local.get("http://elsewhere/x", {}).status == 0);
}

TEST_CASE("oracle basics") {
    Query all = parse_query("SELECT ?s WHERE { ?s ?p ?o }");
    CHECK(oracle_evaluate(all, std::vector<Triple>{}).empty());
    std::vector<Triple> one = {{Term::iri("http://a"), Term::iri("http://p"), Term::iri("http://b")}};
    CHECK(oracle_evaluate(all, one) == ResultSet{mu({{"s", Term::iri("http://a")}})});

    std::vector<Triple> g = {{Term::iri("http://a"), Term::iri("http://p"), Term::iri("http://b")},
                             {Term::iri("http://b"), Term::iri("http://p"), Term::iri("http://c")},
                             {Term::iri("http://c"), Term::iri("http://p"), Term::iri("http://c")}};
    Query path = parse_query("SELECT ?x ?z WHERE { ?x <http://p> ?y . ?y <http://p> ?z }");
    CHECK(oracle_evaluate(path, g) == ResultSet{mu({{"x", Term::iri("http://a")}, {"z", Term::iri("http://c")}}),
                                                mu({{"x", Term::iri("http://b")}, {"z", Term::iri("http://c")}}),
                                                mu({{"x", Term::iri("http://c")}, {"z", Term::iri("http://c")}})});
    Query loop = parse_query("SELECT ?x WHERE { ?x <http://p> ?x }");
    CHECK(oracle_evaluate(loop, g).size() == 1);
}

TEST_CASE("accuracy_f1") {
    ResultSet a = {mu({{"x", Term::iri("http://a")}})};
    ResultSet ab = {mu({{"x", Term::iri("http://a")}}), mu({{"x", Term::iri("http://b")}})};
    CHECK(accuracy_f1(ab, ab) == doctest::Approx(100));
    CHECK(accuracy_f1(ab, a) == doctest::Approx(66.6667).epsilon(1e-4));
    CHECK(accuracy_f1(a, {}) == 0);
    CHECK(accuracy_f1({}, {}) == 100);
    CHECK(accuracy_f1({}, a) == 0);
    CHECK(accuracy_f1(a, ab) == doctest::Approx(accuracy_f1(ab, a)));
}

TEST_CASE("generated environments satisfy the discovery invariants") {
    auto cfg = tiny();
    cfg.persons = 6;
    cfg.posts_per_person = 3;
    cfg.strategy = FragmentationStrategy::Composite;
    cfg.noise_documents_per_person = 2;
    auto env = generate_environment(cfg);
    auto table = make_table(env);

    // Every document is reachable from the WebIDs through storage and containment links.
    {
        EnvironmentFetcher f(env.config.base_url, table);
        TripleSource src;
        LinkQueue queue;
        Dereferencer d(f, FetchPolicy{});
        auto report = run_traversal(env.web_ids, make_extractors(Reachability::CNone, DiscoveryMode::Ldp), src,
                                    queue, d, TraversalOptions{});
        CHECK(report.documents_fetched == env.texts.size());
        CHECK(report.errors_ignored == 0);
    }
    // Every message is reachable through its creator's type index, and the index lists nothing else.
    {
        EnvironmentFetcher f(env.config.base_url, table);
        TripleSource src;
        LinkQueue queue;
        Dereferencer d(f, FetchPolicy{});
        std::vector<LinkExtractor> idx = {{"type-index", extract_type_index},
                                          {"ldp-container", extract_ldp_container}};
        run_traversal(env.web_ids, idx, src, queue, d, TraversalOptions{});
        std::set<std::string> subjects;
        for (const auto& t : src.snapshot()) subjects.insert(t.subject.value);
        for (const auto& [canonical, served] : env.message_rewrites) CHECK_MESSAGE(subjects.count(served), served);
        for (const auto& t : src.snapshot()) CHECK(t.object.value.find("vocab/noise#") == std::string::npos);
    }
}

TEST_CASE("workload templates and vault-spanning selection") {
    CHECK(query_templates().size() == 8);
    CHECK(query_template("D8").text.find("$person") != std::string::npos);
    CHECK_THROWS(query_template("D99"));

    auto cfg = tiny();
    cfg.persons = 8;
    cfg.posts_per_person = 2;
    cfg.likes_per_person = 3;
    cfg.knows_per_person = 2;
    auto env = generate_environment(cfg);
    Vocabulary vocab(env.config.base_url);
    auto text = instantiate(query_template("D1"), vocab, env.web_ids[0]);
    CHECK(text.find("$person") == std::string::npos);
    CHECK(text.find("<" + env.web_ids[0] + ">") != std::string::npos);

    auto workload = default_workload(env);
    CHECK(workload.size() == 8);
    auto d8 = default_workload(env, 0, {"D8"});
    REQUIRE(d8.size() == 1);
    CHECK(d8[0].vault_spanning());
    CHECK(d8[0].expected == oracle_evaluate(d8[0].query, env));
}

TEST_CASE("run_matrix over a small matrix") {
    auto cfg = tiny();
    cfg.persons = 6;
    cfg.likes_per_person = 3;
    auto env = generate_environment(cfg);
    auto table = make_table(env);
    EnvironmentFetcher f(env.config.base_url, table);
    MatrixOptions options;
    options.reachabilities = {Reachability::CNone, Reachability::CMatch};
    options.discoveries = {DiscoveryMode::Base, DiscoveryMode::LdpIdxFilt};
    auto queries = default_workload(env, 0, {"D8"});
    auto cells = run_matrix(env, queries, f, options);
    CHECK(cells.size() == 4);
    for (const auto& c : cells) {
        CHECK(c.query == "D8");
        CHECK(c.runs.size() == 1);
    }
    std::ostringstream csv;
    write_matrix_csv(csv, cells);
    const std::string text = csv.str();
    CHECK(text.substr(0, text.find('\n')) == kMatrixColumns);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    std::ostringstream arrivals;
    write_arrivals_csv(arrivals, cells);
    CHECK(arrivals.str().starts_with("query,discovery,reachability,repetition,index,t_ms"));
}
