#include <doctest.h>

#include "fixtures.hpp"
#include "ltqp/extractors.hpp"
#include "ltqp/turtle.hpp"

using namespace ltqp;

namespace {

std::vector<std::string> targets(const std::vector<Link>& links) {
    std::vector<std::string> out;
    for (const auto& l : links) out.push_back(l.target);
    return out;
}

ExtractionContext context(const std::string& requested, const Bgp* bgp = nullptr) {
    ExtractionContext ctx;
    ctx.requested_iri = requested;
    ctx.bgp = bgp;
    return ctx;
}

Bgp d8_bgp() {
    std::string text = fixtures::kDiscoverQuery8;
    text.replace(text.find("$person"), 7, "<http://pods/p1/card#me>");
    return parse_query(text).bgp;
}

Bgp typed_post_bgp() {
    return parse_query("SELECT ?c WHERE { ?v a <http://example.org/Post>. ?v <http://example.org/content> ?c }").bgp;
}

const std::string kSnvoc = "http://localhost:3000/www.ldbc.eu/ldbc_socialnet/1.0/vocabulary/";

}  // namespace

TEST_CASE("cnone follows nothing") {
    auto doc = parse_turtle(fixtures::kContainer, fixtures::kBase);
    CHECK(extract_cnone(doc, context(fixtures::kBase)).empty());
    CHECK(extract_cnone(ParsedDocument{"http://x/", {}}, context("http://x/")).empty());
    std::string big;
    for (int i = 0; i < 1000; ++i) big += "<http://x/" + std::to_string(i) + "> <http://p> <http://o>.\n";
    CHECK(extract_cnone(parse_turtle(big, "http://x/"), context("http://x/")).empty());
}

TEST_CASE("call follows every IRI outside excluded namespaces") {
    auto doc = parse_turtle(fixtures::kProfile, fixtures::kWebIdDoc);
    auto ctx = context(fixtures::kWebId);
    ctx.excluded_namespaces.clear();
    auto links = targets(extract_call(doc, ctx));
    CHECK(links == std::vector<std::string>{
                       "http://www.w3.org/ns/pim/space#storage",
                       "http://www.w3.org/ns/solid/terms#oidcIssuer",
                       "http://www.w3.org/ns/solid/terms#publicTypeIndex",
                       "http://xmlns.com/foaf/0.1/name",
                       "https://solidcommunity.net/",
                       "https://v.example/",
                       "https://v.example/profile/card#me",
                       "https://v.example/publicTypeIndex.ttl",
                   });

    auto defaults = targets(extract_call(doc, context(fixtures::kWebId)));
    CHECK(defaults == std::vector<std::string>{"http://xmlns.com/foaf/0.1/name", "https://solidcommunity.net/",
                                               "https://v.example/", "https://v.example/profile/card#me",
                                               "https://v.example/publicTypeIndex.ttl"});

    CHECK(extract_call(ParsedDocument{"http://x/", {}}, ctx).empty());
    auto literal_only = parse_turtle("<http://x/a> <http://x/p> \"v\".", "http://x/");
    CHECK(targets(extract_call(literal_only, ctx)) == std::vector<std::string>{"http://x/a", "http://x/p"});
}

TEST_CASE("cmatch follows IRIs of query-matching triples only") {
    Bgp bgp = d8_bgp();
    auto doc = parse_turtle("<http://e/m> <" + kSnvoc + "hasCreator> <http://e/alice>.\n" +
                                "<http://e/m> <http://e/irrelevant> <http://e/x>.\n",
                            "http://e/doc");
    auto ctx = context("http://e/doc", &bgp);
    CHECK(targets(extract_cmatch(doc, ctx)) ==
          std::vector<std::string>{"http://e/alice", "http://e/m", kSnvoc + "hasCreator"});

    Bgp universal = parse_query("SELECT * WHERE { ?s ?p ?o }").bgp;
    auto profile = parse_turtle(fixtures::kProfile, fixtures::kWebIdDoc);
    auto uctx = context(fixtures::kWebId, &universal);
    CHECK(targets(extract_cmatch(profile, uctx)) == targets(extract_call(profile, uctx)));

    CHECK(extract_cmatch(ParsedDocument{"http://x/", {}}, ctx).empty());
}

TEST_CASE("solid vault selector honours the subject rule") {
    auto doc = parse_turtle(fixtures::kProfile, fixtures::kWebIdDoc);
    auto links = extract_solid_vault(doc, context(fixtures::kWebId));
    REQUIRE(links.size() == 1);
    CHECK(links[0].target == "https://v.example/");
    CHECK(links[0].extractor_label == extractor_label::solid_vault);
    CHECK(extract_solid_vault(doc, context(fixtures::kWebIdDoc)).empty());
    auto container = parse_turtle(fixtures::kContainer, fixtures::kBase);
    CHECK(extract_solid_vault(container, context(fixtures::kBase)).empty());
}

TEST_CASE("ldp container selector") {
    auto doc = parse_turtle(fixtures::kContainer, fixtures::kBase);
    CHECK(targets(extract_ldp_container(doc, context(fixtures::kBase))) ==
          std::vector<std::string>{"https://v.example/file.ttl", "https://v.example/posts/",
                                   "https://v.example/profile/"});
    auto foreign = parse_turtle(
        "<http://other/> <http://www.w3.org/ns/ldp#contains> <http://other/x>.", "http://e/doc");
    CHECK(extract_ldp_container(foreign, context("http://e/doc")).empty());
    CHECK(extract_ldp_container(parse_turtle(fixtures::kProfile, fixtures::kWebIdDoc), context(fixtures::kWebIdDoc))
              .empty());
}

TEST_CASE("type index selector and the class filter") {
    auto doc = parse_turtle(fixtures::kTypeIndex, fixtures::kTypeIndexDoc);
    auto ctx = context(fixtures::kTypeIndexDoc);
    auto all = extract_type_index(doc, ctx);
    CHECK(targets(all) ==
          std::vector<std::string>{"https://v.example/public/comments/", "https://v.example/public/posts.ttl"});
    for (const auto& l : all) CHECK(l.priority == 0);

    Bgp typed = typed_post_bgp();
    ctx.bgp = &typed;
    ctx.phi = PhiMode::QueryClass;
    CHECK(targets(extract_type_index(doc, ctx)) == std::vector<std::string>{"https://v.example/public/posts.ttl"});

    Bgp d8 = d8_bgp();
    ctx.bgp = &d8;
    CHECK(extract_type_index(doc, ctx).size() == 2);
}

TEST_CASE("type index selector follows index links from the WebID") {
    auto profile = parse_turtle(fixtures::kProfile, fixtures::kWebIdDoc);
    auto links = extract_type_index(profile, context(fixtures::kWebId));
    CHECK(targets(links) == std::vector<std::string>{"https://v.example/publicTypeIndex.ttl"});
    CHECK(extract_type_index(profile, context(fixtures::kWebIdDoc)).empty());
}

TEST_CASE("phi_query_class") {
    CHECK(phi_query_class(d8_bgp(), "http://example.org/Anything"));
    Bgp typed = parse_query("SELECT ?o WHERE { ?v a <http://e/Post>. ?v <http://e/p> ?o }").bgp;
    CHECK_FALSE(phi_query_class(typed, "http://e/Comment"));
    CHECK(phi_query_class(typed, "http://e/Post"));
    CHECK_FALSE(phi_query_class(Bgp{}, "http://e/Post"));
}

TEST_CASE("extractor sets per cell") {
    auto labels = [](Reachability r, DiscoveryMode d) {
        std::vector<std::string> out;
        for (const auto& e : make_extractors(r, d)) out.push_back(e.label);
        return out;
    };
    CHECK(labels(Reachability::CNone, DiscoveryMode::Base).empty());
    CHECK(labels(Reachability::CMatch, DiscoveryMode::Ldp) ==
          std::vector<std::string>{"cmatch", "solid-vault", "ldp-container"});
    CHECK(labels(Reachability::CAll, DiscoveryMode::IdxFilt) ==
          std::vector<std::string>{"call", "ldp-container", "type-index"});
    CHECK(labels(Reachability::CMatch, DiscoveryMode::LdpIdxFilt) ==
          std::vector<std::string>{"cmatch", "solid-vault", "ldp-container", "type-index"});
    CHECK(phi_mode_for(DiscoveryMode::Idx) == PhiMode::All);
    CHECK(phi_mode_for(DiscoveryMode::IdxFilt) == PhiMode::QueryClass);
    CHECK(phi_mode_for(DiscoveryMode::LdpIdxFilt) == PhiMode::QueryClass);
}

TEST_CASE("mode names round trip") {
    for (auto r : kAllReachabilities) CHECK(parse_reachability(to_string(r)) == r);
    for (auto d : kAllDiscoveryModes) CHECK(parse_discovery(to_string(d)) == d);
    CHECK(to_string(DiscoveryMode::LdpIdxFilt) == "ldp-idx-filt");
    CHECK_FALSE(parse_reachability("sometimes"));
    CHECK_FALSE(parse_discovery("ldp+idx"));
}
