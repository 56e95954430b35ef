#pragma once
// Vault fixtures shared by the unit and acceptance tests: a root container,
// a WebID profile, a public type index and the discover-8 query template.

#include <string>

#include "ltqp/dereferencer.hpp"

namespace fixtures {

inline constexpr const char* kBase = "https://v.example/";
inline constexpr const char* kWebIdDoc = "https://v.example/profile/card";
inline constexpr const char* kWebId = "https://v.example/profile/card#me";
inline constexpr const char* kTypeIndexDoc = "https://v.example/publicTypeIndex.ttl";

inline constexpr const char* kContainer = R"(@prefix ldp: <http://www.w3.org/ns/ldp#>.
<> a ldp:Container, ldp:BasicContainer, ldp:Resource;
    ldp:contains <file.ttl>, <posts/>, <profile/>.
<file.ttl> a ldp:Resource.
<posts/> a ldp:Container, ldp:BasicContainer, ldp:Resource.
<profile/> a ldp:Container, ldp:BasicContainer, ldp:Resource.
)";

inline constexpr const char* kProfile = R"(@prefix pim: <http://www.w3.org/ns/pim/space#>.
@prefix foaf: <http://xmlns.com/foaf/0.1/>.
@prefix solid: <http://www.w3.org/ns/solid/terms#>.
<#me> foaf:name "Zulma";
    pim:storage </>;
    solid:oidcIssuer <https://solidcommunity.net/>;
    solid:publicTypeIndex </publicTypeIndex.ttl>.
)";

inline constexpr const char* kTypeIndex = R"(@prefix ldp: <http://www.w3.org/ns/ldp#>.
@prefix solid: <http://www.w3.org/ns/solid/terms#>.
<> a solid:TypeIndex ;
    a solid:ListedDocument.
<#ab09fd> a solid:TypeRegistration;
    solid:forClass <http://example.org/Post>;
    solid:instance </public/posts.ttl>.
<#bq1r5e> a solid:TypeRegistration;
    solid:forClass <http://example.org/Comment>;
    solid:instanceContainer </public/comments/>.
)";

inline constexpr const char* kDiscoverQuery8 = R"(PREFIX snvoc: <http://localhost:3000/www.ldbc.eu/ldbc_socialnet/1.0/vocabulary/>
SELECT DISTINCT ?creator ?messageContent WHERE {
  $person snvoc:likes [ snvoc:hasPost|snvoc:hasComment ?message ].
  ?message snvoc:hasCreator ?creator.
  ?otherMessage snvoc:hasCreator ?creator;
                snvoc:content ?messageContent.
} LIMIT 10
)";

/// The container above, its members and the WebID profile, all served.
inline void serve_vault(ltqp::StaticFetcher& f) {
    f.put("https://v.example/", kContainer);
    f.put("https://v.example/file.ttl", "<#x> <http://example.org/p> \"file\".\n");
    f.put("https://v.example/posts/",
          "@prefix ldp: <http://www.w3.org/ns/ldp#>.\n<> a ldp:Container; ldp:contains <p1.ttl>.\n");
    f.put("https://v.example/posts/p1.ttl", "<#post> a <http://example.org/Post>.\n");
    f.put("https://v.example/profile/",
          "@prefix ldp: <http://www.w3.org/ns/ldp#>.\n<> a ldp:Container; ldp:contains <card>.\n");
    f.put(kWebIdDoc, kProfile);
    f.put(kTypeIndexDoc, kTypeIndex);
}

/// Chain ?x :p ?y . ?y :q ?z . ?z a :T under one container, where the typed
/// pattern is far more selective than the zero-knowledge order assumes.
inline void serve_chain(ltqp::StaticFetcher& f) {
    std::string a, b;
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 5; ++y) {
            a += "<#x" + std::to_string(x) + "> <http://f/p> <http://f/b#y" + std::to_string(y) + ">.\n";
        }
    }
    for (int y = 0; y < 5; ++y) {
        for (int z = 0; z < 6; ++z) {
            b += "<#y" + std::to_string(y) + "> <http://f/q> <http://f/c#z" + std::to_string(y * 6 + z) + ">.\n";
        }
    }
    f.put("http://f/", "@prefix ldp: <http://www.w3.org/ns/ldp#>.\n<> ldp:contains <a>, <b>, <c>.\n");
    f.put("http://f/a", a);
    f.put("http://f/b", b);
    f.put("http://f/c", "<#z7> a <http://f/T>.\n<#z99> a <http://f/T>.\n");
}

inline constexpr const char* kChainQuery =
    "SELECT ?x ?z WHERE { ?x <http://f/p> ?y . ?y <http://f/q> ?z . ?z a <http://f/T> }";

}  // namespace fixtures
