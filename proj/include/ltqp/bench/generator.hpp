#pragma once
// Deterministic social-network environment: one vault per person with a
// WebID, LDP containers, a public type index and fragmented message files.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltqp/rdf.hpp"
#include "ltqp/turtle.hpp"

namespace ltqp::bench {

enum class FragmentationStrategy { Separate, Single, Location, Time, Composite };

std::string_view to_string(FragmentationStrategy s);
std::optional<FragmentationStrategy> parse_strategy(std::string_view text);

inline constexpr FragmentationStrategy kAllStrategies[] = {
    FragmentationStrategy::Separate, FragmentationStrategy::Single, FragmentationStrategy::Location,
    FragmentationStrategy::Time, FragmentationStrategy::Composite};

struct SyntheticConfig {
    std::uint64_t random_seed = 1;
    std::size_t persons = 10;
    std::size_t posts_per_person = 2;
    std::size_t comments_per_post = 1;
    std::size_t likes_per_person = 1;
    std::size_t knows_per_person = 2;
    std::size_t multiplication_factor = 1;
    std::size_t noise_documents_per_person = 0;
    FragmentationStrategy strategy = FragmentationStrategy::Separate;
    std::string base_url = "http://localhost:3000/";

    /// Throws std::invalid_argument.
    void validate() const;
};

/// Vocabulary IRIs for a given base.
struct Vocabulary {
    explicit Vocabulary(std::string_view base);

    std::string snvoc;  // namespace
    std::string tag_ns;
    std::string place_ns;

    std::string operator()(std::string_view local) const { return snvoc + std::string(local); }
    PrefixMap prefixes() const;
};

struct Message {
    std::string iri;    // canonical, before fragmentation
    std::string local;  // e.g. "post12", becomes the fragment
    bool is_post = true;
    std::string creator;   // WebID
    std::string day;       // YYYY-MM-DD
    std::string location;  // place IRI
    std::vector<Triple> triples;
};

struct FragmentedMessages {
    std::map<std::string, std::vector<Triple>> files;  // path -> triples, IRIs rewritten
    std::map<std::string, std::string> rewrites;       // canonical IRI -> <file>#local
};

/// `path` is the file path for Single and the container path (ending in
/// '/') for the other strategies. Composite must be resolved by the caller.
FragmentedMessages fragment_messages(const std::vector<Message>& messages,
                                     FragmentationStrategy strategy, const std::string& path,
                                     const std::string& base_url);

/// Replaces every IRI that is a key of `rewrites`.
void rewrite_iris(std::vector<Triple>& triples, const std::map<std::string, std::string>& rewrites);

struct GeneratedEnvironment {
    SyntheticConfig config;
    std::map<std::string, std::string> texts;  // path -> Turtle bytes as served
    std::map<std::string, ParsedDocument> documents;
    std::vector<std::string> web_ids;
    std::vector<std::string> vault_roots;
    std::vector<FragmentationStrategy> person_strategies;
    std::map<std::string, std::string> message_rewrites;  // canonical -> served IRI
    std::vector<Triple> union_graph;                      // distinct triples

    std::string url(const std::string& path) const { return config.base_url + path; }
};

GeneratedEnvironment generate_environment(const SyntheticConfig& config);

/// Rebuilds documents and union graph from `texts` (used after loading from disk).
void reparse(GeneratedEnvironment& env);

}  // namespace ltqp::bench
