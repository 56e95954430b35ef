#pragma once
// Link extractors: the reachability criteria (cNone, cMatch, cAll) and the
// Solid discovery selectors (storage root, LDP containers, type indexes).

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltqp/link_queue.hpp"
#include "ltqp/query.hpp"
#include "ltqp/rdf.hpp"

namespace ltqp {

enum class PhiMode { All, QueryClass };

enum class Reachability { CNone, CMatch, CAll };

enum class DiscoveryMode { Base, Ldp, Idx, IdxFilt, LdpIdx, LdpIdxFilt };

/// Vocabulary namespaces never followed by cMatch/cAll by default.
std::vector<std::string> default_excluded_namespaces();

struct ExtractionContext {
    const Bgp* bgp = nullptr;
    std::string requested_iri;  // document IRI as it was linked, fragment kept
    PhiMode phi = PhiMode::All;
    std::vector<std::string> excluded_namespaces = default_excluded_namespaces();
};

using ExtractFn = std::function<std::vector<Link>(const ParsedDocument&, const ExtractionContext&)>;

struct LinkExtractor {
    std::string label;
    ExtractFn extract;
};

namespace extractor_label {
inline constexpr std::string_view cnone = "cnone";
inline constexpr std::string_view cmatch = "cmatch";
inline constexpr std::string_view call = "call";
inline constexpr std::string_view solid_vault = "solid-vault";
inline constexpr std::string_view ldp_container = "ldp-container";
inline constexpr std::string_view type_index = "type-index";
}  // namespace extractor_label

// Each returns links with distinct targets, sorted by target.
std::vector<Link> extract_cnone(const ParsedDocument& doc, const ExtractionContext& ctx);
std::vector<Link> extract_call(const ParsedDocument& doc, const ExtractionContext& ctx);
std::vector<Link> extract_cmatch(const ParsedDocument& doc, const ExtractionContext& ctx);
std::vector<Link> extract_solid_vault(const ParsedDocument& doc, const ExtractionContext& ctx);
std::vector<Link> extract_ldp_container(const ParsedDocument& doc, const ExtractionContext& ctx);
/// Type-index links carry priority 0; everything else priority 1.
std::vector<Link> extract_type_index(const ParsedDocument& doc, const ExtractionContext& ctx);

bool phi_query_class(const Bgp& bgp, std::string_view cls);

/// Extractor set for one (reachability, discovery) cell.
std::vector<LinkExtractor> make_extractors(Reachability reachability, DiscoveryMode discovery);
PhiMode phi_mode_for(DiscoveryMode discovery);

std::string_view to_string(Reachability r);
std::string_view to_string(DiscoveryMode d);
std::optional<Reachability> parse_reachability(std::string_view text);
std::optional<DiscoveryMode> parse_discovery(std::string_view text);

inline constexpr Reachability kAllReachabilities[] = {Reachability::CNone, Reachability::CMatch,
                                                      Reachability::CAll};
inline constexpr DiscoveryMode kAllDiscoveryModes[] = {
    DiscoveryMode::Base,   DiscoveryMode::Idx,    DiscoveryMode::IdxFilt,
    DiscoveryMode::Ldp,    DiscoveryMode::LdpIdx, DiscoveryMode::LdpIdxFilt};

}  // namespace ltqp
