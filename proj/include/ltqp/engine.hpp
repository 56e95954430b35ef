#pragma once
// One query execution: traversal on background workers, the pipeline on the
// calling thread, sharing a fresh TripleSource, LinkQueue and cache.

#include <ostream>
#include <string>
#include <vector>

#include "ltqp/dereferencer.hpp"
#include "ltqp/executor.hpp"
#include "ltqp/extractors.hpp"
#include "ltqp/link_queue.hpp"
#include "ltqp/planner.hpp"
#include "ltqp/traversal.hpp"

namespace ltqp {

struct EngineConfig {
    Reachability reachability = Reachability::CMatch;
    DiscoveryMode discovery = DiscoveryMode::LdpIdxFilt;
    std::size_t concurrency = 4;
    Millis timeout{120000};
    FetchPolicy fetch;
    std::vector<std::string> excluded_namespaces = default_excluded_namespaces();
    LinkQueue::PriorityHook priority_hook;  // optional
};

struct QueryRun {
    PhysicalPlan plan;
    ExecutionResult execution;
    TraversalReport traversal;
    std::vector<std::string> seeds;  // after fallback to the query's IRIs

    bool failed() const { return traversal.fatal_error.has_value(); }
};

/// Integrated execution. Empty `seeds` fall back to query_seed_iris; if that
/// is empty too, throws std::invalid_argument("no seeds").
QueryRun run_query(const Query& query, std::vector<std::string> seeds, Fetcher& fetcher,
                   const EngineConfig& config, const ResultCallback& on_result = {});

/// Crawl to completion, then plan on exact cardinalities and execute.
QueryRun evaluate_two_phase(const Query& query, std::vector<std::string> seeds, Fetcher& fetcher,
                            const EngineConfig& config);

/// `{"var":"<n-triples term>",...}`
std::string mapping_to_json(const SolutionMapping& mu);
/// `{"summary":{"count":..,"tFirst":..,"tLast":..,"totalMs":..,"wireRequests":..,"timedOut":..}}`
std::string summary_to_json(const QueryRun& run);
/// CSV header line for the projection, then one line per mapping.
std::string csv_header(const std::vector<std::string>& projection);
std::string mapping_to_csv(const SolutionMapping& mu, const std::vector<std::string>& projection);

}  // namespace ltqp
