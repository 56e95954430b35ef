#pragma once
// The traversal loop: dequeue, dereference, append to the triple source,
// extract links, enqueue. Runs up to `concurrency` dereferences at once.

#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "ltqp/dereferencer.hpp"
#include "ltqp/extractors.hpp"
#include "ltqp/link_queue.hpp"
#include "ltqp/triple_source.hpp"

namespace ltqp {

struct TraversalOptions {
    std::size_t concurrency = 4;
    const Bgp* bgp = nullptr;
    PhiMode phi = PhiMode::All;
    std::vector<std::string> excluded_namespaces = default_excluded_namespaces();
};

struct TraversalReport {
    std::size_t documents_fetched = 0;
    std::size_t wire_requests = 0;
    std::size_t errors_ignored = 0;
    Millis wall_time{0};
    std::optional<std::string> fatal_error;  // only set when the policy is strict
    std::vector<std::string> fetched;         // fragment-stripped, completion order
    std::vector<std::string> failed;
};

/// Blocks until the frontier is exhausted or `stop` fires; closes `source`
/// before returning. Throws std::invalid_argument for an empty seed list.
TraversalReport run_traversal(const std::vector<std::string>& seeds,
                              const std::vector<LinkExtractor>& extractors, TripleSource& source,
                              LinkQueue& queue, Dereferencer& dereferencer,
                              const TraversalOptions& options, std::stop_token stop = {});

}  // namespace ltqp
