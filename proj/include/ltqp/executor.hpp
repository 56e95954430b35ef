#pragma once
// Pipelined BGP evaluation over a growing TripleSource: one scan per plan
// step, a left-deep chain of symmetric hash joins, DISTINCT and LIMIT.

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stop_token>
#include <vector>

#include "ltqp/dereferencer.hpp"
#include "ltqp/planner.hpp"
#include "ltqp/query.hpp"
#include "ltqp/triple_source.hpp"

namespace ltqp {

using Clock = std::chrono::steady_clock;

struct ExecutionOptions {
    Millis timeout{120000};
    /// t = 0 for arrival times. Defaults to the moment execute() is entered.
    std::optional<Clock::time_point> start;
};

struct ExecutionStats {
    std::size_t triples_consumed = 0;  // distinct triples read from the source
    std::vector<std::size_t> leaf_outputs;
    std::vector<std::size_t> join_outputs;  // join_outputs[i] joins steps 0..i; [0] equals leaf 0
    std::size_t intermediate_results = 0;   // rows produced by every join except the last
};

struct ExecutionResult {
    std::vector<SolutionMapping> mappings;  // projected, in emission order
    std::vector<double> arrival_ms;         // one per mapping
    double total_ms = 0;                    // stream end
    bool timed_out = false;
    bool limit_reached = false;
    ExecutionStats stats;

    std::optional<double> t_first_ms() const {
        return arrival_ms.empty() ? std::nullopt : std::optional<double>(arrival_ms.front());
    }
    std::optional<double> t_last_ms() const {
        return arrival_ms.empty() ? std::nullopt : std::optional<double>(arrival_ms.back());
    }
};

using ResultCallback = std::function<void(const SolutionMapping&, double arrival_ms)>;

/// Consumes `source` until it is closed and drained, LIMIT is reached, the
/// timeout expires or `stop` is requested externally. Requests `stop` itself
/// on LIMIT and timeout so the traversal feeding the source halts.
ExecutionResult execute(const Query& query, const PhysicalPlan& plan, const TripleSource& source,
                        std::stop_source stop, const ExecutionOptions& options = {},
                        const ResultCallback& on_result = {});

}  // namespace ltqp
