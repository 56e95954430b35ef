#pragma once
// Ground truth: naive nested-loop BGP evaluation over a fixed triple set,
// deliberately sharing nothing with the pipelined executor.

#include <set>
#include <vector>

#include "ltqp/bench/generator.hpp"
#include "ltqp/query.hpp"

namespace ltqp::bench {

using ResultSet = std::set<SolutionMapping>;

/// Projected solutions of q's bgp over `graph` (LIMIT ignored).
ResultSet oracle_evaluate(const Query& q, const std::vector<Triple>& graph);
ResultSet oracle_evaluate(const Query& q, const GeneratedEnvironment& env);

/// F1 as a percentage in [0, 100]; see README for the empty-set conventions.
double accuracy_f1(const ResultSet& expected, const ResultSet& actual);

ResultSet to_set(const std::vector<SolutionMapping>& mappings);

}  // namespace ltqp::bench
