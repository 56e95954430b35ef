#pragma once
// Join ordering. plan_bgp is the zero-knowledge heuristic used during
// traversal; plan_by_cardinality orders by exact counts over a finished store.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ltqp/extractors.hpp"
#include "ltqp/query.hpp"
#include "ltqp/triple_source.hpp"

namespace ltqp {

enum class JoinKind { SymmetricHash, CartesianGuard };

struct PlanStep {
    std::size_t pattern_index;  // position in the source bgp
    TriplePattern pattern;
    JoinKind join = JoinKind::SymmetricHash;  // join with the steps before; unused for step 0
    std::vector<std::string> join_variables;
};

struct PhysicalPlan {
    std::vector<PlanStep> steps;

    std::vector<TriplePattern> ordered_patterns() const;
    std::vector<std::size_t> order() const;
};

/// Greedy order. Candidates are patterns sharing a variable with earlier
/// steps (any pattern if none does); among them, lowest key wins:
/// (contains a seed IRI, rdf:type rank, unbound variable count, textual index).
/// rdf:type patterns go last unless the mode filters the type index, then first.
PhysicalPlan plan_bgp(const Bgp& bgp, const std::set<std::string>& seeds, DiscoveryMode mode);

/// Greedy order by ascending number of matching triples in `source`,
/// keeping consecutive steps connected where the join graph allows.
PhysicalPlan plan_by_cardinality(const Bgp& bgp, const TripleSource& source);

/// Plan for an explicit permutation of the bgp's patterns.
PhysicalPlan plan_in_order(const Bgp& bgp, const std::vector<std::size_t>& order);

}  // namespace ltqp
