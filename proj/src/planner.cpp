#include "ltqp/planner.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace ltqp {

namespace {

bool mentions_seed(const TriplePattern& p, const std::set<std::string>& seeds) {
    auto hit = [&](const NodeSlot& slot) {
        auto* t = std::get_if<Term>(&slot);
        return t && t->is_iri() && (seeds.contains(t->value) || seeds.contains(strip_fragment(t->value)));
    };
    return hit(p.subject) || hit(p.object);
}

std::size_t unbound_count(const TriplePattern& p, const std::set<std::string>& bound) {
    std::size_t n = 0;
    for (const auto& v : p.variables()) n += bound.contains(v) ? 0 : 1;
    return n;
}

bool connected(const TriplePattern& p, const std::set<std::string>& bound) {
    for (const auto& v : p.variables()) {
        if (bound.contains(v)) return true;
    }
    return false;
}

/// Greedy selection shared by both planners: `better(a, b)` compares
/// candidate pattern indexes given the current bound set.
template <typename Better>
std::vector<std::size_t> greedy(const Bgp& bgp, Better better) {
    std::vector<std::size_t> order;
    std::vector<bool> used(bgp.patterns.size(), false);
    std::set<std::string> bound;
    while (order.size() < bgp.patterns.size()) {
        bool any_connected = false;
        for (std::size_t i = 0; i < bgp.patterns.size(); ++i) {
            if (!used[i] && connected(bgp.patterns[i], bound)) any_connected = true;
        }
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < bgp.patterns.size(); ++i) {
            if (used[i]) continue;
            if (any_connected && !connected(bgp.patterns[i], bound)) continue;
            if (!best || better(i, *best, bound)) best = i;
        }
        used[*best] = true;
        order.push_back(*best);
        for (const auto& v : bgp.patterns[*best].variables()) bound.insert(v);
    }
    return order;
}

std::size_t cardinality(const TriplePattern& p, const TripleSource& source) {
    std::optional<Term> s, pr, o;
    if (auto* t = std::get_if<Term>(&p.subject)) s = *t;
    if (auto* t = std::get_if<Term>(&p.object)) o = *t;
    if (auto* path = std::get_if<PredicatePath>(&p.predicate); path && path->alternatives.size() == 1)
        pr = Term::iri(path->alternatives.front());
    std::unordered_set<Triple> distinct;
    for (const Triple* t : source.match(s, pr, o)) {
        if (match_pattern(*t, p)) distinct.insert(*t);
    }
    return distinct.size();
}

}  // namespace

std::vector<TriplePattern> PhysicalPlan::ordered_patterns() const {
    std::vector<TriplePattern> out;
    for (const auto& s : steps) out.push_back(s.pattern);
    return out;
}

std::vector<std::size_t> PhysicalPlan::order() const {
    std::vector<std::size_t> out;
    for (const auto& s : steps) out.push_back(s.pattern_index);
    return out;
}

PhysicalPlan plan_in_order(const Bgp& bgp, const std::vector<std::size_t>& order) {
    PhysicalPlan plan;
    std::set<std::string> bound;
    for (std::size_t index : order) {
        PlanStep step{index, bgp.patterns.at(index), JoinKind::SymmetricHash, {}};
        for (const auto& v : step.pattern.variables()) {
            if (bound.contains(v)) step.join_variables.push_back(v);
        }
        step.join = step.join_variables.empty() && !plan.steps.empty() ? JoinKind::CartesianGuard
                                                                        : JoinKind::SymmetricHash;
        for (const auto& v : step.pattern.variables()) bound.insert(v);
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

PhysicalPlan plan_bgp(const Bgp& bgp, const std::set<std::string>& seeds, DiscoveryMode mode) {
    bool type_first = phi_mode_for(mode) == PhiMode::QueryClass;
    auto key = [&](std::size_t i, const std::set<std::string>& bound) {
        const auto& p = bgp.patterns[i];
        int type_rank = p.is_type_pattern() ? (type_first ? 0 : 2) : 1;
        return std::make_tuple(mentions_seed(p, seeds) ? 0 : 1, type_rank, unbound_count(p, bound), i);
    };
    auto order = greedy(bgp, [&](std::size_t a, std::size_t b, const std::set<std::string>& bound) {
        return key(a, bound) < key(b, bound);
    });
    return plan_in_order(bgp, order);
}

PhysicalPlan plan_by_cardinality(const Bgp& bgp, const TripleSource& source) {
    std::vector<std::size_t> counts;
    for (const auto& p : bgp.patterns) counts.push_back(cardinality(p, source));
    auto order = greedy(bgp, [&](std::size_t a, std::size_t b, const std::set<std::string>&) {
        return std::tie(counts[a], a) < std::tie(counts[b], b);
    });
    return plan_in_order(bgp, order);
}

}  // namespace ltqp
