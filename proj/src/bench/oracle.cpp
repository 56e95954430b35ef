#include "ltqp/bench/oracle.hpp"

#include <functional>

namespace ltqp::bench {

namespace {

using Binding = std::map<std::string, Term>;

bool unify_node(Binding& b, const NodeSlot& slot, const Term& term) {
    if (const auto* constant = std::get_if<Term>(&slot)) return *constant == term;
    const std::string& name = std::get<Variable>(slot).name;
    auto it = b.find(name);
    if (it == b.end()) {
        b.emplace(name, term);
        return true;
    }
    return it->second == term;
}

bool unify_predicate(Binding& b, const PredicateSlot& slot, const Term& term) {
    if (const auto* v = std::get_if<Variable>(&slot)) return unify_node(b, NodeSlot{*v}, term);
    if (!term.is_iri()) return false;
    for (const auto& alt : std::get<PredicatePath>(slot).alternatives) {
        if (alt == term.value) return true;
    }
    return false;
}

}  // namespace

ResultSet oracle_evaluate(const Query& q, const std::vector<Triple>& graph) {
    ResultSet out;
    const auto& patterns = q.bgp.patterns;
    // triples each pattern can match on its own; the nested loop only revisits these
    std::vector<std::vector<const Triple*>> candidates(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        for (const auto& t : graph) {
            Binding scratch;
            if (unify_node(scratch, patterns[i].subject, t.subject) &&
                unify_predicate(scratch, patterns[i].predicate, t.predicate) &&
                unify_node(scratch, patterns[i].object, t.object))
                candidates[i].push_back(&t);
        }
    }
    std::function<void(std::size_t, const Binding&)> descend = [&](std::size_t depth, const Binding& b) {
        if (depth == patterns.size()) {
            SolutionMapping mu;
            for (const auto& v : q.projection) {
                if (auto it = b.find(v); it != b.end()) mu.emplace(v, it->second);
            }
            out.insert(std::move(mu));
            return;
        }
        const auto& p = patterns[depth];
        for (const Triple* t : candidates[depth]) {
            Binding next = b;
            if (unify_node(next, p.subject, t->subject) && unify_predicate(next, p.predicate, t->predicate) &&
                unify_node(next, p.object, t->object))
                descend(depth + 1, next);
        }
    };
    descend(0, {});
    return out;
}

ResultSet oracle_evaluate(const Query& q, const GeneratedEnvironment& env) {
    return oracle_evaluate(q, env.union_graph);
}

double accuracy_f1(const ResultSet& expected, const ResultSet& actual) {
    std::size_t hits = 0;
    for (const auto& mu : actual) hits += expected.contains(mu) ? 1 : 0;
    double precision = actual.empty() ? (expected.empty() ? 1.0 : 0.0)
                                      : static_cast<double>(hits) / static_cast<double>(actual.size());
    double recall = expected.empty() ? 1.0 : static_cast<double>(hits) / static_cast<double>(expected.size());
    if (precision + recall == 0.0) return 0.0;
    return 200.0 * precision * recall / (precision + recall);
}

ResultSet to_set(const std::vector<SolutionMapping>& mappings) {
    return ResultSet(mappings.begin(), mappings.end());
}

}  // namespace ltqp::bench
