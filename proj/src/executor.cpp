#include "ltqp/executor.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ltqp {

namespace {

using Row = std::vector<const Term*>;

struct KeyHash {
    std::size_t operator()(const Row& key) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (const Term* t : key) h = (h ^ hash_term(*t)) * 0x100000001b3ULL;
        return h;
    }
};

struct KeyEq {
    bool operator()(const Row& a, const Row& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (*a[i] != *b[i]) return false;
        }
        return true;
    }
};

struct TriplePtrHash {
    std::size_t operator()(const Triple* t) const { return hash_triple(*t); }
};
struct TriplePtrEq {
    bool operator()(const Triple* a, const Triple* b) const { return *a == *b; }
};

using Table = std::unordered_map<Row, std::vector<Row>, KeyHash, KeyEq>;

/// One position of a compiled pattern: a constant, a variable slot, or (for
/// predicates) a set of alternative IRIs.
struct Slot {
    int var = -1;
    std::optional<Term> constant;
    std::unordered_set<std::string> alternatives;
};

struct Leaf {
    Slot s, p, o;
};

class Pipeline {
public:
    Pipeline(const Query& query, const PhysicalPlan& plan) : query_(query) {
        for (const auto& step : plan.steps) {
            Leaf leaf;
            leaf.s = node_slot(step.pattern.subject);
            leaf.o = node_slot(step.pattern.object);
            if (auto* v = std::get_if<Variable>(&step.pattern.predicate)) {
                leaf.p.var = var_id(v->name);
            } else {
                for (const auto& iri : std::get<PredicatePath>(step.pattern.predicate).alternatives)
                    leaf.p.alternatives.insert(iri);
            }
            leaves_.push_back(std::move(leaf));
            std::vector<int> key;
            for (const auto& v : step.join_variables) key.push_back(var_id(v));
            keys_.push_back(std::move(key));
        }
        for (const auto& v : query.projection) projection_.emplace_back(v, var_id(v));
        left_.resize(leaves_.size());
        right_.resize(leaves_.size());
        stats.leaf_outputs.assign(leaves_.size(), 0);
        stats.join_outputs.assign(leaves_.size(), 0);
    }

    std::size_t size() const { return leaves_.size(); }

    /// Feeds one new distinct triple through every leaf.
    void push(const Triple& t) {
        for (std::size_t i = 0; i < leaves_.size() && !halted; ++i) {
            auto row = match(leaves_[i], t);
            if (!row) continue;
            ++stats.leaf_outputs[i];
            if (i == 0) {
                ++stats.join_outputs[0];
                feed_left(1, std::move(*row));
            } else {
                feed_right(i, std::move(*row));
            }
        }
    }

    /// The empty bgp has exactly one solution, the empty mapping.
    void push_empty() { feed_left(leaves_.size() + 1, Row(vars_.size(), nullptr)); }

    std::function<void(SolutionMapping)> emit;
    bool halted = false;
    ExecutionStats stats;

private:
    int var_id(const std::string& name) {
        auto [it, inserted] = vars_.try_emplace(name, static_cast<int>(vars_.size()));
        return it->second;
    }

    Slot node_slot(const NodeSlot& slot) {
        Slot out;
        if (auto* v = std::get_if<Variable>(&slot)) out.var = var_id(v->name);
        else out.constant = std::get<Term>(slot);
        return out;
    }

    bool bind(Row& row, const Slot& slot, const Term& term) const {
        if (slot.var >= 0) {
            const Term*& cell = row[slot.var];
            if (cell && *cell != term) return false;
            cell = &term;
            return true;
        }
        if (slot.constant) return *slot.constant == term;
        return term.is_iri() && slot.alternatives.contains(term.value);
    }

    std::optional<Row> match(const Leaf& leaf, const Triple& t) const {
        Row row(vars_.size(), nullptr);
        if (!bind(row, leaf.s, t.subject) || !bind(row, leaf.p, t.predicate) || !bind(row, leaf.o, t.object))
            return std::nullopt;
        return row;
    }

    Row key_of(const Row& row, std::size_t step) const {
        Row key;
        key.reserve(keys_[step].size());
        for (int v : keys_[step]) key.push_back(row[v]);
        return key;
    }

    static Row merge(const Row& left, const Row& right) {
        Row out = left;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!out[i]) out[i] = right[i];
        }
        return out;
    }

    void produced(std::size_t step, Row row) {
        ++stats.join_outputs[step];
        if (step + 1 < leaves_.size()) ++stats.intermediate_results;
        feed_left(step + 1, std::move(row));
    }

    void feed_left(std::size_t step, Row row) {
        if (halted) return;
        if (step >= leaves_.size()) {
            output(row);
            return;
        }
        Row key = key_of(row, step);
        auto& bucket = left_[step][key];
        bucket.push_back(row);
        auto it = right_[step].find(key);
        if (it == right_[step].end()) return;
        for (std::size_t i = 0; i < it->second.size() && !halted; ++i) produced(step, merge(row, it->second[i]));
    }

    void feed_right(std::size_t step, Row row) {
        if (halted) return;
        Row key = key_of(row, step);
        right_[step][key].push_back(row);
        auto it = left_[step].find(key);
        if (it == left_[step].end()) return;
        for (std::size_t i = 0; i < it->second.size() && !halted; ++i) produced(step, merge(it->second[i], row));
    }

    void output(const Row& row) {
        SolutionMapping mu;
        for (const auto& [name, id] : projection_) {
            if (row[id]) mu.emplace(name, *row[id]);
        }
        if (query_.distinct && !seen_.insert(mu).second) return;
        emit(std::move(mu));
    }

    const Query& query_;
    std::map<std::string, int> vars_;
    std::vector<Leaf> leaves_;
    std::vector<std::vector<int>> keys_;
    std::vector<std::pair<std::string, int>> projection_;
    std::vector<Table> left_;
    std::vector<Table> right_;
    std::set<SolutionMapping> seen_;
};

}  // namespace

ExecutionResult execute(const Query& query, const PhysicalPlan& plan, const TripleSource& source,
                        std::stop_source stop, const ExecutionOptions& options,
                        const ResultCallback& on_result) {
    auto start = options.start.value_or(Clock::now());
    auto deadline = start + options.timeout;
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    ExecutionResult result;
    Pipeline pipeline(query, plan);
    pipeline.emit = [&](SolutionMapping mu) {
        double t = elapsed_ms();
        if (on_result) on_result(mu, t);
        result.mappings.push_back(std::move(mu));
        result.arrival_ms.push_back(t);
        if (query.limit && result.mappings.size() >= *query.limit) {
            result.limit_reached = true;
            pipeline.halted = true;
        }
    };

    if (query.limit && *query.limit == 0) {
        result.limit_reached = true;
        pipeline.halted = true;
    } else if (pipeline.size() == 0) {
        pipeline.push_empty();
    }

    std::unordered_set<const Triple*, TriplePtrHash, TriplePtrEq> seen;
    auto cursor = source.cursor();
    auto token = stop.get_token();
    while (!pipeline.halted && pipeline.size() > 0) {
        auto next = cursor.next(token, deadline);
        if (next.status == TripleSource::Status::End) break;
        if (next.status == TripleSource::Status::Interrupted) {
            if (Clock::now() >= deadline) result.timed_out = true;
            break;
        }
        if (!seen.insert(next.triple).second) continue;
        ++pipeline.stats.triples_consumed;
        pipeline.push(*next.triple);
    }
    if (result.limit_reached || result.timed_out) stop.request_stop();

    result.stats = std::move(pipeline.stats);
    result.total_ms = elapsed_ms();
    return result;
}

}  // namespace ltqp
