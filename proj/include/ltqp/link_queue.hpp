#pragma once
// Traversal frontier: priority-then-FIFO order with a seen-set keyed on the
// fragment-stripped target, so no document is queued twice per execution.

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

namespace ltqp {

struct Link {
    std::string target;           // as discovered, fragment kept
    std::string source_document;  // empty for seeds
    std::string extractor_label;
    int priority = 1;             // lower dequeues first
};

class LinkQueue {
public:
    /// Optional override of Link::priority, applied on enqueue.
    using PriorityHook = std::function<int(const Link&)>;

    LinkQueue() = default;
    explicit LinkQueue(PriorityHook hook) : hook_(std::move(hook)) {}

    /// True iff the stripped target was unseen; marks it seen either way.
    bool enqueue(Link link);
    std::optional<Link> try_dequeue();

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::size_t seen_count() const;
    bool seen(const std::string& iri) const;

private:
    struct Entry {
        int priority;
        std::uint64_t sequence;
        Link link;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.priority != b.priority) return a.priority > b.priority;
            return a.sequence > b.sequence;
        }
    };

    mutable std::mutex mu_;
    std::priority_queue<Entry, std::vector<Entry>, Later> pending_;
    std::unordered_set<std::string> seen_;
    std::uint64_t next_sequence_ = 0;
    PriorityHook hook_;
};

}  // namespace ltqp
