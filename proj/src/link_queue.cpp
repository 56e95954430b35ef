#include "ltqp/link_queue.hpp"

#include "ltqp/rdf.hpp"

namespace ltqp {

bool LinkQueue::enqueue(Link link) {
    std::string key = strip_fragment(link.target);
    std::lock_guard lock(mu_);
    if (!seen_.insert(std::move(key)).second) return false;
    int priority = hook_ ? hook_(link) : link.priority;
    pending_.push(Entry{priority, next_sequence_++, std::move(link)});
    return true;
}

std::optional<Link> LinkQueue::try_dequeue() {
    std::lock_guard lock(mu_);
    if (pending_.empty()) return std::nullopt;
    Link link = pending_.top().link;
    pending_.pop();
    return link;
}

std::size_t LinkQueue::size() const {
    std::lock_guard lock(mu_);
    return pending_.size();
}

std::size_t LinkQueue::seen_count() const {
    std::lock_guard lock(mu_);
    return seen_.size();
}

bool LinkQueue::seen(const std::string& iri) const {
    std::lock_guard lock(mu_);
    return seen_.contains(strip_fragment(iri));
}

}  // namespace ltqp
