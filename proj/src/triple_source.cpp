#include "ltqp/triple_source.hpp"

namespace ltqp {

TripleSource::Next TripleSource::Cursor::next(std::stop_token stop,
                                              std::optional<Clock::time_point> deadline) {
    std::unique_lock lock(source_->mu_);
    auto ready = [&] { return position_ < source_->store_.size() || source_->closed_; };
    if (deadline) {
        source_->cv_.wait_until(lock, stop, *deadline, ready);
    } else {
        source_->cv_.wait(lock, stop, ready);
    }
    if (position_ < source_->store_.size()) return {Status::Item, &source_->store_[position_++]};
    if (source_->closed_) return {Status::End};
    return {Status::Interrupted};
}

TripleSource::Next TripleSource::Cursor::poll() {
    std::lock_guard lock(source_->mu_);
    if (position_ < source_->store_.size()) return {Status::Item, &source_->store_[position_++]};
    if (source_->closed_) return {Status::End};
    return {Status::Interrupted};
}

void TripleSource::append(std::vector<Triple> triples) {
    if (triples.empty()) return;
    {
        std::lock_guard lock(mu_);
        for (auto& t : triples) {
            std::size_t index = store_.size();
            store_.push_back(std::move(t));
            const Triple& stored = store_.back();
            by_subject_[stored.subject].push_back(index);
            by_predicate_[stored.predicate].push_back(index);
            by_object_[stored.object].push_back(index);
        }
    }
    cv_.notify_all();
}

void TripleSource::close() {
    {
        std::lock_guard lock(mu_);
        closed_ = true;
    }
    cv_.notify_all();
}

bool TripleSource::closed() const {
    std::lock_guard lock(mu_);
    return closed_;
}

std::size_t TripleSource::size() const {
    std::lock_guard lock(mu_);
    return store_.size();
}

std::vector<const Triple*> TripleSource::match(const std::optional<Term>& s,
                                               const std::optional<Term>& p,
                                               const std::optional<Term>& o) const {
    std::lock_guard lock(mu_);
    auto accepts = [&](const Triple& t) {
        return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
    };
    const std::vector<std::size_t>* candidates = nullptr;
    static const std::vector<std::size_t> kNone;
    auto lookup = [&](const auto& index, const Term& key) {
        auto it = index.find(key);
        return it == index.end() ? &kNone : &it->second;
    };
    if (s) candidates = lookup(by_subject_, *s);
    else if (o) candidates = lookup(by_object_, *o);
    else if (p) candidates = lookup(by_predicate_, *p);

    std::vector<const Triple*> out;
    if (candidates) {
        for (std::size_t i : *candidates) {
            if (accepts(store_[i])) out.push_back(&store_[i]);
        }
    } else {
        for (const auto& t : store_) out.push_back(&t);
    }
    return out;
}

std::vector<Triple> TripleSource::snapshot() const {
    std::lock_guard lock(mu_);
    return {store_.begin(), store_.end()};
}

}  // namespace ltqp
