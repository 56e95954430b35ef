#pragma once
// Continuously growing triple store fed by the traversal loop.
//
// Appends form a single total order. A cursor replays everything appended
// before it was opened and then follows live appends, each triple exactly
// once, until the source is closed and drained. Stored triples never move,
// so pointers handed out by cursors and lookups stay valid for the source's
// lifetime.

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>
#include <stop_token>
#include <unordered_map>
#include <vector>

#include "ltqp/rdf.hpp"

namespace ltqp {

class TripleSource {
public:
    using Clock = std::chrono::steady_clock;

    enum class Status { Item, End, Interrupted };

    struct Next {
        Status status;
        const Triple* triple = nullptr;
    };

    class Cursor {
    public:
        /// Blocks until a triple is available, the source is closed and
        /// drained (End), or the stop token / deadline fires (Interrupted).
        Next next(std::stop_token stop = {}, std::optional<Clock::time_point> deadline = {});
        /// Non-blocking; Interrupted when nothing is available yet.
        Next poll();
        std::size_t position() const { return position_; }

    private:
        friend class TripleSource;
        explicit Cursor(const TripleSource& source) : source_(&source) {}
        const TripleSource* source_;
        std::size_t position_ = 0;
    };

    TripleSource() = default;
    TripleSource(const TripleSource&) = delete;
    TripleSource& operator=(const TripleSource&) = delete;

    /// Appends a batch contiguously in the total order.
    void append(std::vector<Triple> triples);
    void close();
    bool closed() const;
    std::size_t size() const;

    Cursor cursor() const { return Cursor(*this); }

    /// Wildcards are std::nullopt. Uses the S/P/O index of the first bound position.
    std::vector<const Triple*> match(const std::optional<Term>& s, const std::optional<Term>& p,
                                     const std::optional<Term>& o) const;
    std::vector<Triple> snapshot() const;

private:
    mutable std::mutex mu_;
    mutable std::condition_variable_any cv_;
    std::deque<Triple> store_;
    std::unordered_map<Term, std::vector<std::size_t>> by_subject_;
    std::unordered_map<Term, std::vector<std::size_t>> by_predicate_;
    std::unordered_map<Term, std::vector<std::size_t>> by_object_;
    bool closed_ = false;
};

}  // namespace ltqp
