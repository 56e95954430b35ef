#include "ltqp/traversal.hpp"

#include <algorithm>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ltqp {

namespace {

class Loop {
public:
    Loop(const std::vector<LinkExtractor>& extractors, TripleSource& source, LinkQueue& queue,
         Dereferencer& dereferencer, const TraversalOptions& options)
        : extractors_(extractors), source_(source), queue_(queue), deref_(dereferencer),
          options_(options) {}

    void worker(std::stop_token stop) {
        while (true) {
            std::optional<Link> link;
            {
                std::unique_lock lock(mu_);
                cv_.wait(lock, stop, [&] { return done_ || !queue_.empty() || in_flight_ == 0; });
                if (stop.stop_requested() || done_) return;
                link = queue_.try_dequeue();
                if (!link) {
                    if (in_flight_ == 0) {
                        done_ = true;
                        cv_.notify_all();
                        return;
                    }
                    continue;
                }
                ++in_flight_;
            }
            process(*link);
            {
                std::lock_guard lock(mu_);
                --in_flight_;
            }
            cv_.notify_all();
        }
    }

    void finish(TraversalReport& report) {
        std::lock_guard lock(mu_);
        report.documents_fetched = fetched_.size();
        report.errors_ignored = failed_.size();
        report.fetched = std::move(fetched_);
        report.failed = std::move(failed_);
        report.fatal_error = fatal_;
    }

    std::stop_source& internal_stop() { return internal_; }

private:
    void process(const Link& link) {
        DereferenceResult result = deref_.dereference(link.target);
        const ParsedDocument* doc = result.document();
        if (!doc) {
            std::lock_guard lock(mu_);
            failed_.push_back(result.requested_url);
            if (!deref_.policy().lenient && !fatal_) {
                fatal_ = result.requested_url + ": " + result.describe();
                internal_.request_stop();
            }
            return;
        }
        source_.append(doc->triples);

        ExtractionContext ctx;
        ctx.bgp = options_.bgp;
        ctx.requested_iri = link.target;
        ctx.phi = options_.phi;
        ctx.excluded_namespaces = options_.excluded_namespaces;
        for (const auto& extractor : extractors_) {
            for (auto& found : extractor.extract(*doc, ctx)) queue_.enqueue(std::move(found));
        }
        std::lock_guard lock(mu_);
        fetched_.push_back(result.requested_url);
    }

    const std::vector<LinkExtractor>& extractors_;
    TripleSource& source_;
    LinkQueue& queue_;
    Dereferencer& deref_;
    const TraversalOptions& options_;

    std::mutex mu_;
    std::condition_variable_any cv_;
    std::size_t in_flight_ = 0;
    bool done_ = false;
    std::vector<std::string> fetched_;
    std::vector<std::string> failed_;
    std::optional<std::string> fatal_;
    std::stop_source internal_;
};

}  // namespace

TraversalReport run_traversal(const std::vector<std::string>& seeds,
                              const std::vector<LinkExtractor>& extractors, TripleSource& source,
                              LinkQueue& queue, Dereferencer& dereferencer,
                              const TraversalOptions& options, std::stop_token stop) {
    if (seeds.empty()) {
        source.close();
        throw std::invalid_argument("no seeds");
    }
    auto start = std::chrono::steady_clock::now();
    std::size_t requests_before = dereferencer.wire_requests();

    Loop loop(extractors, source, queue, dereferencer, options);
    for (const auto& seed : seeds) queue.enqueue(Link{seed, "", "seed", 0});

    std::stop_callback forward(stop, [&] { loop.internal_stop().request_stop(); });
    std::size_t k = std::max<std::size_t>(1, options.concurrency);
    {
        std::vector<std::jthread> workers;
        workers.reserve(k);
        auto token = loop.internal_stop().get_token();
        for (std::size_t i = 0; i < k; ++i) workers.emplace_back([&loop, token] { loop.worker(token); });
    }
    source.close();

    TraversalReport report;
    loop.finish(report);
    report.wire_requests = dereferencer.wire_requests() - requests_before;
    report.wall_time =
        std::chrono::duration_cast<Millis>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace ltqp
