#include "ltqp/engine.hpp"

#include <json.hpp>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ltqp {

namespace {

std::vector<std::string> resolve_seeds(const Query& query, std::vector<std::string> seeds) {
    if (seeds.empty()) {
        auto fallback = query_seed_iris(query);
        seeds.assign(fallback.begin(), fallback.end());
    }
    if (seeds.empty()) throw std::invalid_argument("no seeds");
    return seeds;
}

std::set<std::string> stripped(const std::vector<std::string>& seeds) {
    std::set<std::string> out;
    for (const auto& s : seeds) out.insert(strip_fragment(s));
    return out;
}

struct Setup {
    Setup(const Query& query, const EngineConfig& config)
        : queue(config.priority_hook),
          extractors(make_extractors(config.reachability, config.discovery)) {
        options.concurrency = config.concurrency;
        options.bgp = &query.bgp;
        options.phi = phi_mode_for(config.discovery);
        options.excluded_namespaces = config.excluded_namespaces;
    }

    TripleSource source;
    LinkQueue queue;
    std::vector<LinkExtractor> extractors;
    TraversalOptions options;
};

}  // namespace

QueryRun run_query(const Query& query, std::vector<std::string> seeds, Fetcher& fetcher,
                   const EngineConfig& config, const ResultCallback& on_result) {
    auto start = Clock::now();
    QueryRun run;
    run.seeds = resolve_seeds(query, std::move(seeds));
    run.plan = plan_bgp(query.bgp, stripped(run.seeds), config.discovery);

    Setup setup(query, config);
    Dereferencer deref(fetcher, config.fetch);
    std::stop_source stop;
    std::jthread traversal([&] {
        run.traversal = run_traversal(run.seeds, setup.extractors, setup.source, setup.queue, deref,
                                      setup.options, stop.get_token());
    });

    ExecutionOptions exec;
    exec.timeout = config.timeout;
    exec.start = start;
    run.execution = execute(query, run.plan, setup.source, stop, exec, on_result);
    stop.request_stop();
    traversal.join();
    run.execution.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return run;
}

QueryRun evaluate_two_phase(const Query& query, std::vector<std::string> seeds, Fetcher& fetcher,
                            const EngineConfig& config) {
    auto start = Clock::now();
    QueryRun run;
    run.seeds = resolve_seeds(query, std::move(seeds));

    Setup setup(query, config);
    Dereferencer deref(fetcher, config.fetch);
    std::stop_source stop;
    {
        std::jthread timer([&](std::stop_token done) {
            std::mutex mu;
            std::condition_variable_any cv;
            std::unique_lock lock(mu);
            if (!cv.wait_until(lock, done, start + config.timeout, [] { return false; }) &&
                !done.stop_requested())
                stop.request_stop();
        });
        run.traversal = run_traversal(run.seeds, setup.extractors, setup.source, setup.queue, deref,
                                      setup.options, stop.get_token());
    }
    bool crawl_timed_out = stop.stop_requested();

    run.plan = plan_by_cardinality(query.bgp, setup.source);
    ExecutionOptions exec;
    exec.timeout = config.timeout;
    exec.start = start;
    run.execution = execute(query, run.plan, setup.source, std::stop_source{}, exec);
    run.execution.timed_out = run.execution.timed_out || crawl_timed_out;
    return run;
}

std::string mapping_to_json(const SolutionMapping& mu) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [name, term] : mu) {
        if (is_blank_variable(name)) continue;
        j[name] = to_ntriples(term);
    }
    return j.dump();
}

std::string summary_to_json(const QueryRun& run) {
    const auto& e = run.execution;
    nlohmann::ordered_json s;
    s["count"] = e.mappings.size();
    s["tFirst"] = e.t_first_ms() ? nlohmann::ordered_json(*e.t_first_ms()) : nlohmann::ordered_json();
    s["tLast"] = e.t_last_ms() ? nlohmann::ordered_json(*e.t_last_ms()) : nlohmann::ordered_json();
    s["totalMs"] = e.total_ms;
    s["wireRequests"] = run.traversal.wire_requests;
    s["documents"] = run.traversal.documents_fetched;
    s["errorsIgnored"] = run.traversal.errors_ignored;
    s["timedOut"] = e.timed_out;
    if (run.traversal.fatal_error) s["error"] = *run.traversal.fatal_error;
    nlohmann::ordered_json out;
    out["summary"] = s;
    return out.dump();
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string csv_header(const std::vector<std::string>& projection) {
    std::string out;
    for (std::size_t i = 0; i < projection.size(); ++i) {
        if (i) out += ',';
        out += csv_field(projection[i]);
    }
    return out;
}

std::string mapping_to_csv(const SolutionMapping& mu, const std::vector<std::string>& projection) {
    std::string out;
    for (std::size_t i = 0; i < projection.size(); ++i) {
        if (i) out += ',';
        if (auto it = mu.find(projection[i]); it != mu.end()) out += csv_field(to_ntriples(it->second));
    }
    return out;
}

}  // namespace ltqp
