#pragma once
// Serving a generated environment: an HTTP server for end-to-end runs and an
// in-process Fetcher with the same behaviour for fast tests.

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "ltqp/bench/generator.hpp"
#include "ltqp/dereferencer.hpp"

namespace ltqp::bench {

/// Path (relative to the base URL) -> Turtle text, plus injected failures.
struct DocumentTable {
    std::map<std::string, std::string> texts;
    std::map<std::string, int> faults;  // path -> HTTP status served instead
    std::chrono::milliseconds delay{0};

    /// {status, body} for a base-relative path.
    std::pair<int, std::string> lookup(const std::string& path) const;
};

class DocumentServer {
public:
    /// Binds immediately; port 0 picks a free port. Throws std::runtime_error
    /// when binding fails.
    DocumentServer(std::shared_ptr<const DocumentTable> table, const std::string& host = "127.0.0.1",
                   int port = 0);
    ~DocumentServer();
    DocumentServer(const DocumentServer&) = delete;
    DocumentServer& operator=(const DocumentServer&) = delete;

    int port() const { return port_; }
    std::string base_url() const;
    /// Swaps the served table (e.g. after generating with the bound port).
    void set_table(std::shared_ptr<const DocumentTable> table);
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::string host_;
    int port_ = 0;
    std::thread thread_;
};

class EnvironmentFetcher : public Fetcher {
public:
    EnvironmentFetcher(std::string base_url, std::shared_ptr<const DocumentTable> table)
        : base_(std::move(base_url)), table_(std::move(table)) {}

    FetchResponse get(const std::string& url, const FetchPolicy& policy) override;

private:
    std::string base_;
    std::shared_ptr<const DocumentTable> table_;
};

std::shared_ptr<DocumentTable> make_table(const GeneratedEnvironment& env);

}  // namespace ltqp::bench
