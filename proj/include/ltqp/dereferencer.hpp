#pragma once
// Dereferencing: one wire request per Fetcher::get call, redirect following,
// Turtle parsing and a per-execution cache.

#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ltqp/rdf.hpp"

namespace ltqp {

using Millis = std::chrono::milliseconds;

struct FetchPolicy {
    std::string accept = "text/turtle";
    Millis timeout{5000};
    bool lenient = true;
    int max_redirects = 5;
};

/// Result of a single wire request. `status == 0` means a network failure.
struct FetchResponse {
    int status = 0;
    std::string body;
    std::string location;  // Location header for redirects
    std::string network_error;
};

class Fetcher {
public:
    virtual ~Fetcher() = default;
    /// `url` is absolute and fragment-free. Must be safe to call concurrently.
    virtual FetchResponse get(const std::string& url, const FetchPolicy& policy) = 0;
};

/// HTTP/1.1 GET over a small keep-alive connection pool per origin.
class HttpFetcher : public Fetcher {
public:
    HttpFetcher();
    ~HttpFetcher() override;
    FetchResponse get(const std::string& url, const FetchPolicy& policy) override;

private:
    struct Pool;
    std::unique_ptr<Pool> pool_;
};

struct FetchSuccess {
    std::shared_ptr<const ParsedDocument> document;
};
struct HttpError {
    int code;
};
struct NetworkError {
    std::string message;
};
struct DocumentParseError {
    std::string message;
};

struct DereferenceResult {
    std::string requested_url;
    std::string final_url;
    std::variant<FetchSuccess, HttpError, NetworkError, DocumentParseError> status;
    Millis elapsed{0};

    bool ok() const { return std::holds_alternative<FetchSuccess>(status); }
    const ParsedDocument* document() const {
        auto* s = std::get_if<FetchSuccess>(&status);
        return s ? s->document.get() : nullptr;
    }
    std::string describe() const;
};

/// Owns the cache for one query execution. Concurrent dereferences of the
/// same IRI share a single wire request.
class Dereferencer {
public:
    Dereferencer(Fetcher& fetcher, FetchPolicy policy);

    DereferenceResult dereference(const std::string& iri);

    std::size_t wire_requests() const { return wire_requests_.load(); }
    const FetchPolicy& policy() const { return policy_; }
    void flush();

private:
    DereferenceResult fetch(const std::string& url);

    Fetcher& fetcher_;
    FetchPolicy policy_;
    std::atomic<std::size_t> wire_requests_{0};
    std::mutex mu_;
    std::unordered_map<std::string, std::shared_future<DereferenceResult>> cache_;
};

/// In-process fetcher over a URL -> (status, body) table. Used by tests and
/// by the harness when no socket is wanted.
class StaticFetcher : public Fetcher {
public:
    struct Entry {
        int status = 200;
        std::string body;
        std::string location;
    };

    void put(std::string url, std::string body, int status = 200);
    void redirect(std::string url, std::string location, int status = 302);
    FetchResponse get(const std::string& url, const FetchPolicy& policy) override;
    std::size_t requests() const { return requests_.load(); }
    std::map<std::string, std::size_t> request_counts() const;

private:
    std::map<std::string, Entry> entries_;
    std::atomic<std::size_t> requests_{0};
    mutable std::mutex mu_;
    std::map<std::string, std::size_t> counts_;
};

}  // namespace ltqp
