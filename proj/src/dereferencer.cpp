#include "ltqp/dereferencer.hpp"

#include <httplib.h>

#include "ltqp/turtle.hpp"

namespace ltqp {

struct HttpFetcher::Pool {
    std::mutex mu;
    std::unordered_map<std::string, std::vector<std::unique_ptr<httplib::Client>>> idle;

    std::unique_ptr<httplib::Client> checkout(const std::string& origin) {
        {
            std::lock_guard lock(mu);
            auto& clients = idle[origin];
            if (!clients.empty()) {
                auto c = std::move(clients.back());
                clients.pop_back();
                return c;
            }
        }
        auto client = std::make_unique<httplib::Client>(origin);
        client->set_keep_alive(true);
        client->set_tcp_nodelay(true);
        client->set_follow_location(false);
        return client;
    }

    void checkin(const std::string& origin, std::unique_ptr<httplib::Client> client) {
        std::lock_guard lock(mu);
        auto& clients = idle[origin];
        if (clients.size() < 16) clients.push_back(std::move(client));
    }
};

HttpFetcher::HttpFetcher() : pool_(std::make_unique<Pool>()) {}
HttpFetcher::~HttpFetcher() = default;

FetchResponse HttpFetcher::get(const std::string& url, const FetchPolicy& policy) {
    FetchResponse out;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        out.network_error = "unsupported URL " + url;
        return out;
    }
    auto path_start = url.find('/', scheme_end + 3);
    std::string origin = url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    if (!url.starts_with("http://")) {
        out.network_error = "unsupported scheme in " + url;
        return out;
    }

    auto client = pool_->checkout(origin);
    client->set_connection_timeout(policy.timeout);
    client->set_read_timeout(policy.timeout);
    client->set_write_timeout(policy.timeout);
    httplib::Headers headers{{"Accept", policy.accept}};
    auto res = client->Get(path, headers);
    if (!res) {
        out.network_error = httplib::to_string(res.error());
        return out;  // broken connection is dropped, not pooled
    }
    out.status = res->status;
    out.body = std::move(res->body);
    if (res->has_header("Location")) out.location = res->get_header_value("Location");
    pool_->checkin(origin, std::move(client));
    return out;
}

std::string DereferenceResult::describe() const {
    return std::visit(
        [&](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FetchSuccess>)
                return "ok " + std::to_string(s.document->triples.size()) + " triples";
            else if constexpr (std::is_same_v<T, HttpError>)
                return "HTTP " + std::to_string(s.code);
            else if constexpr (std::is_same_v<T, NetworkError>)
                return "network error: " + s.message;
            else
                return "parse error: " + s.message;
        },
        status);
}

Dereferencer::Dereferencer(Fetcher& fetcher, FetchPolicy policy)
    : fetcher_(fetcher), policy_(std::move(policy)) {}

DereferenceResult Dereferencer::dereference(const std::string& iri) {
    std::string url = strip_fragment(iri);
    std::promise<DereferenceResult> promise;
    std::shared_future<DereferenceResult> future;
    bool owner = false;
    {
        std::lock_guard lock(mu_);
        auto it = cache_.find(url);
        if (it != cache_.end()) {
            future = it->second;
        } else {
            future = promise.get_future().share();
            cache_.emplace(url, future);
            owner = true;
        }
    }
    if (owner) promise.set_value(fetch(url));
    return future.get();
}

void Dereferencer::flush() {
    std::lock_guard lock(mu_);
    cache_.clear();
}

DereferenceResult Dereferencer::fetch(const std::string& requested) {
    auto start = std::chrono::steady_clock::now();
    DereferenceResult result;
    result.requested_url = requested;
    std::string url = requested;
    auto finish = [&](auto status) {
        result.final_url = url;
        result.status = std::move(status);
        result.elapsed = std::chrono::duration_cast<Millis>(std::chrono::steady_clock::now() - start);
        return result;
    };

    for (int hop = 0; hop <= policy_.max_redirects; ++hop) {
        ++wire_requests_;
        FetchResponse res = fetcher_.get(url, policy_);
        if (res.status == 0) return finish(NetworkError{res.network_error});
        if (res.status >= 300 && res.status < 400 && !res.location.empty()) {
            url = strip_fragment(resolve_iri(url, res.location));
            continue;
        }
        if (res.status < 200 || res.status >= 300) return finish(HttpError{res.status});
        try {
            auto doc = std::make_shared<ParsedDocument>(parse_turtle(res.body, url));
            return finish(FetchSuccess{std::move(doc)});
        } catch (const std::exception& e) {
            return finish(DocumentParseError{e.what()});
        }
    }
    return finish(NetworkError{"too many redirects"});
}

void StaticFetcher::put(std::string url, std::string body, int status) {
    entries_[std::move(url)] = Entry{status, std::move(body), {}};
}

void StaticFetcher::redirect(std::string url, std::string location, int status) {
    entries_[std::move(url)] = Entry{status, {}, std::move(location)};
}

FetchResponse StaticFetcher::get(const std::string& url, const FetchPolicy&) {
    ++requests_;
    {
        std::lock_guard lock(mu_);
        ++counts_[url];
    }
    auto it = entries_.find(url);
    if (it == entries_.end()) return FetchResponse{404, "", "", ""};
    return FetchResponse{it->second.status, it->second.body, it->second.location, ""};
}

std::map<std::string, std::size_t> StaticFetcher::request_counts() const {
    std::lock_guard lock(mu_);
    return counts_;
}

}  // namespace ltqp
