#include "ltqp/bench/server.hpp"

#include <httplib.h>

#include <atomic>
#include <stdexcept>

namespace ltqp::bench {

std::pair<int, std::string> DocumentTable::lookup(const std::string& path) const {
    if (delay.count() > 0) std::this_thread::sleep_for(delay);
    if (auto f = faults.find(path); f != faults.end()) return {f->second, "injected failure\n"};
    if (auto it = texts.find(path); it != texts.end()) return {200, it->second};
    return {404, "not found\n"};
}

std::shared_ptr<DocumentTable> make_table(const GeneratedEnvironment& env) {
    auto table = std::make_shared<DocumentTable>();
    table->texts = env.texts;
    return table;
}

struct DocumentServer::Impl {
    httplib::Server server;
    std::mutex mu;
    std::shared_ptr<const DocumentTable> table;
    std::atomic<bool> stopped{false};

    std::shared_ptr<const DocumentTable> current() {
        std::lock_guard lock(mu);
        return table;
    }
};

DocumentServer::DocumentServer(std::shared_ptr<const DocumentTable> table, const std::string& host, int port)
    : impl_(std::make_unique<Impl>()), host_(host) {
    impl_->table = std::move(table);
    Impl* impl = impl_.get();
    impl->server.set_tcp_nodelay(true);
    impl->server.Get(".*", [impl](const httplib::Request& req, httplib::Response& res) {
        std::string path = req.path.starts_with('/') ? req.path.substr(1) : req.path;
        auto [status, body] = impl->current()->lookup(path);
        res.status = status;
        res.set_content(body, status == 200 ? "text/turtle" : "text/plain");
    });
    if (port == 0) {
        port_ = impl->server.bind_to_any_port(host);
    } else {
        port_ = impl->server.bind_to_port(host, port) ? port : -1;
    }
    if (port_ <= 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
    thread_ = std::thread([impl] { impl->server.listen_after_bind(); });
    impl->server.wait_until_ready();
}

DocumentServer::~DocumentServer() { stop(); }

std::string DocumentServer::base_url() const {
    return "http://" + host_ + ":" + std::to_string(port_) + "/";
}

void DocumentServer::set_table(std::shared_ptr<const DocumentTable> table) {
    std::lock_guard lock(impl_->mu);
    impl_->table = std::move(table);
}

void DocumentServer::stop() {
    if (impl_->stopped.exchange(true)) return;
    impl_->server.stop();
    if (thread_.joinable()) thread_.join();
}

FetchResponse EnvironmentFetcher::get(const std::string& url, const FetchPolicy&) {
    if (!url.starts_with(base_)) return FetchResponse{0, "", "", "connection refused: " + url};
    auto [status, body] = table_->lookup(url.substr(base_.size()));
    return FetchResponse{status, std::move(body), "", ""};
}

}  // namespace ltqp::bench
