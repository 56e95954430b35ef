// ltqp: query, generate, serve and bench subcommands.

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "ltqp/bench/environment_io.hpp"
#include "ltqp/bench/server.hpp"
#include "ltqp/bench/workload.hpp"
#include "ltqp/engine.hpp"

namespace {

using namespace ltqp;

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted = true; }

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename T>
std::vector<std::string> names(const T& all) {
    std::vector<std::string> out;
    for (auto v : all) out.emplace_back(to_string(v));
    return out;
}

struct QueryArgs {
    std::string query_file;
    std::vector<std::string> seeds;
    std::string reachability = "cmatch";
    std::string discovery = "ldp-idx-filt";
    long timeout_ms = 120000;
    std::string lenient = "true";
    std::size_t concurrency = 4;
    std::string format = "jsonl";
};

int cmd_query(const QueryArgs& args) {
    Query query = parse_query(read_text(args.query_file));
    EngineConfig config;
    config.reachability = *parse_reachability(args.reachability);
    config.discovery = *parse_discovery(args.discovery);
    config.timeout = Millis(args.timeout_ms);
    config.concurrency = args.concurrency;
    config.fetch.lenient = args.lenient == "true";

    bool csv = args.format == "csv";
    std::vector<std::string> columns;
    for (const auto& v : query.projection) {
        if (!is_blank_variable(v)) columns.push_back(v);
    }
    if (csv) std::cout << csv_header(columns) << "\n";
    HttpFetcher fetcher;
    auto run = run_query(query, args.seeds, fetcher, config, [&](const SolutionMapping& mu, double) {
        std::cout << (csv ? mapping_to_csv(mu, columns) : mapping_to_json(mu)) << "\n";
        std::cout.flush();
    });
    std::cerr << summary_to_json(run) << std::endl;
    if (run.failed()) {
        std::cerr << "error: " << *run.traversal.fatal_error << "\n";
        return 1;
    }
    return run.execution.timed_out ? 2 : 0;
}

int cmd_generate(const bench::SyntheticConfig& config, const std::string& out) {
    auto env = bench::generate_environment(config);
    bench::save_environment(env, out);
    std::cerr << "wrote " << env.texts.size() << " documents for " << env.web_ids.size() << " persons to " << out
              << "\n";
    return 0;
}

int wait_for_interrupt() {
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    while (!g_interrupted) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    return 0;
}

int cmd_serve(const std::string& root, const std::string& host, int port, long delay_ms) {
    auto env = bench::load_environment(root);
    auto table = bench::make_table(env);
    table->delay = std::chrono::milliseconds(delay_ms);
    bench::DocumentServer server(table, host, port);
    std::cerr << "serving " << env.texts.size() << " documents at " << server.base_url()
              << " (environment base " << env.config.base_url << ")\n";
    wait_for_interrupt();
    server.stop();
    return 0;
}

struct BenchArgs {
    std::string env_dir;
    std::string matrix = "default";
    std::string out;
    std::string arrivals;
    std::vector<std::string> queries;
    std::size_t repetitions = 1;
    long timeout_ms = 120000;
    std::size_t concurrency = 4;
    bool in_process = false;
};

/// host and port of an http:// base URL.
std::pair<std::string, int> host_port(const std::string& base) {
    std::string rest = base.substr(base.find("://") + 3);
    rest = rest.substr(0, rest.find('/'));
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) return {rest, 80};
    return {rest.substr(0, colon), std::stoi(rest.substr(colon + 1))};
}

int cmd_bench(const BenchArgs& args) {
    auto env = bench::load_environment(args.env_dir);
    auto table = bench::make_table(env);

    bench::MatrixOptions options;
    options.repetitions = args.repetitions;
    options.engine.timeout = Millis(args.timeout_ms);
    options.engine.concurrency = args.concurrency;
    if (args.matrix == "small") {
        options.reachabilities = {Reachability::CNone, Reachability::CMatch};
        options.discoveries = {DiscoveryMode::Base, DiscoveryMode::LdpIdxFilt};
    } else if (args.matrix != "default") {
        throw std::invalid_argument("unknown matrix '" + args.matrix + "' (default|small)");
    }

    auto workload = bench::default_workload(env, 0, args.queries);
    std::unique_ptr<bench::DocumentServer> server;
    std::unique_ptr<Fetcher> fetcher;
    if (args.in_process) {
        fetcher = std::make_unique<bench::EnvironmentFetcher>(env.config.base_url, table);
    } else {
        auto [host, port] = host_port(env.config.base_url);
        server = std::make_unique<bench::DocumentServer>(table, host, port);
        fetcher = std::make_unique<HttpFetcher>();
    }
    auto cells = bench::run_matrix(env, workload, *fetcher, options);
    fetcher.reset();  // closes pooled keep-alive connections so the server stops promptly
    if (server) server->stop();

    if (args.out.empty()) {
        bench::write_matrix_csv(std::cout, cells);
    } else {
        std::ofstream out(args.out);
        bench::write_matrix_csv(out, cells);
    }
    if (!args.arrivals.empty()) {
        std::ofstream out(args.arrivals);
        bench::write_arrivals_csv(out, cells);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link traversal query engine over Solid-style vaults"};
    app.require_subcommand(1);

    QueryArgs q;
    auto* query = app.add_subcommand("query", "Run a query by traversing links from seeds");
    query->add_option("--query", q.query_file, "Query file")->required()->check(CLI::ExistingFile);
    query->add_option("--seed", q.seeds, "Seed IRI (repeatable); defaults to the query's IRIs");
    query->add_option("--reachability", q.reachability, "cnone|cmatch|call")
        ->check(CLI::IsMember(names(kAllReachabilities)));
    query->add_option("--discovery", q.discovery, "base|idx|idx-filt|ldp|ldp-idx|ldp-idx-filt")
        ->check(CLI::IsMember(names(kAllDiscoveryModes)));
    query->add_option("--timeout", q.timeout_ms, "Query timeout in ms")->check(CLI::PositiveNumber);
    query->add_option("--lenient", q.lenient, "Ignore failed dereferences")->check(CLI::IsMember({"true", "false"}));
    query->add_option("--concurrency", q.concurrency, "Concurrent dereferences")->check(CLI::PositiveNumber);
    query->add_option("--format", q.format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));

    bench::SyntheticConfig gen;
    std::string gen_out;
    std::string gen_strategy = "separate";
    auto* generate = app.add_subcommand("generate", "Generate an environment on disk");
    generate->add_option("--persons", gen.persons);
    generate->add_option("--seed", gen.random_seed);
    generate->add_option("--strategy", gen_strategy, "separate|single|location|time|composite")
        ->check(CLI::IsMember({"separate", "single", "location", "time", "composite"}));
    generate->add_option("--out", gen_out, "Output directory")->required();
    generate->add_option("--posts", gen.posts_per_person);
    generate->add_option("--comments", gen.comments_per_post);
    generate->add_option("--likes", gen.likes_per_person);
    generate->add_option("--knows", gen.knows_per_person);
    generate->add_option("--mult", gen.multiplication_factor)->check(CLI::PositiveNumber);
    generate->add_option("--noise", gen.noise_documents_per_person);
    generate->add_option("--base", gen.base_url, "Base URL the environment will be served at");

    std::string serve_root;
    std::string serve_host = "127.0.0.1";
    int serve_port = 3000;
    long serve_delay = 0;
    auto* serve = app.add_subcommand("serve", "Serve an environment over HTTP until interrupted");
    serve->add_option("--root", serve_root, "Environment directory")->required()->check(CLI::ExistingDirectory);
    serve->add_option("--host", serve_host);
    serve->add_option("--port", serve_port);
    serve->add_option("--delay", serve_delay, "Artificial per-request delay in ms");

    BenchArgs b;
    auto* benchmark = app.add_subcommand("bench", "Run the experiment matrix over an environment");
    benchmark->add_option("--env", b.env_dir, "Environment directory")->required()->check(CLI::ExistingDirectory);
    benchmark->add_option("--matrix", b.matrix, "default|small");
    benchmark->add_option("--out", b.out, "CSV output file (default stdout)");
    benchmark->add_option("--arrivals", b.arrivals, "Per-result arrival times CSV");
    benchmark->add_option("--queries", b.queries, "Template names, e.g. D1,D8")->delimiter(',');
    benchmark->add_option("--repetitions", b.repetitions)->check(CLI::PositiveNumber);
    benchmark->add_option("--timeout", b.timeout_ms)->check(CLI::PositiveNumber);
    benchmark->add_option("--concurrency", b.concurrency)->check(CLI::PositiveNumber);
    benchmark->add_flag("--in-process", b.in_process, "Skip the HTTP server and read documents directly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*query) return cmd_query(q);
        if (*generate) {
            gen.strategy = *bench::parse_strategy(gen_strategy);
            return cmd_generate(gen, gen_out);
        }
        if (*serve) return cmd_serve(serve_root, serve_host, serve_port, serve_delay);
        if (*benchmark) return cmd_bench(b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
