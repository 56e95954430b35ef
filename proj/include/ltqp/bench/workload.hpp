#pragma once
// Discover-style query templates instantiated for one person of a generated
// environment, and the experiment-matrix runner.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ltqp/bench/generator.hpp"
#include "ltqp/bench/oracle.hpp"
#include "ltqp/engine.hpp"

namespace ltqp::bench {

struct QueryTemplate {
    std::string name;
    std::string text;       // `$person` is replaced by the WebID IRI
    bool all_typed = false;  // every variable subject carries an rdf:type pattern
};

/// D1..D8.
const std::vector<QueryTemplate>& query_templates();
const QueryTemplate& query_template(const std::string& name);

std::string instantiate(const QueryTemplate& tpl, const Vocabulary& vocab, const std::string& webid);

struct WorkloadQuery {
    std::string name;
    std::size_t person = 0;
    std::string seed;  // WebID
    Query query;
    ResultSet expected;       // over the full union graph
    ResultSet own_vault;      // over the person's own vault only
    bool vault_spanning() const;  // own results non-empty and a strict subset
};

WorkloadQuery make_query(const GeneratedEnvironment& env, const QueryTemplate& tpl, std::size_t person);

/// Triples of the documents stored under the person's vault root.
std::vector<Triple> vault_graph(const GeneratedEnvironment& env, std::size_t person);

/// One query per template. Prefers a vault-spanning person, then one with
/// non-empty results; scanning starts at `offset` and wraps around.
std::vector<WorkloadQuery> default_workload(const GeneratedEnvironment& env, std::size_t offset = 0,
                                            const std::vector<std::string>& names = {});

struct RunMetrics {
    double exec_ms = 0;
    std::optional<double> first_ms;
    std::size_t wire_requests = 0;
    std::size_t results = 0;
    double accuracy = 0;
    bool timed_out = false;
    std::vector<double> arrivals;
};

struct CellMetrics {
    std::string query;
    DiscoveryMode discovery = DiscoveryMode::Base;
    Reachability reachability = Reachability::CNone;
    std::string strategy;
    std::size_t mult = 1;
    double t_avg = 0, t_med = 0;
    std::optional<double> t1_avg, t1_med;
    double req = 0;
    double results = 0;
    double acc = 0;
    std::size_t timeouts = 0;
    std::vector<RunMetrics> runs;
};

struct MatrixOptions {
    std::vector<Reachability> reachabilities{std::begin(kAllReachabilities), std::end(kAllReachabilities)};
    std::vector<DiscoveryMode> discoveries{std::begin(kAllDiscoveryModes), std::end(kAllDiscoveryModes)};
    std::size_t repetitions = 1;
    EngineConfig engine;  // reachability and discovery are overridden per cell
};

RunMetrics run_once(const WorkloadQuery& q, Fetcher& fetcher, const EngineConfig& config);

/// Cells run sequentially; a failing cell is recorded as timed out with zero accuracy.
std::vector<CellMetrics> run_matrix(const GeneratedEnvironment& env, const std::vector<WorkloadQuery>& queries,
                                    Fetcher& fetcher, const MatrixOptions& options);

inline constexpr const char* kMatrixColumns =
    "query,discovery,reachability,strategy,mult,t_avg,t_med,t1_avg,t1_med,req,results,acc,timeouts";

void write_matrix_csv(std::ostream& out, const std::vector<CellMetrics>& cells);
/// query,discovery,reachability,repetition,index,t_ms
void write_arrivals_csv(std::ostream& out, const std::vector<CellMetrics>& cells);

}  // namespace ltqp::bench
