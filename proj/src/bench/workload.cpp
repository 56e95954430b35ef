#include "ltqp/bench/workload.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace ltqp::bench {

namespace {

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
    for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size()))
        text.replace(pos, from.size(), to);
    return text;
}

double mean(const std::vector<double>& xs) {
    return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string optional_number(const std::optional<double>& v) { return v ? number(*v) : ""; }

}  // namespace

const std::vector<QueryTemplate>& query_templates() {
    static const std::vector<QueryTemplate> templates = {
        {"D1",
         "SELECT ?message ?content WHERE {\n"
         "  ?message a snvoc:Post; snvoc:hasCreator $person; snvoc:content ?content.\n"
         "}",
         true},
        {"D2",
         "SELECT ?message ?date WHERE {\n"
         "  ?message snvoc:hasCreator $person; snvoc:creationDate ?date.\n"
         "}",
         false},
        {"D3",
         "SELECT ?post ?creator WHERE {\n"
         "  ?comment snvoc:hasCreator $person; snvoc:replyOf ?post.\n"
         "  ?post snvoc:hasCreator ?creator.\n"
         "}",
         false},
        {"D4",
         "SELECT DISTINCT ?tag WHERE {\n"
         "  ?post a snvoc:Post; snvoc:hasCreator $person; snvoc:hasTag ?tag.\n"
         "}",
         true},
        {"D5",
         "SELECT ?friend ?name WHERE {\n"
         "  $person snvoc:knows [ snvoc:hasPerson ?friend ].\n"
         "  ?friend snvoc:firstName ?name.\n"
         "}",
         false},
        {"D6",
         "SELECT DISTINCT ?place WHERE {\n"
         "  ?message snvoc:hasCreator $person; snvoc:isLocatedIn ?place.\n"
         "}",
         false},
        {"D7",
         "SELECT ?friend ?post WHERE {\n"
         "  $person snvoc:knows [ snvoc:hasPerson ?friend ].\n"
         "  ?post a snvoc:Post; snvoc:hasCreator ?friend.\n"
         "}",
         false},
        {"D8",
         "SELECT DISTINCT ?creator ?messageContent WHERE {\n"
         "  $person snvoc:likes [ snvoc:hasPost|snvoc:hasComment ?message ].\n"
         "  ?message snvoc:hasCreator ?creator.\n"
         "  ?otherMessage snvoc:hasCreator ?creator; snvoc:content ?messageContent.\n"
         "}",
         false},
    };
    return templates;
}

const QueryTemplate& query_template(const std::string& name) {
    for (const auto& t : query_templates()) {
        if (t.name == name) return t;
    }
    throw std::invalid_argument("unknown query template " + name);
}

std::string instantiate(const QueryTemplate& tpl, const Vocabulary& vocab, const std::string& webid) {
    return "PREFIX snvoc: <" + vocab.snvoc + ">\n" + replace_all(tpl.text, "$person", "<" + webid + ">");
}

bool WorkloadQuery::vault_spanning() const {
    return !own_vault.empty() && own_vault.size() < expected.size();
}

std::vector<Triple> vault_graph(const GeneratedEnvironment& env, std::size_t person) {
    std::string root = env.vault_roots.at(person).substr(env.config.base_url.size());
    std::vector<Triple> out;
    for (const auto& [path, doc] : env.documents) {
        if (path.starts_with(root)) out.insert(out.end(), doc.triples.begin(), doc.triples.end());
    }
    return out;
}

WorkloadQuery make_query(const GeneratedEnvironment& env, const QueryTemplate& tpl, std::size_t person) {
    WorkloadQuery q;
    q.name = tpl.name;
    q.person = person;
    q.seed = env.web_ids.at(person);
    q.query = parse_query(instantiate(tpl, Vocabulary(env.config.base_url), q.seed));
    q.expected = oracle_evaluate(q.query, env.union_graph);
    q.own_vault = oracle_evaluate(q.query, vault_graph(env, person));
    return q;
}

std::vector<WorkloadQuery> default_workload(const GeneratedEnvironment& env, std::size_t offset,
                                            const std::vector<std::string>& names) {
    std::vector<WorkloadQuery> out;
    std::size_t n = env.web_ids.size();
    if (n == 0) return out;
    for (const auto& tpl : query_templates()) {
        if (!names.empty() && std::find(names.begin(), names.end(), tpl.name) == names.end()) continue;
        std::optional<WorkloadQuery> nonempty;
        std::optional<WorkloadQuery> chosen;
        for (std::size_t k = 0; k < n && !chosen; ++k) {
            auto q = make_query(env, tpl, (offset + k) % n);
            if (q.vault_spanning()) chosen = std::move(q);
            else if (!nonempty && !q.expected.empty()) nonempty = std::move(q);
        }
        if (!chosen) chosen = nonempty ? std::move(nonempty) : make_query(env, tpl, offset % n);
        out.push_back(std::move(*chosen));
    }
    return out;
}

RunMetrics run_once(const WorkloadQuery& q, Fetcher& fetcher, const EngineConfig& config) {
    RunMetrics m;
    try {
        auto run = run_query(q.query, {q.seed}, fetcher, config);
        m.exec_ms = run.execution.total_ms;
        m.first_ms = run.execution.t_first_ms();
        m.wire_requests = run.traversal.wire_requests;
        m.results = run.execution.mappings.size();
        m.accuracy = accuracy_f1(q.expected, to_set(run.execution.mappings));
        m.timed_out = run.execution.timed_out || run.failed();
        m.arrivals = run.execution.arrival_ms;
    } catch (const std::exception&) {
        m.timed_out = true;
        m.accuracy = 0;
    }
    return m;
}

std::vector<CellMetrics> run_matrix(const GeneratedEnvironment& env, const std::vector<WorkloadQuery>& queries,
                                    Fetcher& fetcher, const MatrixOptions& options) {
    std::vector<CellMetrics> cells;
    for (const auto& q : queries) {
        for (auto discovery : options.discoveries) {
            for (auto reachability : options.reachabilities) {
                CellMetrics cell;
                cell.query = q.name;
                cell.discovery = discovery;
                cell.reachability = reachability;
                cell.strategy = to_string(env.config.strategy);
                cell.mult = env.config.multiplication_factor;
                EngineConfig config = options.engine;
                config.discovery = discovery;
                config.reachability = reachability;
                std::vector<double> times, firsts, reqs, results, accs;
                for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repetitions); ++r) {
                    RunMetrics m = run_once(q, fetcher, config);
                    times.push_back(m.exec_ms);
                    if (m.first_ms) firsts.push_back(*m.first_ms);
                    reqs.push_back(static_cast<double>(m.wire_requests));
                    results.push_back(static_cast<double>(m.results));
                    accs.push_back(m.accuracy);
                    cell.timeouts += m.timed_out ? 1 : 0;
                    cell.runs.push_back(std::move(m));
                }
                cell.t_avg = mean(times);
                cell.t_med = median(times);
                if (!firsts.empty()) {
                    cell.t1_avg = mean(firsts);
                    cell.t1_med = median(firsts);
                }
                cell.req = mean(reqs);
                cell.results = mean(results);
                cell.acc = mean(accs);
                cells.push_back(std::move(cell));
            }
        }
    }
    return cells;
}

void write_matrix_csv(std::ostream& out, const std::vector<CellMetrics>& cells) {
    out << kMatrixColumns << "\n";
    for (const auto& c : cells) {
        out << c.query << ',' << to_string(c.discovery) << ',' << to_string(c.reachability) << ',' << c.strategy
            << ',' << c.mult << ',' << number(c.t_avg) << ',' << number(c.t_med) << ','
            << optional_number(c.t1_avg) << ',' << optional_number(c.t1_med) << ',' << number(c.req) << ','
            << number(c.results) << ',' << number(c.acc) << ',' << c.timeouts << "\n";
    }
}

void write_arrivals_csv(std::ostream& out, const std::vector<CellMetrics>& cells) {
    out << "query,discovery,reachability,repetition,index,t_ms\n";
    for (const auto& c : cells) {
        for (std::size_t r = 0; r < c.runs.size(); ++r) {
            const auto& arrivals = c.runs[r].arrivals;
            for (std::size_t i = 0; i < arrivals.size(); ++i) {
                out << c.query << ',' << to_string(c.discovery) << ',' << to_string(c.reachability) << ',' << r
                    << ',' << i << ',' << number(arrivals[i]) << "\n";
            }
        }
    }
}

}  // namespace ltqp::bench
