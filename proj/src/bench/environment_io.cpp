#include "ltqp/bench/environment_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace ltqp::bench {

namespace {

using nlohmann::ordered_json;

ordered_json config_to_json(const SyntheticConfig& c) {
    ordered_json j;
    j["randomSeed"] = c.random_seed;
    j["persons"] = c.persons;
    j["postsPerPerson"] = c.posts_per_person;
    j["commentsPerPost"] = c.comments_per_post;
    j["likesPerPerson"] = c.likes_per_person;
    j["knowsPerPerson"] = c.knows_per_person;
    j["multiplicationFactor"] = c.multiplication_factor;
    j["noiseDocumentsPerPerson"] = c.noise_documents_per_person;
    j["strategy"] = std::string(to_string(c.strategy));
    j["baseUrl"] = c.base_url;
    return j;
}

SyntheticConfig config_from_json(const ordered_json& j) {
    SyntheticConfig c;
    c.random_seed = j.at("randomSeed").get<std::uint64_t>();
    c.persons = j.at("persons").get<std::size_t>();
    c.posts_per_person = j.at("postsPerPerson").get<std::size_t>();
    c.comments_per_post = j.at("commentsPerPost").get<std::size_t>();
    c.likes_per_person = j.at("likesPerPerson").get<std::size_t>();
    c.knows_per_person = j.at("knowsPerPerson").get<std::size_t>();
    c.multiplication_factor = j.at("multiplicationFactor").get<std::size_t>();
    c.noise_documents_per_person = j.value("noiseDocumentsPerPerson", std::size_t{0});
    auto strategy = parse_strategy(j.at("strategy").get<std::string>());
    if (!strategy) throw std::runtime_error("manifest: unknown strategy");
    c.strategy = *strategy;
    c.base_url = j.at("baseUrl").get<std::string>();
    return c;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string file_for_path(const std::string& path) {
    return path.empty() || path.ends_with('/') ? path + "index.ttl" : path + ".ttl";
}

void save_environment(const GeneratedEnvironment& env, const std::filesystem::path& dir) {
    ordered_json manifest;
    manifest["base_url"] = env.config.base_url;
    manifest["config"] = config_to_json(env.config);
    manifest["webids"] = env.web_ids;
    manifest["vault_roots"] = env.vault_roots;
    std::vector<std::string> strategies;
    for (auto s : env.person_strategies) strategies.emplace_back(to_string(s));
    manifest["person_strategies"] = strategies;
    ordered_json documents = ordered_json::object();
    for (const auto& [path, text] : env.texts) {
        std::string file = file_for_path(path);
        auto target = dir / file;
        std::filesystem::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + target.string());
        documents[path] = file;
    }
    manifest["documents"] = documents;
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "manifest.json");
    out << manifest.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write manifest");
}

GeneratedEnvironment load_environment(const std::filesystem::path& dir) {
    ordered_json manifest;
    try {
        manifest = ordered_json::parse(read_file(dir / "manifest.json"));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("manifest: ") + e.what());
    }
    GeneratedEnvironment env;
    try {
        env.config = config_from_json(manifest.at("config"));
        env.web_ids = manifest.at("webids").get<std::vector<std::string>>();
        env.vault_roots = manifest.at("vault_roots").get<std::vector<std::string>>();
        for (const auto& s : manifest.value("person_strategies", std::vector<std::string>{})) {
            if (auto parsed = parse_strategy(s)) env.person_strategies.push_back(*parsed);
        }
        for (const auto& [path, file] : manifest.at("documents").items())
            env.texts[path] = read_file(dir / file.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("manifest: ") + e.what());
    }
    reparse(env);
    return env;
}

}  // namespace ltqp::bench
