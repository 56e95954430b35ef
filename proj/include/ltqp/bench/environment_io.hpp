#pragma once
// On-disk layout: `<dir>/<path>.ttl` per document (`<path>index.ttl` for
// containers) plus `<dir>/manifest.json`.

#include <filesystem>
#include <string>

#include "ltqp/bench/generator.hpp"

namespace ltqp::bench {

std::string file_for_path(const std::string& path);

void save_environment(const GeneratedEnvironment& env, const std::filesystem::path& dir);

/// Throws std::runtime_error on a missing or malformed manifest.
GeneratedEnvironment load_environment(const std::filesystem::path& dir);

}  // namespace ltqp::bench
