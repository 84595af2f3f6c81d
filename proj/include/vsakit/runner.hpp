#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace vsa {

// Options shared by every subcommand. Precedence: built-in defaults, then
// VSAKIT_* environment variables, then the config file, then explicit
// overrides (CLI flags).
struct RunOptions {
    std::string config_path;      // empty = no file
    nlohmann::json overrides;     // flat object merged over the file config
    std::string out_dir;          // empty = env/default
    std::string format;           // "json" or "csv"; empty = env/default
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> jobs;
};

// Executes one subcommand: encode, train, infer, cluster, factorize,
// navigate, graph, ood, cost, sweep, bounds. Writes machine-readable reports
// atomically under the output directory and prints progress to stderr.
// Throws vsa::Error on failure (ParseError for configuration problems).
void run_subcommand(const std::string& name, const RunOptions& options);

// The resolved configuration a subcommand would run with (for tests).
nlohmann::json resolve_config(const RunOptions& options);

} // namespace vsa
