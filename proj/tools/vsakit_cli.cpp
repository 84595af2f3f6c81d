// vsakit command-line front end. All functionality flows through the C API
// of the shared library; this binary only parses flags, assembles override
// JSON and maps statuses to exit codes.
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsakit/capi.h"

namespace {

struct CommonFlags {
    std::string config;
    std::string out;
    std::string format;
    std::int64_t seed = -1;
    std::uint32_t jobs = 0;
    std::vector<std::string> sets;  // key=value overrides
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config, "JSON config file");
    cmd->add_option("--out", flags.out, "output directory (default: out)");
    cmd->add_option("--format", flags.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", flags.seed, "seed threaded through every module");
    cmd->add_option("--jobs", flags.jobs, "parallel sweep cells");
    cmd->add_option("--set", flags.sets,
                    "config override key=value (value parsed as JSON when possible)");
}

nlohmann::json overrides_from(const CommonFlags& flags) {
    nlohmann::json j = nlohmann::json::object();
    for (const std::string& kv : flags.sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::fprintf(stderr, "error: --set expects key=value, got '%s'\n", kv.c_str());
            std::exit(2);
        }
        std::string key = kv.substr(0, eq);
        std::string value = kv.substr(eq + 1);
        nlohmann::json parsed = nlohmann::json::parse(value, nullptr, false);
        j[key] = parsed.is_discarded() ? nlohmann::json(value) : parsed;
    }
    return j;
}

int run(const std::string& subcommand, const CommonFlags& flags) {
    std::string overrides = overrides_from(flags).dump();
    vsa_status status = vsa_run(subcommand.c_str(), flags.config.empty() ? nullptr
                                                                         : flags.config.c_str(),
                                overrides.c_str(), flags.out.empty() ? nullptr : flags.out.c_str(),
                                flags.format.empty() ? nullptr : flags.format.c_str(), flags.seed,
                                flags.jobs);
    if (status == VSA_OK) return 0;
    std::fprintf(stderr, "error: %s\n", vsa_last_error());
    return status == VSA_ERR_PARSE ? 2 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vector-symbolic computing toolkit with an in-memory-computing cost model"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"encode", "encode CSV features or text sequences into hypervectors"},
        {"train", "train a classifier (single pass plus optional fine-tuning)"},
        {"infer", "run associative-search inference with a trained model"},
        {"cluster", "k-means style clustering in hypervector space"},
        {"factorize", "resonator-network factorization trials"},
        {"navigate", "reactive navigation: train demos and recall actions"},
        {"graph", "encode a graph and score edge queries"},
        {"ood", "hyperdimensional feature-fusion out-of-distribution scoring"},
        {"cost", "estimate energy/latency/area for one workload mapping"},
        {"sweep", "cost sweep across memory configurations or nodes"},
        {"bounds", "memory footprint bounds per workload category"},
    };

    std::vector<std::pair<CLI::App*, CommonFlags>> commands;
    commands.reserve(std::size(subs));
    for (const Sub& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        commands.emplace_back(cmd, CommonFlags{});
        add_common(cmd, commands.back().second);
    }

    CLI11_PARSE(app, argc, argv);

    for (auto& [cmd, flags] : commands)
        if (cmd->parsed()) return run(cmd->get_name(), flags);
    return 2;
}
