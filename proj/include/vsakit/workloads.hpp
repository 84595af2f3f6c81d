#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vsakit/costmodel.hpp"
#include "vsakit/reasoning.hpp"

namespace vsa::imc {

// A core group the workload needs from the architecture.
struct CoreDemand {
    std::string id;
    CoreRole role = CoreRole::ItemMemory;
    Engine engine = Engine::Encoding;
    CoreKind kind = CoreKind::Static;
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::uint64_t stored_bits = 0;
    // Static cores are programmed before the run; cores whose contents the
    // pipeline itself produces (or dynamic operand buffers) are not.
    bool preloaded = true;
};

// A runnable workload: its core demands, its kernel-mode view, and a tracer
// that executes the functional pipeline against a mapping while counting
// every array access. Traces are pure functions of (config seed, mapping).
struct WorkloadModel {
    std::string name;
    WorkloadCategory category = WorkloadCategory::MultiModalPerception;
    std::vector<CoreDemand> demands;
    double wall_duration_s = 0;
    std::function<OpTrace(const Mapping&)> tracer;
    nlohmann::json run_summary;  // functional outcome (accuracy, convergence, ...)
};

struct PerceptionConfig {
    std::size_t modalities = 3;
    std::size_t features_each = 4;
    std::size_t levels = 16;
    std::size_t classes = 5;
    std::size_t samples = 500;
    std::size_t timestamps = 2;
    std::uint32_t dim = 10000;
    std::uint64_t seed = 1;
    double sample_period_s = 1e-4;  // streaming sample arrival
};

struct NavigationConfig {
    enum class Phase { Train, Recall, Both };
    std::size_t sensors = 4;
    std::size_t sensor_bins = 16;
    std::size_t actuator_values = 4;
    std::size_t demos = 20;
    std::size_t recalls = 5;
    std::uint32_t dim = 10000;
    std::uint64_t seed = 2;
    double demo_period_s = 0.1;  // real-time demonstration cadence
    Phase phase = Phase::Train;
    double threshold = 0.1;
};

struct FactorizationConfig {
    std::size_t codebooks = 3;
    std::size_t items = 8;
    std::size_t trials = 20;
    std::uint32_t dim = 1024;
    std::size_t max_iters = 100;
    ResonatorSchedule schedule = ResonatorSchedule::Parallel;
    // Parallel factoring keeps codebook similarity/projection cores static;
    // sequential factoring shares one dynamic group per role and reprograms
    // it at every factor switch.
    bool sequential_cores = false;
    double noise_p = 0.0;
    std::uint64_t seed = 3;
    double trial_period_s = 1e-2;  // reasoning-service request cadence
};

WorkloadModel build_perception_workload(const PerceptionConfig& config);
WorkloadModel build_navigation_workload(const NavigationConfig& config);
WorkloadModel build_factorization_workload(const FactorizationConfig& config);

// One core per demand, sized exactly, memories assigned by core kind.
Architecture architecture_for(const WorkloadModel& workload, const MemoryConfig& memories,
                              TechNode node = TechNode::N65);

// Binds each demand to the architecture cores carrying its role. Missing
// roles raise a mapping error; undersized groups are handled by the tracer
// as reprogram refills.
Mapping map_workload(const WorkloadModel& workload, const Architecture& arch);

inline OpTrace trace_workload(const WorkloadModel& workload, const Mapping& mapping) {
    return workload.tracer(mapping);
}

// The default six-memory-configuration set: four homogeneous plus the two
// heterogeneous static-NVM/dynamic-charge designs.
std::vector<MemoryConfig> default_memory_configs();

struct SweepCell {
    std::string workload;
    std::string config;
    TechNode node = TechNode::N65;
    CostReport report;
};

struct SweepResult {
    std::vector<SweepCell> cells;

    // CSV rows with energy/latency/area/EDP normalized to the all-RRAM
    // homogeneous configuration of each workload.
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

// Memory-technology benchmark: every workload under every memory
// configuration at one node.
SweepResult sweep_memories(const std::vector<WorkloadModel>& workloads,
                           const std::vector<MemoryConfig>& configs, const TechTable& table,
                           TechNode node = TechNode::N65, std::size_t jobs = 1);

// Node-scaling benchmark: one workload across nodes for SRAM-only, NVM-only
// and hybrid configurations.
SweepResult sweep_nodes(const WorkloadModel& workload, const TechTable& table,
                        MemoryKind nvm = MemoryKind::MRAM);

} // namespace vsa::imc
