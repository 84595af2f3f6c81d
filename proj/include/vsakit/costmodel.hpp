#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vsakit/errors.hpp"

namespace vsa::imc {

// --- Memory technologies -----------------------------------------------------

enum class MemoryKind : std::uint8_t { SRAM, eDRAM, RRAM, MRAM, PCM, FlashNAND };
enum class TechNode : std::uint8_t { N65, N40_45, N22 };

const char* memory_name(MemoryKind kind);
MemoryKind memory_from_name(const std::string& name);
const char* node_name(TechNode node);
TechNode node_from_name(const std::string& name);

struct MemoryTechnology {
    MemoryKind kind = MemoryKind::SRAM;
    TechNode node = TechNode::N65;
    double read_energy_j = 0;    // per bit
    double write_energy_j = 0;   // per bit
    double read_latency_s = 0;   // per array access
    double write_latency_s = 0;
    double cell_area_mm2 = 0;    // physical cell footprint
    double standby_w_per_bit = 0;
    double refresh_interval_s = 0;  // > 0 only for eDRAM
    double retention_s = 0;
    int bits_per_cell = 1;
    bool volatile_mem = true;
    std::string source;

    void validate() const;
};

struct PeripheryParams {
    double adder_energy_j_per_bit = 0;
    double threshold_energy_j_per_bit = 0;
    double shift_energy_j_per_bit = 0;
    double buffer_energy_j_per_bit = 0;
    double wta_energy_j_per_op = 0;
    double exponent_energy_j_per_op = 0;
    double logic_latency_s_per_op = 0;
    double area_mm2_per_group = 0;
    std::string source;
};

// Per-bit device parameters at the 65 nm base node plus the node-scaling
// factors. Silicon-governed entries (SRAM, eDRAM, periphery) follow the
// silicon factors; NVM cells scale sub-linearly on their own factors.
class TechTable {
public:
    struct ScaleFactors {
        double energy = 1.0, latency = 1.0, area = 1.0;
    };

    static TechTable load(const std::string& path);
    // Loads the table shipped with the repo (env VSAKIT_DATA_DIR overrides
    // the build-time data directory).
    static TechTable load_default();
    static std::string default_path();

    const MemoryTechnology& base(MemoryKind kind) const;
    MemoryTechnology at_node(MemoryKind kind, TechNode node) const;
    PeripheryParams periphery_at(TechNode node) const;
    const ScaleFactors& silicon_factors(TechNode node) const;
    const ScaleFactors& nvm_factors(TechNode node) const;

    const std::map<MemoryKind, MemoryTechnology>& memories() const { return memories_; }

private:
    std::map<MemoryKind, MemoryTechnology> memories_;
    PeripheryParams periphery_;
    std::map<TechNode, ScaleFactors> silicon_scale_;
    std::map<TechNode, ScaleFactors> nvm_scale_;
};

// Node scaling of a single entry (identity at the entry's own node).
MemoryTechnology scale_node(const MemoryTechnology& tech, TechNode target,
                            const TechTable& table);

// --- Architecture template ----------------------------------------------------

enum class Engine : std::uint8_t { Encoding, SimilarityCheck };
enum class CoreKind : std::uint8_t { Static, Dynamic };

// Role tags a workload stage may demand from a core group.
enum class CoreRole : std::uint8_t {
    ItemMemory,
    ValueEmbedding,
    Encoding,
    SensorMemory,
    ActuatorMemory,
    SapBuffer,
    ProgramMemory,
    Cleanup,
    Classification,
    Disentangle,
    Similarity,
    Projection,
    TreeSearch,
    AssociativeSearch,
};

const char* role_name(CoreRole role);
const char* engine_name(Engine engine);
const char* core_kind_name(CoreKind kind);

struct CoreSpec {
    std::string id;
    Engine engine = Engine::Encoding;
    CoreKind kind = CoreKind::Static;
    CoreRole role = CoreRole::ItemMemory;
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    MemoryKind memory = MemoryKind::SRAM;

    std::uint64_t capacity_bits() const { return rows * cols; }
};

struct PeripheryConfig {
    bool sparsity_scheduler = false;
    double sparsity = 0.0;          // fraction of zero operands skipped
    bool fp_partitioner = false;    // exponent/mantissa split for FP MACs
    std::uint64_t dimension_divider = 1;  // temporal vector folding factor
    std::uint64_t buffer_bits = 0;        // working buffer capacity
};

struct Architecture {
    std::string name;
    std::vector<CoreSpec> cores;
    PeripheryConfig periphery;
    TechNode node = TechNode::N65;

    static Architecture from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Static cores take one memory, dynamic cores another; homogeneous configs
// use the same kind for both.
struct MemoryConfig {
    std::string name;
    MemoryKind static_mem = MemoryKind::SRAM;
    MemoryKind dynamic_mem = MemoryKind::SRAM;

    bool homogeneous() const { return static_mem == dynamic_mem; }
};

// --- Kernel graphs and mapping -------------------------------------------------

enum class KernelOp : std::uint8_t { Bind, Bundle, Permute, Similarity, Projection };

struct KernelNode {
    std::string id;
    KernelOp op = KernelOp::Bind;
    std::string mode;   // control-construct partition this node belongs to
    CoreRole role = CoreRole::Encoding;
    std::vector<std::string> inputs;  // graph-input names or upstream node ids
    std::uint64_t rows = 1;           // stored operand rows
    std::uint64_t dim = 0;
};

// F(I, P, C): kernel functions over item-memory inputs I and composed inputs
// P, partitioned by control constructs C. C empty means single-mode (fully
// spatially mappable with no multiplexing).
struct KernelGraph {
    std::string name;
    std::vector<KernelNode> nodes;
    std::vector<std::string> item_inputs;      // I
    std::vector<std::string> composed_inputs;  // P
    std::vector<std::string> control_modes;    // C
    std::vector<std::string> schedule;         // mode execution order

    void validate() const;

    // Three-mode tree-structured classifier: encoding, tree search,
    // associative search.
    static KernelGraph tree_classifier_example(std::uint32_t dim = 2048);
};

enum class MappingStrategy : std::uint8_t { Spatial, Temporal };

struct MappedGroup {
    std::string id;
    std::string mode;  // owning mode, or "shared" under temporal mapping
    CoreRole role = CoreRole::Encoding;
    CoreKind kind = CoreKind::Static;
    Engine engine = Engine::Encoding;
    MemoryKind memory = MemoryKind::SRAM;
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::uint64_t stored_bits = 0;  // operand footprint the group must hold
    bool preloaded = true;          // contents exist before the run (programming epoch)

    std::uint64_t capacity_bits() const { return rows * cols; }

    bool operator==(const MappedGroup&) const = default;
};

struct Mapping {
    std::string workload;
    MappingStrategy strategy = MappingStrategy::Spatial;
    std::vector<MappedGroup> groups;
    std::uint64_t reprogram_events = 0;  // mode switches scheduled at lowering time
    TechNode node = TechNode::N65;
    PeripheryConfig periphery;

    const MappedGroup& group(const std::string& id) const;
    std::uint64_t total_capacity_bits() const;
    std::uint64_t stored_bits_total() const;
};

// Lowers a kernel graph: Spatial dedicates one core group per (mode, role)
// with no reprogramming; Temporal shares one group per role across modes and
// pays a content swap at every scheduled mode switch.
Mapping lower_kernels(const KernelGraph& kg, MappingStrategy strategy,
                      MemoryKind memory = MemoryKind::SRAM);

// Synthetic trace of a lowered kernel graph (one array op per node per
// scheduled activation of its mode).
struct OpTrace;
OpTrace trace_kernel_graph(const KernelGraph& kg, const Mapping& mapping);

// --- Traces and cost reports ---------------------------------------------------

struct CoreCounters {
    std::uint64_t read_accesses = 0;
    std::uint64_t reads_bits = 0;
    std::uint64_t write_accesses = 0;
    std::uint64_t writes_bits = 0;
    std::uint64_t op_accesses = 0;  // in-memory MAC/XOR array activations
    std::uint64_t op_bits = 0;

    std::uint64_t cycles() const { return read_accesses + write_accesses + op_accesses; }
};

struct PeripheryCounters {
    std::uint64_t adder_ops = 0, adder_bits = 0;
    std::uint64_t threshold_ops = 0, threshold_bits = 0;
    std::uint64_t shift_ops = 0, shift_bits = 0;
    std::uint64_t wta_ops = 0;
    std::uint64_t exponent_ops = 0;
    std::uint64_t buffer_read_bits = 0, buffer_write_bits = 0;

    std::uint64_t vector_ops() const {
        return adder_ops + threshold_ops + shift_ops + wta_ops + exponent_ops;
    }
};

struct StageTrace {
    std::string name;
    std::map<std::string, CoreCounters> cores;  // by mapped-group id
    PeripheryCounters periphery;
};

// Deterministic operation counts from executing a workload against a
// mapping. Counts are technology independent; the estimator turns them into
// energy and time.
struct OpTrace {
    std::string workload;
    std::vector<StageTrace> stages;
    std::uint64_t reprogram_events = 0;
    double wall_duration_s = 0;  // real-time session span the memories stay allocated

    CoreCounters totals(const std::string& group_id) const;
};

struct CostReport {
    double read_energy_j = 0;
    double write_energy_j = 0;
    double compute_energy_j = 0;  // in-memory ops plus periphery logic
    double standby_energy_j = 0;
    double refresh_energy_j = 0;
    double total_energy_j = 0;    // sum of the splits
    double latency_s = 0;         // compute critical path
    double duration_s = 0;        // max(wall duration, latency)
    double area_mm2 = 0;
    double edp_js = 0;            // total energy x latency
    std::map<std::string, double> footprint_bytes;  // stored bits per group
    double total_footprint_bytes = 0;

    nlohmann::json to_json() const;
};

// Energy: reads/writes/ops at per-bit device cost plus periphery logic;
// standby power accrues over the full duration for static cores and over
// busy time for dynamic cores; eDRAM refresh rewrites the allocated bits
// every refresh interval. Latency: stages run in sequence, core groups
// within a stage in parallel, periphery logic after the arrays. Area: cells
// (capacity over bits-per-cell) plus a periphery share per group.
CostReport estimate_cost(const OpTrace& trace, const Mapping& mapping, const TechTable& table);

// --- Footprint bounds ------------------------------------------------------------

enum class WorkloadCategory : std::uint8_t {
    Classification,
    Clustering,
    OutlierDetection,
    Genomics,
    Factorization,
    RoboticReasoning,
    MultiModalPerception,
};

const char* category_name(WorkloadCategory c);
WorkloadCategory category_from_name(const std::string& name);

enum class EncodingKind : std::uint8_t { RandomProjection, NGram };

// Storage-relevant scale of one dataset/workload configuration.
struct DatasetScale {
    std::uint32_t dim = 2048;
    std::uint64_t classes = 2;       // classes, clusters, or stored models
    std::uint64_t features = 16;     // input feature count (projection rows)
    std::uint64_t alphabet = 4;      // n-gram item alphabet
    std::uint64_t ngram = 4;         // n-gram window length
    std::uint64_t references = 8;    // stored reference vectors (genomics DB)
    std::uint64_t codebooks = 3;     // factorization codebooks
    std::uint64_t items = 8;         // items per codebook
    std::uint64_t sensors = 4;
    std::uint64_t sensor_values = 16;
    std::uint64_t actuators = 1;
    std::uint64_t actuator_values = 4;
    std::uint64_t modalities = 3;
    std::uint64_t levels = 16;       // feature-value embedding levels
};

struct WorkloadDescriptor {
    WorkloadCategory category = WorkloadCategory::Classification;
    int repr_bits = 1;       // 1 (binary) or 4 (multi-bit accumulators)
    EncodingKind encoding = EncodingKind::RandomProjection;
    int bits_per_cell = 1;   // 1 or 3 (multi-bit PCM)
    DatasetScale scale_min;  // smallest feasible dataset for the category
    DatasetScale scale_max;  // largest considered dataset

    static WorkloadDescriptor defaults(WorkloadCategory category);
    void validate() const;
};

// Logical storage bits of one concrete configuration of a category's kernel
// set (item memories, class/program/codebook stores, working buffers).
std::uint64_t category_footprint_bits(WorkloadCategory category, const DatasetScale& scale,
                                      int repr_bits, EncodingKind encoding);

struct FootprintBound {
    std::uint64_t lower_bytes = 0;
    std::uint64_t upper_bytes = 0;
};

// Lower bound: binary representation, random-projection encoding, smallest
// dataset scale, 3 bits per cell. Upper bound: 4-bit representation, n-gram
// encoding, largest scale, single-bit cells.
FootprintBound footprint_bounds(const WorkloadDescriptor& wd);

} // namespace vsa::imc
