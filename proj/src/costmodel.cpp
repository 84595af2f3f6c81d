#include "vsakit/costmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "vsakit/serialize.hpp"

namespace vsa::imc {

// --- Names -----------------------------------------------------------------

const char* memory_name(MemoryKind kind) {
    switch (kind) {
        case MemoryKind::SRAM: return "sram";
        case MemoryKind::eDRAM: return "edram";
        case MemoryKind::RRAM: return "rram";
        case MemoryKind::MRAM: return "mram";
        case MemoryKind::PCM: return "pcm";
        case MemoryKind::FlashNAND: return "flash_nand";
    }
    return "?";
}

MemoryKind memory_from_name(const std::string& name) {
    for (MemoryKind k : {MemoryKind::SRAM, MemoryKind::eDRAM, MemoryKind::RRAM, MemoryKind::MRAM,
                         MemoryKind::PCM, MemoryKind::FlashNAND})
        if (name == memory_name(k)) return k;
    raise(ErrorCode::IncompleteTable, "unknown memory technology '" + name + "'");
}

const char* node_name(TechNode node) {
    switch (node) {
        case TechNode::N65: return "65";
        case TechNode::N40_45: return "40_45";
        case TechNode::N22: return "22";
    }
    return "?";
}

TechNode node_from_name(const std::string& name) {
    if (name == "65" || name == "65nm") return TechNode::N65;
    if (name == "40_45" || name == "45" || name == "40" || name == "40/45") return TechNode::N40_45;
    if (name == "22" || name == "22nm") return TechNode::N22;
    raise(ErrorCode::UnsupportedNode, "unsupported technology node '" + name + "'");
}

const char* role_name(CoreRole role) {
    switch (role) {
        case CoreRole::ItemMemory: return "item_memory";
        case CoreRole::ValueEmbedding: return "value_embedding";
        case CoreRole::Encoding: return "encoding";
        case CoreRole::SensorMemory: return "sensor_memory";
        case CoreRole::ActuatorMemory: return "actuator_memory";
        case CoreRole::SapBuffer: return "sap";
        case CoreRole::ProgramMemory: return "program_memory";
        case CoreRole::Cleanup: return "cleanup";
        case CoreRole::Classification: return "classification";
        case CoreRole::Disentangle: return "disentangle";
        case CoreRole::Similarity: return "similarity";
        case CoreRole::Projection: return "projection";
        case CoreRole::TreeSearch: return "tree_search";
        case CoreRole::AssociativeSearch: return "associative_search";
    }
    return "?";
}

const char* engine_name(Engine engine) {
    return engine == Engine::Encoding ? "encoding" : "similarity_check";
}

const char* core_kind_name(CoreKind kind) {
    return kind == CoreKind::Static ? "static" : "dynamic";
}

// --- Tech table ---------------------------------------------------------------

void MemoryTechnology::validate() const {
    if (read_energy_j <= 0 || write_energy_j <= 0 || read_latency_s <= 0 ||
        write_latency_s <= 0 || cell_area_mm2 <= 0)
        raise(ErrorCode::IncompleteTable,
              std::string("memory entry '") + memory_name(kind) + "' has missing parameters");
    if (!volatile_mem && write_energy_j < read_energy_j)
        raise(ErrorCode::IncompleteTable,
              std::string("NVM entry '") + memory_name(kind) + "' must have write >= read energy");
    if ((kind == MemoryKind::eDRAM) != (refresh_interval_s > 0))
        raise(ErrorCode::IncompleteTable, "refresh interval must be present exactly for eDRAM");
    if (bits_per_cell < 1)
        raise(ErrorCode::IncompleteTable, "bits_per_cell must be >= 1");
}

namespace {

TechTable::ScaleFactors factors_from_json(const nlohmann::json& j) {
    return {j.at("energy").get<double>(), j.at("latency").get<double>(),
            j.at("area").get<double>()};
}

} // namespace

TechTable TechTable::load(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || j.value("format", "") != "vsakit-tech-table")
        raise(ErrorCode::ParseError, "not a tech table: " + path);

    TechTable table;
    for (const auto& [name, entry] : j.at("memories").items()) {
        MemoryTechnology tech;
        tech.kind = memory_from_name(name);
        tech.node = TechNode::N65;
        tech.read_energy_j = entry.at("read_energy_j_per_bit").get<double>();
        tech.write_energy_j = entry.at("write_energy_j_per_bit").get<double>();
        tech.read_latency_s = entry.at("read_latency_s").get<double>();
        tech.write_latency_s = entry.at("write_latency_s").get<double>();
        tech.cell_area_mm2 = entry.at("cell_area_mm2").get<double>();
        tech.standby_w_per_bit = entry.at("standby_w_per_bit").get<double>();
        tech.refresh_interval_s = entry.at("refresh_interval_s").get<double>();
        tech.retention_s = entry.at("retention_s").get<double>();
        tech.bits_per_cell = entry.at("bits_per_cell").get<int>();
        tech.volatile_mem = entry.at("volatile").get<bool>();
        tech.source = entry.value("source", "");
        tech.validate();
        table.memories_[tech.kind] = tech;
    }

    const auto& p = j.at("periphery");
    table.periphery_.adder_energy_j_per_bit = p.at("adder_energy_j_per_bit").get<double>();
    table.periphery_.threshold_energy_j_per_bit = p.at("threshold_energy_j_per_bit").get<double>();
    table.periphery_.shift_energy_j_per_bit = p.at("shift_energy_j_per_bit").get<double>();
    table.periphery_.buffer_energy_j_per_bit = p.at("buffer_energy_j_per_bit").get<double>();
    table.periphery_.wta_energy_j_per_op = p.at("wta_energy_j_per_op").get<double>();
    table.periphery_.exponent_energy_j_per_op = p.at("exponent_energy_j_per_op").get<double>();
    table.periphery_.logic_latency_s_per_op = p.at("logic_latency_s_per_op").get<double>();
    table.periphery_.area_mm2_per_group = p.at("area_mm2_per_group").get<double>();
    table.periphery_.source = p.value("source", "");

    const auto& scaling = j.at("node_scaling");
    for (TechNode node : {TechNode::N65, TechNode::N40_45, TechNode::N22}) {
        table.silicon_scale_[node] = factors_from_json(scaling.at("silicon").at(node_name(node)));
        table.nvm_scale_[node] = factors_from_json(scaling.at("nvm").at(node_name(node)));
    }
    return table;
}

std::string TechTable::default_path() {
    if (const char* env = std::getenv("VSAKIT_DATA_DIR"))
        return std::string(env) + "/tech_table_65nm.json";
#ifdef VSAKIT_DEFAULT_DATA_DIR
    return std::string(VSAKIT_DEFAULT_DATA_DIR) + "/tech_table_65nm.json";
#else
    return "data/tech_table_65nm.json";
#endif
}

TechTable TechTable::load_default() { return load(default_path()); }

const MemoryTechnology& TechTable::base(MemoryKind kind) const {
    auto it = memories_.find(kind);
    if (it == memories_.end())
        raise(ErrorCode::IncompleteTable,
              std::string("tech table has no entry for ") + memory_name(kind));
    return it->second;
}

MemoryTechnology TechTable::at_node(MemoryKind kind, TechNode node) const {
    return scale_node(base(kind), node, *this);
}

PeripheryParams TechTable::periphery_at(TechNode node) const {
    auto it = silicon_scale_.find(node);
    if (it == silicon_scale_.end())
        raise(ErrorCode::UnsupportedNode, "no scaling factors for requested node");
    PeripheryParams p = periphery_;
    p.adder_energy_j_per_bit *= it->second.energy;
    p.threshold_energy_j_per_bit *= it->second.energy;
    p.shift_energy_j_per_bit *= it->second.energy;
    p.buffer_energy_j_per_bit *= it->second.energy;
    p.wta_energy_j_per_op *= it->second.energy;
    p.exponent_energy_j_per_op *= it->second.energy;
    p.logic_latency_s_per_op *= it->second.latency;
    p.area_mm2_per_group *= it->second.area;
    return p;
}

const TechTable::ScaleFactors& TechTable::silicon_factors(TechNode node) const {
    auto it = silicon_scale_.find(node);
    if (it == silicon_scale_.end())
        raise(ErrorCode::UnsupportedNode, "no silicon scaling factors for requested node");
    return it->second;
}

const TechTable::ScaleFactors& TechTable::nvm_factors(TechNode node) const {
    auto it = nvm_scale_.find(node);
    if (it == nvm_scale_.end())
        raise(ErrorCode::UnsupportedNode, "no NVM scaling factors for requested node");
    return it->second;
}

MemoryTechnology scale_node(const MemoryTechnology& tech, TechNode target,
                            const TechTable& table) {
    if (tech.node != TechNode::N65)
        raise(ErrorCode::UnsupportedNode, "scaling starts from the 65 nm base entry");
    const TechTable::ScaleFactors& f =
        tech.volatile_mem ? table.silicon_factors(target) : table.nvm_factors(target);

    MemoryTechnology out = tech;
    out.node = target;
    out.read_energy_j *= f.energy;
    out.write_energy_j *= f.energy;
    out.read_latency_s *= f.latency;
    out.write_latency_s *= f.latency;
    out.cell_area_mm2 *= f.area;
    out.standby_w_per_bit *= f.energy;
    return out;
}

// --- Architecture ---------------------------------------------------------------

Architecture Architecture::from_json(const nlohmann::json& j) {
    Architecture arch;
    arch.name = j.value("name", "custom");
    arch.node = node_from_name(j.value("node", "65"));
    for (const auto& c : j.at("cores")) {
        CoreSpec core;
        core.id = c.at("id").get<std::string>();
        core.engine = c.value("engine", "encoding") == std::string("similarity_check")
                          ? Engine::SimilarityCheck
                          : Engine::Encoding;
        core.kind = c.value("kind", "static") == std::string("dynamic") ? CoreKind::Dynamic
                                                                        : CoreKind::Static;
        std::string role = c.at("role").get<std::string>();
        bool found = false;
        for (int r = 0; r <= static_cast<int>(CoreRole::AssociativeSearch); ++r) {
            if (role == role_name(static_cast<CoreRole>(r))) {
                core.role = static_cast<CoreRole>(r);
                found = true;
                break;
            }
        }
        if (!found) raise(ErrorCode::ParseError, "unknown core role '" + role + "'");
        core.rows = c.at("rows").get<std::uint64_t>();
        core.cols = c.at("cols").get<std::uint64_t>();
        core.memory = memory_from_name(c.at("memory").get<std::string>());
        arch.cores.push_back(std::move(core));
    }
    if (j.contains("periphery")) {
        const auto& p = j.at("periphery");
        arch.periphery.sparsity_scheduler = p.value("sparsity_scheduler", false);
        arch.periphery.sparsity = p.value("sparsity", 0.0);
        arch.periphery.fp_partitioner = p.value("fp_partitioner", false);
        arch.periphery.dimension_divider = p.value("dimension_divider", 1);
        arch.periphery.buffer_bits = p.value("buffer_bits", 0);
    }
    if (arch.periphery.dimension_divider < 1)
        raise(ErrorCode::ParseError, "dimension_divider must be >= 1");
    return arch;
}

nlohmann::json Architecture::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["node"] = node_name(node);
    j["cores"] = nlohmann::json::array();
    for (const auto& c : cores) {
        j["cores"].push_back({{"id", c.id},
                              {"engine", engine_name(c.engine)},
                              {"kind", core_kind_name(c.kind)},
                              {"role", role_name(c.role)},
                              {"rows", c.rows},
                              {"cols", c.cols},
                              {"memory", memory_name(c.memory)}});
    }
    j["periphery"] = {{"sparsity_scheduler", periphery.sparsity_scheduler},
                      {"sparsity", periphery.sparsity},
                      {"fp_partitioner", periphery.fp_partitioner},
                      {"dimension_divider", periphery.dimension_divider},
                      {"buffer_bits", periphery.buffer_bits}};
    return j;
}

// --- Kernel graphs ---------------------------------------------------------------

void KernelGraph::validate() const {
    std::set<std::string> known(item_inputs.begin(), item_inputs.end());
    known.insert(composed_inputs.begin(), composed_inputs.end());
    std::set<std::string> modes;
    for (const auto& node : nodes) {
        if (node.dim == 0)
            raise(ErrorCode::InvalidArgument, "kernel node '" + node.id + "' has zero dim");
        bool reachable = false;
        for (const auto& in : node.inputs) {
            if (!known.count(in))
                raise(ErrorCode::InvalidArgument,
                      "kernel node '" + node.id + "' reads unknown input '" + in + "'");
            reachable = true;
        }
        if (!reachable)
            raise(ErrorCode::InvalidArgument,
                  "kernel node '" + node.id + "' is not reachable from any input");
        known.insert(node.id);
        modes.insert(node.mode);
    }
    // C empty if and only if the graph is single-mode.
    if (control_modes.empty() != (modes.size() <= 1))
        raise(ErrorCode::InvalidArgument,
              "control constructs must be empty exactly for mode-partitioned graphs");
    for (const auto& m : schedule)
        if (!modes.count(m))
            raise(ErrorCode::InvalidArgument, "schedule references unknown mode '" + m + "'");
}

KernelGraph KernelGraph::tree_classifier_example(std::uint32_t dim) {
    KernelGraph kg;
    kg.name = "tree_classifier";
    kg.item_inputs = {"symbols", "class_items"};
    kg.composed_inputs = {"query"};
    kg.control_modes = {"mode_select_encoding", "mode_select_tree", "mode_select_assoc"};

    kg.nodes = {
        // Encoding mode: symbols bind into leaf clusters and bundle per class.
        {"enc_bind", KernelOp::Bind, "encoding", CoreRole::ItemMemory, {"symbols"}, 64, dim},
        {"enc_bundle", KernelOp::Bundle, "encoding", CoreRole::Encoding, {"enc_bind"}, 8, dim},
        // Tree search mode: similarity against node discriminators per level.
        {"tree_sim", KernelOp::Similarity, "tree_search", CoreRole::TreeSearch,
         {"query", "enc_bundle"}, 16, dim},
        // Associative search at the leaf.
        {"assoc_sim", KernelOp::Similarity, "assoc_search", CoreRole::AssociativeSearch,
         {"query", "class_items"}, 8, dim},
    };
    kg.schedule = {"encoding", "tree_search", "assoc_search", "tree_search", "assoc_search"};
    kg.validate();
    return kg;
}

const MappedGroup& Mapping::group(const std::string& id) const {
    for (const auto& g : groups)
        if (g.id == id) return g;
    raise(ErrorCode::MappingError, "mapping has no group '" + id + "'");
}

std::uint64_t Mapping::total_capacity_bits() const {
    std::uint64_t total = 0;
    for (const auto& g : groups) total += g.capacity_bits();
    return total;
}

std::uint64_t Mapping::stored_bits_total() const {
    std::uint64_t total = 0;
    for (const auto& g : groups) total += g.stored_bits;
    return total;
}

Mapping lower_kernels(const KernelGraph& kg, MappingStrategy strategy, MemoryKind memory) {
    kg.validate();
    Mapping mapping;
    mapping.workload = kg.name;
    mapping.strategy = strategy;

    // Distinct modes in first-appearance order.
    std::vector<std::string> modes;
    for (const auto& node : kg.nodes)
        if (std::find(modes.begin(), modes.end(), node.mode) == modes.end())
            modes.push_back(node.mode);
    const bool single_mode = modes.size() <= 1;

    // A mode's nodes keep their operands resident together, so a spatial
    // group holds the sum of its nodes' footprints. A temporal group holds
    // one mode's working set at a time: the maximum per-mode sum.
    auto add_group = [&](const std::string& mode_label, CoreRole role, bool all_modes) {
        std::uint64_t cols = 0;
        std::map<std::string, std::uint64_t> stored_per_mode;
        for (const auto& node : kg.nodes) {
            if (node.role != role) continue;
            if (!all_modes && node.mode != mode_label) continue;
            cols = std::max<std::uint64_t>(cols, node.dim);
            stored_per_mode[node.mode] += node.rows * node.dim;
        }
        if (cols == 0) return;
        std::uint64_t stored = 0;
        for (const auto& [mode, bits] : stored_per_mode) stored = std::max(stored, bits);
        MappedGroup group;
        group.id = mode_label + "/" + role_name(role);
        group.mode = mode_label;
        group.role = role;
        group.kind = strategy == MappingStrategy::Temporal && !single_mode ? CoreKind::Dynamic
                                                                           : CoreKind::Static;
        group.memory = memory;
        group.cols = cols;
        group.rows = (stored + cols - 1) / cols;
        group.stored_bits = stored;
        mapping.groups.push_back(std::move(group));
    };

    std::vector<CoreRole> roles;
    for (const auto& node : kg.nodes)
        if (std::find(roles.begin(), roles.end(), node.role) == roles.end())
            roles.push_back(node.role);

    if (strategy == MappingStrategy::Spatial || single_mode) {
        // Single-mode graphs lower identically under both strategies.
        for (const auto& mode : modes)
            for (CoreRole role : roles) add_group(mode, role, false);
        mapping.reprogram_events = 0;
    } else {
        for (CoreRole role : roles) add_group("shared", role, true);
        std::uint64_t switches = 0;
        for (std::size_t i = 1; i < kg.schedule.size(); ++i)
            if (kg.schedule[i] != kg.schedule[i - 1]) ++switches;
        mapping.reprogram_events = switches;
    }
    return mapping;
}

OpTrace trace_kernel_graph(const KernelGraph& kg, const Mapping& mapping) {
    kg.validate();
    OpTrace trace;
    trace.workload = kg.name;
    trace.reprogram_events = mapping.reprogram_events;

    // Distinct modes for group lookup under spatial mapping.
    std::vector<std::string> modes;
    for (const auto& node : kg.nodes)
        if (std::find(modes.begin(), modes.end(), node.mode) == modes.end())
            modes.push_back(node.mode);
    const bool shared = mapping.strategy == MappingStrategy::Temporal && modes.size() > 1;

    auto group_id = [&](const KernelNode& node) {
        return (shared ? std::string("shared") : node.mode) + "/" + role_name(node.role);
    };

    // One-time programming epoch for every group.
    StageTrace provision;
    provision.name = "provision";
    for (const auto& g : mapping.groups) {
        CoreCounters& c = provision.cores[g.id];
        c.write_accesses += g.rows;
        c.writes_bits += g.stored_bits;
    }
    trace.stages.push_back(std::move(provision));

    std::string previous_mode;
    for (const auto& mode : kg.schedule) {
        StageTrace stage;
        stage.name = mode;
        if (shared && !previous_mode.empty() && previous_mode != mode) {
            // Content swap on the shared groups used by the incoming mode.
            for (const auto& node : kg.nodes) {
                if (node.mode != mode) continue;
                CoreCounters& c = stage.cores[group_id(node)];
                c.write_accesses += node.rows;
                c.writes_bits += node.rows * node.dim;
            }
        }
        for (const auto& node : kg.nodes) {
            if (node.mode != mode) continue;
            CoreCounters& c = stage.cores[group_id(node)];
            c.op_accesses += 1;
            c.op_bits += node.rows * node.dim;
            stage.periphery.buffer_write_bits += node.dim;
            if (node.op == KernelOp::Bundle || node.op == KernelOp::Similarity) {
                stage.periphery.adder_ops += 1;
                stage.periphery.adder_bits += node.dim;
            }
            if (node.op == KernelOp::Similarity) {
                stage.periphery.wta_ops += node.rows;
            }
            if (node.op == KernelOp::Permute) {
                stage.periphery.shift_ops += 1;
                stage.periphery.shift_bits += node.dim;
            }
        }
        previous_mode = mode;
        trace.stages.push_back(std::move(stage));
    }
    return trace;
}

CoreCounters OpTrace::totals(const std::string& group_id) const {
    CoreCounters total;
    for (const auto& stage : stages) {
        auto it = stage.cores.find(group_id);
        if (it == stage.cores.end()) continue;
        total.read_accesses += it->second.read_accesses;
        total.reads_bits += it->second.reads_bits;
        total.write_accesses += it->second.write_accesses;
        total.writes_bits += it->second.writes_bits;
        total.op_accesses += it->second.op_accesses;
        total.op_bits += it->second.op_bits;
    }
    return total;
}

// --- Cost estimation --------------------------------------------------------------

nlohmann::json CostReport::to_json() const {
    nlohmann::json j;
    j["energy_j"] = {{"read", read_energy_j},
                     {"write", write_energy_j},
                     {"compute", compute_energy_j},
                     {"standby", standby_energy_j},
                     {"refresh", refresh_energy_j},
                     {"total", total_energy_j}};
    j["latency_s"] = latency_s;
    j["duration_s"] = duration_s;
    j["area_mm2"] = area_mm2;
    j["edp_js"] = edp_js;
    j["footprint_bytes"] = footprint_bytes;
    j["total_footprint_bytes"] = total_footprint_bytes;
    return j;
}

CostReport estimate_cost(const OpTrace& trace, const Mapping& mapping, const TechTable& table) {
    CostReport report;
    const PeripheryParams periphery = table.periphery_at(mapping.node);
    const std::uint64_t fold = std::max<std::uint64_t>(1, mapping.periphery.dimension_divider);

    std::map<std::string, MemoryTechnology> tech_of;
    for (const auto& g : mapping.groups) tech_of[g.id] = table.at_node(g.memory, mapping.node);

    std::map<std::string, double> busy_s;
    for (const auto& stage : trace.stages) {
        double stage_latency = 0.0;
        for (const auto& [gid, c] : stage.cores) {
            auto it = tech_of.find(gid);
            if (it == tech_of.end())
                raise(ErrorCode::MappingError, "trace touches unmapped group '" + gid + "'");
            const MemoryTechnology& tech = it->second;

            report.read_energy_j += static_cast<double>(c.reads_bits) * tech.read_energy_j;
            report.write_energy_j += static_cast<double>(c.writes_bits) * tech.write_energy_j;
            // An in-memory op is a read-class row activation over its operand bits.
            report.compute_energy_j += static_cast<double>(c.op_bits) * tech.read_energy_j;

            // Vector folding trades cols for extra access cycles.
            double t = static_cast<double>((c.read_accesses + c.op_accesses) * fold) *
                           tech.read_latency_s +
                       static_cast<double>(c.write_accesses * fold) * tech.write_latency_s;
            busy_s[gid] += t;
            stage_latency = std::max(stage_latency, t);
        }
        const PeripheryCounters& p = stage.periphery;
        report.compute_energy_j +=
            static_cast<double>(p.adder_bits) * periphery.adder_energy_j_per_bit +
            static_cast<double>(p.threshold_bits) * periphery.threshold_energy_j_per_bit +
            static_cast<double>(p.shift_bits) * periphery.shift_energy_j_per_bit +
            static_cast<double>(p.buffer_read_bits + p.buffer_write_bits) *
                periphery.buffer_energy_j_per_bit +
            static_cast<double>(p.wta_ops) * periphery.wta_energy_j_per_op +
            static_cast<double>(p.exponent_ops) * periphery.exponent_energy_j_per_op;
        stage_latency +=
            static_cast<double>(p.vector_ops() * fold) * periphery.logic_latency_s_per_op;
        report.latency_s += stage_latency;
    }

    report.duration_s = std::max(trace.wall_duration_s, report.latency_s);

    for (const auto& g : mapping.groups) {
        const MemoryTechnology& tech = tech_of[g.id];
        // Static cores hold content for the whole session; dynamic cores are
        // allocated only while busy.
        double alloc_s = g.kind == CoreKind::Static ? report.duration_s : busy_s[g.id];
        report.standby_energy_j +=
            static_cast<double>(g.capacity_bits()) * tech.standby_w_per_bit * alloc_s;
        if (tech.refresh_interval_s > 0) {
            double refreshes = alloc_s / tech.refresh_interval_s;
            report.refresh_energy_j += refreshes * static_cast<double>(g.capacity_bits()) *
                                       tech.write_energy_j;
        }
        // Folding narrows the column periphery, not the cell array.
        report.area_mm2 += static_cast<double>(g.capacity_bits()) /
                               static_cast<double>(tech.bits_per_cell) * tech.cell_area_mm2 +
                           periphery.area_mm2_per_group / static_cast<double>(fold);
        report.footprint_bytes[g.id] = static_cast<double>(g.stored_bits) / 8.0;
        report.total_footprint_bytes += static_cast<double>(g.stored_bits) / 8.0;
    }

    report.total_energy_j = report.read_energy_j + report.write_energy_j +
                            report.compute_energy_j + report.standby_energy_j +
                            report.refresh_energy_j;
    report.edp_js = report.total_energy_j * report.latency_s;
    return report;
}

// --- Footprint bounds ---------------------------------------------------------------

const char* category_name(WorkloadCategory c) {
    switch (c) {
        case WorkloadCategory::Classification: return "classification";
        case WorkloadCategory::Clustering: return "clustering";
        case WorkloadCategory::OutlierDetection: return "outlier_detection";
        case WorkloadCategory::Genomics: return "genomics";
        case WorkloadCategory::Factorization: return "factorization";
        case WorkloadCategory::RoboticReasoning: return "robotic_reasoning";
        case WorkloadCategory::MultiModalPerception: return "multimodal_perception";
    }
    return "?";
}

WorkloadCategory category_from_name(const std::string& name) {
    for (int c = 0; c <= static_cast<int>(WorkloadCategory::MultiModalPerception); ++c)
        if (name == category_name(static_cast<WorkloadCategory>(c)))
            return static_cast<WorkloadCategory>(c);
    raise(ErrorCode::InvalidArgument, "unknown workload category '" + name + "'");
}

void WorkloadDescriptor::validate() const {
    if (repr_bits != 1 && repr_bits != 4)
        raise(ErrorCode::InvalidArgument, "descriptor repr bit-width must be 1 or 4");
    if (bits_per_cell != 1 && bits_per_cell != 3)
        raise(ErrorCode::InvalidArgument, "descriptor bits_per_cell must be 1 or 3");
    if (scale_min.dim < 1 || scale_max.dim < scale_min.dim)
        raise(ErrorCode::InvalidArgument, "descriptor scales must satisfy min <= max");
}

std::uint64_t category_footprint_bits(WorkloadCategory category, const DatasetScale& s,
                                      int repr_bits, EncodingKind encoding) {
    const std::uint64_t d = s.dim;
    const std::uint64_t rb = static_cast<std::uint64_t>(repr_bits);

    // Item memory: projection rows are binary; n-gram item memories carry the
    // working representation plus a permuted window buffer.
    std::uint64_t item_memory = encoding == EncodingKind::RandomProjection
                                    ? s.features * d
                                    : s.alphabet * d * rb + s.ngram * d * rb;
    // Double-buffered query and result lines.
    std::uint64_t buffers = 4 * d * rb;

    std::uint64_t stores = 0;
    switch (category) {
        case WorkloadCategory::Classification:
            stores = s.classes * d * rb;
            break;
        case WorkloadCategory::Clustering:
            stores = s.classes * d * rb;  // centroids
            break;
        case WorkloadCategory::OutlierDetection:
            stores = s.classes * d * rb + d * rb;  // models plus threshold statistics
            break;
        case WorkloadCategory::Genomics:
            stores = s.references * d * rb;  // reference hypervector database
            break;
        case WorkloadCategory::Factorization:
            item_memory = s.codebooks * s.items * d;           // codebooks are the item memory
            stores = s.codebooks * d * rb;                     // factor estimates
            break;
        case WorkloadCategory::RoboticReasoning:
            item_memory = (s.sensors + s.sensor_values + s.actuators + s.actuator_values) * d;
            stores = d * rb                         // program vector
                     + s.actuator_values * d;       // clean-up targets
            break;
        case WorkloadCategory::MultiModalPerception:
            item_memory = s.levels * d + s.modalities * s.features * d;
            stores = s.classes * d * rb;
            break;
    }
    return item_memory + stores + buffers;
}

WorkloadDescriptor WorkloadDescriptor::defaults(WorkloadCategory category) {
    WorkloadDescriptor wd;
    wd.category = category;

    DatasetScale lo;  // smallest feasible dataset per category
    DatasetScale hi;  // largest considered dataset
    hi.dim = 10000;
    switch (category) {
        case WorkloadCategory::Classification:
            lo = {.dim = 2048, .classes = 2, .features = 16};
            hi = {.dim = 10000, .classes = 256, .features = 784, .alphabet = 256, .ngram = 4};
            break;
        case WorkloadCategory::Clustering:
            lo = {.dim = 2048, .classes = 2, .features = 8};
            hi = {.dim = 10000, .classes = 16, .features = 64, .alphabet = 16, .ngram = 3};
            break;
        case WorkloadCategory::OutlierDetection:
            lo = {.dim = 2048, .classes = 2, .features = 16};
            hi = {.dim = 10000, .classes = 300, .features = 784, .alphabet = 256, .ngram = 4};
            break;
        case WorkloadCategory::Genomics:
            lo = {.dim = 2048, .classes = 1, .features = 8, .alphabet = 4, .references = 8};
            hi = {.dim = 10000, .classes = 1, .features = 64, .alphabet = 4, .ngram = 16,
                  .references = 262144};
            break;
        case WorkloadCategory::Factorization:
            lo = {.dim = 1024, .codebooks = 3, .items = 8};
            hi = {.dim = 10000, .alphabet = 64, .ngram = 4, .codebooks = 4, .items = 256};
            break;
        case WorkloadCategory::RoboticReasoning:
            lo = {.dim = 2048, .sensors = 4, .sensor_values = 8, .actuators = 1,
                  .actuator_values = 4};
            hi = {.dim = 10000, .alphabet = 16, .ngram = 3, .sensors = 16, .sensor_values = 32,
                  .actuators = 4, .actuator_values = 16};
            break;
        case WorkloadCategory::MultiModalPerception:
            lo = {.dim = 2048, .classes = 2, .features = 2, .modalities = 2, .levels = 8};
            hi = {.dim = 10000, .classes = 16, .features = 8, .alphabet = 32, .ngram = 3,
                  .modalities = 4, .levels = 64};
            break;
    }
    wd.scale_min = lo;
    wd.scale_max = hi;
    return wd;
}

FootprintBound footprint_bounds(const WorkloadDescriptor& wd) {
    wd.validate();
    std::uint64_t lower_bits = category_footprint_bits(wd.category, wd.scale_min, 1,
                                                       EncodingKind::RandomProjection);
    std::uint64_t upper_bits =
        category_footprint_bits(wd.category, wd.scale_max, 4, EncodingKind::NGram);
    FootprintBound bound;
    bound.lower_bytes = lower_bits / 3 / 8;  // multi-bit cells, 3 bits each
    bound.upper_bytes = upper_bits / 1 / 8;  // single-bit cells
    return bound;
}

} // namespace vsa::imc
