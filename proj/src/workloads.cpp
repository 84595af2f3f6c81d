#include "vsakit/workloads.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <memory>
#include <sstream>
#include <thread>

#include "vsakit/prng.hpp"
#include "vsakit/synth.hpp"

namespace vsa::imc {

namespace {

// Technology-independent operation counts recorded per demand while the
// functional pipeline runs; the tracer rebinds them to mapped groups and
// applies the periphery knobs.
struct ProtoStage {
    std::string name;
    std::map<std::string, CoreCounters> by_demand;
    PeripheryCounters periphery;
    std::uint64_t reprogram_events = 0;
};

struct Proto {
    std::vector<ProtoStage> stages;
};

std::function<OpTrace(const Mapping&)> make_tracer(std::string workload_name,
                                                   std::shared_ptr<Proto> proto,
                                                   double wall_duration_s) {
    return [workload_name, proto, wall_duration_s](const Mapping& mapping) {
        OpTrace trace;
        trace.workload = workload_name;
        trace.wall_duration_s = wall_duration_s;
        trace.reprogram_events = mapping.reprogram_events;

        const PeripheryConfig& knobs = mapping.periphery;
        const double keep = knobs.sparsity_scheduler ? 1.0 - knobs.sparsity : 1.0;

        // One-time programming epoch for every mapped group.
        StageTrace provision;
        provision.name = "provision";
        for (const auto& g : mapping.groups) {
            if (!g.preloaded) continue;
            CoreCounters& c = provision.cores[g.id];
            std::uint64_t bits = std::min<std::uint64_t>(g.stored_bits, g.capacity_bits());
            c.writes_bits += bits;
            c.write_accesses += g.cols ? (bits + g.cols - 1) / g.cols : 0;
        }
        trace.stages.push_back(std::move(provision));

        for (const ProtoStage& ps : proto->stages) {
            StageTrace st;
            st.name = ps.name;
            st.periphery = ps.periphery;
            std::uint64_t fp_macs = 0;
            for (const auto& [demand_id, raw] : ps.by_demand) {
                const MappedGroup& g = mapping.group(demand_id);
                CoreCounters c = raw;
                if (g.engine == Engine::Encoding && knobs.sparsity_scheduler) {
                    // Zero-operand computations are skipped.
                    c.op_accesses = static_cast<std::uint64_t>(
                        std::llround(static_cast<double>(c.op_accesses) * keep));
                    c.op_bits = static_cast<std::uint64_t>(
                        std::llround(static_cast<double>(c.op_bits) * keep));
                }
                if (g.engine == Engine::Encoding) fp_macs += c.op_accesses;
                // Operands that exceed the group's capacity are refilled as
                // the stage streams over them: misses scale with the spilled
                // fraction of the accesses.
                if (g.stored_bits > g.capacity_bits() && g.capacity_bits() > 0) {
                    std::uint64_t spill = g.stored_bits - g.capacity_bits();
                    std::uint64_t accesses = c.read_accesses + c.op_accesses;
                    std::uint64_t misses =
                        (accesses * spill + g.stored_bits - 1) / g.stored_bits;
                    c.writes_bits += misses * g.cols;
                    c.write_accesses += misses;
                    trace.reprogram_events += misses;
                }
                st.cores[demand_id] = c;
            }
            if (knobs.fp_partitioner && fp_macs > 0) {
                // Exponent path per FP MAC: two exponent-buffer bytes read
                // plus a max-exponent/alignment operation.
                st.periphery.exponent_ops += fp_macs;
                st.periphery.buffer_read_bits += 16 * fp_macs;
            }
            trace.reprogram_events += ps.reprogram_events;
            trace.stages.push_back(std::move(st));
        }
        return trace;
    };
}

CoreCounters& on(ProtoStage& stage, const std::string& demand_id) {
    return stage.by_demand[demand_id];
}

void count_read(CoreCounters& c, std::uint64_t bits, std::uint64_t accesses = 1) {
    c.read_accesses += accesses;
    c.reads_bits += bits;
}

void count_write(CoreCounters& c, std::uint64_t bits, std::uint64_t accesses = 1) {
    c.write_accesses += accesses;
    c.writes_bits += bits;
}

void count_op(CoreCounters& c, std::uint64_t bits, std::uint64_t accesses = 1) {
    c.op_accesses += accesses;
    c.op_bits += bits;
}

void count_bundle(PeripheryCounters& p, std::uint64_t inputs, std::uint64_t dim) {
    p.adder_ops += inputs;
    p.adder_bits += inputs * dim;
    p.threshold_ops += 1;
    p.threshold_bits += dim;
    p.buffer_write_bits += dim;
}

} // namespace

// --- Multi-modal perception --------------------------------------------------

WorkloadModel build_perception_workload(const PerceptionConfig& config) {
    WorkloadModel model;
    model.name = "multimodal_perception";
    model.category = WorkloadCategory::MultiModalPerception;
    const std::uint64_t d = config.dim;
    const std::uint64_t ids = config.modalities * config.features_each;

    model.demands = {
        {"value_embedding", CoreRole::ValueEmbedding, Engine::Encoding, CoreKind::Static,
         config.levels, d, config.levels * d},
        {"item_memory", CoreRole::ItemMemory, Engine::Encoding, CoreKind::Static, ids, d,
         ids * d},
        {"encoding", CoreRole::Encoding, Engine::Encoding, CoreKind::Dynamic, 2, d, 2 * d,
         /*preloaded=*/false},
        {"classification", CoreRole::Classification, Engine::SimilarityCheck, CoreKind::Static,
         config.classes, d, config.classes * d},
    };
    model.wall_duration_s = static_cast<double>(config.samples) * config.sample_period_s;

    // Functional run: fuse each sample's records and classify them against
    // seeded class vectors, counting the array traffic as it happens.
    Codebook id_codebook("perception-ids", config.seed, config.dim, Repr::Binary);
    ModalitySchema schema;
    for (std::size_t m = 0; m < config.modalities; ++m) {
        schema["m" + std::to_string(m)] = config.features_each;
        for (std::size_t f = 0; f < config.features_each; ++f)
            id_codebook.add("m" + std::to_string(m) + "_f" + std::to_string(f));
    }
    LevelEmbedding value_emb(0.0, 1.0, config.levels, config.dim,
                             CounterRng::derive_key("perception-levels", "", config.seed));
    std::vector<HyperVector> class_hvs;
    for (std::size_t c = 0; c < config.classes; ++c)
        class_hvs.push_back(random_hv("perception-classes", "c" + std::to_string(c), config.seed,
                                      config.dim, Repr::Binary));

    auto proto = std::make_shared<Proto>();
    ProtoStage encode;
    encode.name = "encode";
    ProtoStage classify;
    classify.name = "classify";
    std::vector<std::uint64_t> class_counts(config.classes, 0);

    for (std::size_t s = 0; s < config.samples; ++s) {
        auto records = make_modal_records(config.modalities, config.features_each,
                                          config.timestamps,
                                          CounterRng::derive_key("perception-sample",
                                                                 std::to_string(s), config.seed));
        HyperVector fused = multimodal_encode(records, schema, id_codebook, value_emb,
                                              config.seed);

        for (const ModalRecord& rec : records) {
            for (std::size_t f = 0; f < rec.features.size(); ++f) {
                count_read(on(encode, "value_embedding"), d);
                count_read(on(encode, "item_memory"), d);
                count_write(on(encode, "encoding"), d);  // operand load
                count_op(on(encode, "encoding"), d);     // in-memory bind
            }
            count_bundle(encode.periphery, rec.features.size(), d);
            if (rec.timestamp > 0) {
                encode.periphery.shift_ops += 1;
                encode.periphery.shift_bits += d;
            }
        }
        for (std::size_t m = 0; m < config.modalities; ++m)
            count_bundle(encode.periphery, config.timestamps, d);  // per-modality bundle
        count_bundle(encode.periphery, config.modalities, d);      // fusion
        encode.reprogram_events += 1;  // encoding cores take this sample's operands

        // Similarity check: one in-memory search over all class rows.
        count_op(on(classify, "classification"), config.classes * d);
        classify.periphery.wta_ops += config.classes;
        classify.periphery.buffer_write_bits += 8;

        const HyperVector probe = fused.as_repr(Repr::Bipolar);
        std::size_t best = 0;
        double best_score = -2.0;
        for (std::size_t c = 0; c < config.classes; ++c) {
            double score = similarity(probe, class_hvs[c].as_repr(Repr::Bipolar),
                                      SimilarityMetric::Cosine)
                               .value;
            if (score > best_score) {
                best_score = score;
                best = c;
            }
        }
        ++class_counts[best];
    }
    proto->stages.push_back(std::move(encode));
    proto->stages.push_back(std::move(classify));

    model.run_summary = {{"samples", config.samples},
                         {"dim", config.dim},
                         {"class_counts", class_counts}};
    model.tracer = make_tracer(model.name, proto, model.wall_duration_s);
    return model;
}

// --- Reactive navigation -------------------------------------------------------

WorkloadModel build_navigation_workload(const NavigationConfig& config) {
    WorkloadModel model;
    model.name = config.phase == NavigationConfig::Phase::Train     ? "navigation_train"
                 : config.phase == NavigationConfig::Phase::Recall  ? "navigation_recall"
                                                                    : "navigation";
    model.category = WorkloadCategory::RoboticReasoning;
    const std::uint64_t d = config.dim;
    const bool trains = config.phase != NavigationConfig::Phase::Recall;
    const bool recalls = config.phase != NavigationConfig::Phase::Train;

    model.demands = {
        {"sensor_memory", CoreRole::SensorMemory, Engine::Encoding, CoreKind::Static,
         config.sensors + config.sensor_bins, d, (config.sensors + config.sensor_bins) * d},
        {"actuator_memory", CoreRole::ActuatorMemory, Engine::Encoding, CoreKind::Static,
         1 + config.actuator_values, d, (1 + config.actuator_values) * d},
        {"program_memory", CoreRole::ProgramMemory, Engine::Encoding, CoreKind::Static, 1, d, d,
         /*preloaded=*/!trains},
    };
    if (trains)
        model.demands.push_back({"sap", CoreRole::SapBuffer, Engine::Encoding, CoreKind::Dynamic,
                                 2, d, 2 * d, /*preloaded=*/false});
    if (recalls)
        model.demands.push_back({"cleanup", CoreRole::Cleanup, Engine::SimilarityCheck,
                                 CoreKind::Static, config.actuator_values, d,
                                 config.actuator_values * d});

    model.wall_duration_s =
        (trains ? static_cast<double>(config.demos) * config.demo_period_s : 0.0) +
        (recalls ? static_cast<double>(config.recalls) * 0.01 : 0.0);

    NavigationVocabulary vocab = make_grid_vocab(config.dim, config.seed, config.sensors,
                                                 config.sensor_bins, config.actuator_values);
    std::vector<NavigationDemo> demos = make_grid_demos(config.demos, config.seed, config.sensors,
                                                        config.sensor_bins,
                                                        config.actuator_values);
    NavigationProgram program = navigation_train(vocab, demos);

    auto proto = std::make_shared<Proto>();
    auto sensor_encode_counts = [&](ProtoStage& stage) {
        for (std::size_t s = 0; s < config.sensors; ++s) {
            count_read(on(stage, "sensor_memory"), d);  // value vector readout
            count_op(on(stage, "sensor_memory"), d);    // in-memory bind with the stored ID
        }
        count_bundle(stage.periphery, config.sensors, d);
    };

    if (trains) {
        ProtoStage train;
        train.name = "train";
        for (std::size_t k = 0; k < demos.size(); ++k) {
            sensor_encode_counts(train);
            // Single actuator encode.
            count_read(on(train, "actuator_memory"), d);
            count_op(on(train, "actuator_memory"), d);
            // Pair binding in the dynamic SAP cores, bundled near-memory.
            count_write(on(train, "sap"), d);
            count_op(on(train, "sap"), d);
            train.periphery.adder_ops += 1;
            train.periphery.adder_bits += d;
            train.periphery.buffer_write_bits += d;
            train.reprogram_events += 1;  // new operand pair each demo
        }
        proto->stages.push_back(std::move(train));

        ProtoStage program_write;
        program_write.name = "program_write";
        count_write(on(program_write, "program_memory"), d);
        program_write.periphery.threshold_ops += 1;
        program_write.periphery.threshold_bits += d;
        proto->stages.push_back(std::move(program_write));
    }

    std::size_t recall_hits = 0;
    if (recalls || trains) {
        // Functional check: every trained demo must recall its own action.
        for (const auto& demo : demos) {
            auto actions = navigation_recall(program, vocab, demo.sensors, config.threshold);
            if (!actions.empty() && actions[0].value == demo.actuators.at("move")) ++recall_hits;
        }
    }
    if (recalls) {
        ProtoStage recall;
        recall.name = "recall";
        std::size_t queries = std::min<std::size_t>(config.recalls, demos.size());
        for (std::size_t q = 0; q < queries; ++q) {
            sensor_encode_counts(recall);
            count_op(on(recall, "program_memory"), d);  // bind query to stored program
            count_op(on(recall, "actuator_memory"), d);  // release actuator ID
            count_op(on(recall, "cleanup"), config.actuator_values * d);
            recall.periphery.wta_ops += config.actuator_values;
            recall.periphery.buffer_write_bits += d;
        }
        proto->stages.push_back(std::move(recall));
    }

    model.run_summary = {{"demos", config.demos},
                         {"dim", config.dim},
                         {"recall_accuracy",
                          static_cast<double>(recall_hits) / static_cast<double>(demos.size())}};
    model.tracer = make_tracer(model.name, proto, model.wall_duration_s);
    return model;
}

// --- Resonator factorization ------------------------------------------------------

WorkloadModel build_factorization_workload(const FactorizationConfig& config) {
    WorkloadModel model;
    model.name = config.sequential_cores ? "factorization_sequential" : "factorization_parallel";
    model.category = WorkloadCategory::Factorization;
    const std::uint64_t d = config.dim;
    const std::uint64_t k = config.codebooks;
    const std::uint64_t m = config.items;

    if (config.sequential_cores) {
        model.demands = {
            {"disentangle", CoreRole::Disentangle, Engine::Encoding, CoreKind::Dynamic, 2, d,
             2 * d, /*preloaded=*/false},
            {"similarity", CoreRole::Similarity, Engine::SimilarityCheck, CoreKind::Dynamic, m, d,
             m * d, /*preloaded=*/false},
            {"projection", CoreRole::Projection, Engine::Encoding, CoreKind::Dynamic, m, d,
             m * d, /*preloaded=*/false},
        };
    } else {
        for (std::uint64_t i = 0; i < k; ++i) {
            std::string suffix = "_" + std::to_string(i);
            model.demands.push_back({"disentangle" + suffix, CoreRole::Disentangle,
                                     Engine::Encoding, CoreKind::Dynamic, 2, d, 2 * d,
                                     /*preloaded=*/false});
            model.demands.push_back({"similarity" + suffix, CoreRole::Similarity,
                                     Engine::SimilarityCheck, CoreKind::Static, m, d, m * d});
            model.demands.push_back({"projection" + suffix, CoreRole::Projection,
                                     Engine::Encoding, CoreKind::Static, m, d, m * d});
        }
    }
    model.wall_duration_s = static_cast<double>(config.trials) * config.trial_period_s;

    auto proto = std::make_shared<Proto>();
    ProtoStage solve;
    solve.name = "factorize";

    std::size_t converged_count = 0, correct_count = 0;
    std::uint64_t total_iterations = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        std::vector<Codebook> cbs;
        std::vector<const Codebook*> ptrs;
        for (std::size_t i = 0; i < k; ++i) {
            cbs.emplace_back("factor" + std::to_string(i),
                             CounterRng::derive_key("fact-cb", std::to_string(t * 16 + i),
                                                    config.seed),
                             config.dim, Repr::Bipolar);
            cbs.back().add_range("item", m);
        }
        for (const auto& cb : cbs) ptrs.push_back(&cb);

        CounterRng pick = CounterRng::keyed("fact-pick", std::to_string(t), config.seed);
        std::vector<std::size_t> truth;
        std::vector<HyperVector> parts;
        for (std::size_t i = 0; i < k; ++i) {
            truth.push_back(pick.next_below(m));
            parts.push_back(cbs[i].at(truth.back()));
        }
        HyperVector f = compose(parts);

        FactorizeResult res = factorize(f, ptrs, config.max_iters, config.schedule,
                                        config.noise_p, config.seed + t);
        total_iterations += res.iterations;
        if (res.converged) ++converged_count;
        bool correct = true;
        for (std::size_t i = 0; i < k; ++i)
            correct &= res.factors[i] == "item" + std::to_string(truth[i]);
        if (correct) ++correct_count;

        // Array traffic per iteration and factor: the disentangle cores load
        // the other estimates and release them from the composite, the
        // similarity cores correlate against the codebook, the projection
        // cores rebuild the weighted estimate.
        for (std::uint64_t iter = 0; iter < res.iterations; ++iter) {
            for (std::uint64_t i = 0; i < k; ++i) {
                std::string suffix = config.sequential_cores ? "" : "_" + std::to_string(i);
                CoreCounters& dis = on(solve, "disentangle" + suffix);
                count_write(dis, (k - 1) * d, k - 1);  // fresh estimates in
                count_op(dis, (k - 1) * d, k - 1);     // unbind sweeps
                CoreCounters& sim = on(solve, "similarity" + suffix);
                count_op(sim, m * d);
                solve.periphery.buffer_write_bits += m * 8;  // similarity weights out
                if (config.sequential_cores) {
                    // Shared cores swap to this factor's codebook.
                    count_write(sim, m * d, m);
                    solve.reprogram_events += 1;
                }
                CoreCounters& proj = on(solve, "projection" + suffix);
                count_op(proj, m * d);
                if (config.sequential_cores) {
                    count_write(proj, m * d, m);
                    solve.reprogram_events += 1;
                }
                solve.periphery.threshold_ops += 1;
                solve.periphery.threshold_bits += d;
                solve.periphery.buffer_write_bits += d;
            }
        }
    }
    proto->stages.push_back(std::move(solve));

    model.run_summary = {
        {"trials", config.trials},
        {"dim", config.dim},
        {"converged", converged_count},
        {"accuracy", static_cast<double>(correct_count) / static_cast<double>(config.trials)},
        {"avg_iterations",
         static_cast<double>(total_iterations) / static_cast<double>(config.trials)},
        {"schedule",
         config.schedule == ResonatorSchedule::Parallel ? "parallel" : "sequential"}};
    model.tracer = make_tracer(model.name, proto, model.wall_duration_s);
    return model;
}

// --- Architecture building and mapping ----------------------------------------------

Architecture architecture_for(const WorkloadModel& workload, const MemoryConfig& memories,
                              TechNode node) {
    Architecture arch;
    arch.name = memories.name;
    arch.node = node;
    for (const CoreDemand& demand : workload.demands) {
        CoreSpec core;
        core.id = demand.id;
        core.engine = demand.engine;
        core.kind = demand.kind;
        core.role = demand.role;
        core.rows = demand.rows;
        core.cols = demand.cols;
        core.memory = demand.kind == CoreKind::Static ? memories.static_mem
                                                      : memories.dynamic_mem;
        arch.cores.push_back(std::move(core));
    }
    return arch;
}

Mapping map_workload(const WorkloadModel& workload, const Architecture& arch) {
    Mapping mapping;
    mapping.workload = workload.name;
    mapping.strategy = MappingStrategy::Spatial;
    mapping.node = arch.node;
    mapping.periphery = arch.periphery;

    std::map<CoreRole, std::vector<const CoreSpec*>> by_role;
    for (const auto& core : arch.cores) by_role[core.role].push_back(&core);
    std::map<CoreRole, std::size_t> cursor;

    for (const CoreDemand& demand : workload.demands) {
        auto it = by_role.find(demand.role);
        if (it == by_role.end() || cursor[demand.role] >= it->second.size())
            raise(ErrorCode::MappingError,
                  std::string("architecture provides no core for role ") +
                      role_name(demand.role));
        const CoreSpec& core = *it->second[cursor[demand.role]++];

        MappedGroup group;
        group.id = demand.id;
        group.mode = workload.name;
        group.role = demand.role;
        group.kind = core.kind;
        group.engine = core.engine;
        group.memory = core.memory;
        group.rows = core.rows;
        group.cols = core.cols;
        group.stored_bits = demand.stored_bits;
        group.preloaded = demand.preloaded && core.kind == CoreKind::Static;
        mapping.groups.push_back(std::move(group));
    }
    return mapping;
}

// --- Sweeps -------------------------------------------------------------------------

std::vector<MemoryConfig> default_memory_configs() {
    return {
        {"sram", MemoryKind::SRAM, MemoryKind::SRAM},
        {"edram", MemoryKind::eDRAM, MemoryKind::eDRAM},
        {"rram", MemoryKind::RRAM, MemoryKind::RRAM},
        {"mram", MemoryKind::MRAM, MemoryKind::MRAM},
        {"hetero_mram_sram", MemoryKind::MRAM, MemoryKind::SRAM},
        {"hetero_mram_edram", MemoryKind::MRAM, MemoryKind::eDRAM},
    };
}

SweepResult sweep_memories(const std::vector<WorkloadModel>& workloads,
                           const std::vector<MemoryConfig>& configs, const TechTable& table,
                           TechNode node, std::size_t jobs) {
    SweepResult result;
    result.cells.resize(workloads.size() * configs.size());

    auto run_cell = [&](std::size_t index) {
        const WorkloadModel& w = workloads[index / configs.size()];
        const MemoryConfig& cfg = configs[index % configs.size()];
        Architecture arch = architecture_for(w, cfg, node);
        Mapping mapping = map_workload(w, arch);
        OpTrace trace = trace_workload(w, mapping);
        SweepCell cell;
        cell.workload = w.name;
        cell.config = cfg.name;
        cell.node = node;
        cell.report = estimate_cost(trace, mapping, table);
        result.cells[index] = std::move(cell);
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < result.cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(jobs, result.cells.size()); ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < result.cells.size();
                     i = next.fetch_add(1))
                    run_cell(i);
            });
        for (auto& th : pool) th.join();
    }
    return result;
}

SweepResult sweep_nodes(const WorkloadModel& workload, const TechTable& table, MemoryKind nvm) {
    std::vector<MemoryConfig> configs = {
        {"sram", MemoryKind::SRAM, MemoryKind::SRAM},
        {std::string("nvm_") + memory_name(nvm), nvm, nvm},
        {std::string("hybrid_") + memory_name(nvm) + "_sram", nvm, MemoryKind::SRAM},
    };
    SweepResult result;
    for (TechNode node : {TechNode::N65, TechNode::N40_45, TechNode::N22}) {
        SweepResult at_node = sweep_memories({workload}, configs, table, node, 1);
        for (auto& cell : at_node.cells) result.cells.push_back(std::move(cell));
    }
    return result;
}

namespace {

const CostReport* baseline_for(const SweepResult& result, const SweepCell& cell) {
    // Fig-11-style normalization against the all-RRAM configuration of the
    // same workload and node; node sweeps without an RRAM config fall back
    // to the workload's first cell at the base node.
    for (const auto& c : result.cells)
        if (c.workload == cell.workload && c.node == cell.node && c.config == "rram")
            return &c.report;
    for (const auto& c : result.cells)
        if (c.workload == cell.workload && c.node == TechNode::N65) return &c.report;
    return nullptr;
}

} // namespace

std::string SweepResult::to_csv() const {
    std::ostringstream out;
    out << "workload,config,node_nm,energy_j,latency_s,area_mm2,edp_js,"
           "norm_energy,norm_latency,norm_area,norm_edp\n";
    out.precision(9);
    for (const auto& cell : cells) {
        const CostReport* base = baseline_for(*this, cell);
        const CostReport& r = cell.report;
        out << cell.workload << ',' << cell.config << ',' << node_name(cell.node) << ','
            << std::scientific << r.total_energy_j << ',' << r.latency_s << ',' << r.area_mm2
            << ',' << r.edp_js;
        if (base) {
            out << ',' << r.total_energy_j / base->total_energy_j << ','
                << r.latency_s / base->latency_s << ',' << r.area_mm2 / base->area_mm2 << ','
                << r.edp_js / base->edp_js;
        } else {
            out << ",,,,";
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json SweepResult::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& cell : cells) {
        nlohmann::json row;
        row["workload"] = cell.workload;
        row["config"] = cell.config;
        row["node_nm"] = node_name(cell.node);
        row["report"] = cell.report.to_json();
        rows.push_back(std::move(row));
    }
    return {{"cells", rows}};
}

} // namespace vsa::imc
