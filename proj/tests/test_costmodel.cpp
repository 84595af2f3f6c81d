#include <doctest.h>

#include <set>

#include "vsakit/costmodel.hpp"
#include "vsakit/prng.hpp"
#include "vsakit/workloads.hpp"

using namespace vsa;
using namespace vsa::imc;

namespace {

const TechTable& table() {
    static TechTable t = TechTable::load_default();
    return t;
}

} // namespace

TEST_CASE("tech table loads with validated entries and sources") {
    const TechTable& t = table();
    for (MemoryKind k : {MemoryKind::SRAM, MemoryKind::eDRAM, MemoryKind::RRAM, MemoryKind::MRAM,
                         MemoryKind::PCM, MemoryKind::FlashNAND}) {
        const MemoryTechnology& m = t.base(k);
        CHECK(!m.source.empty());
        if (!m.volatile_mem) CHECK(m.write_energy_j >= m.read_energy_j);
    }
    CHECK(t.base(MemoryKind::eDRAM).refresh_interval_s > 0);
    CHECK(t.base(MemoryKind::SRAM).refresh_interval_s == 0);
    CHECK(t.base(MemoryKind::PCM).bits_per_cell == 3);
}

TEST_CASE("memory entry validation catches inconsistent parameters") {
    MemoryTechnology bad = table().base(MemoryKind::MRAM);
    bad.write_energy_j = bad.read_energy_j / 2;  // NVM write below read
    CHECK_THROWS_AS(bad.validate(), Error);

    MemoryTechnology no_refresh = table().base(MemoryKind::eDRAM);
    no_refresh.refresh_interval_s = 0;
    CHECK_THROWS_AS(no_refresh.validate(), Error);

    MemoryTechnology refresh_sram = table().base(MemoryKind::SRAM);
    refresh_sram.refresh_interval_s = 1e-5;
    CHECK_THROWS_AS(refresh_sram.validate(), Error);
}

TEST_CASE("node scaling: identity at source, monotone silicon shrink, sticky NVM") {
    const TechTable& t = table();
    MemoryTechnology sram65 = t.at_node(MemoryKind::SRAM, TechNode::N65);
    CHECK(sram65.read_energy_j == t.base(MemoryKind::SRAM).read_energy_j);

    MemoryTechnology sram45 = t.at_node(MemoryKind::SRAM, TechNode::N40_45);
    MemoryTechnology sram22 = t.at_node(MemoryKind::SRAM, TechNode::N22);
    CHECK(sram22.read_energy_j < sram45.read_energy_j);
    CHECK(sram45.read_energy_j < sram65.read_energy_j);
    CHECK(sram22.read_latency_s < sram45.read_latency_s);
    CHECK(sram45.read_latency_s < sram65.read_latency_s);
    CHECK(sram22.cell_area_mm2 < sram45.cell_area_mm2);
    CHECK(sram45.cell_area_mm2 < sram65.cell_area_mm2);

    // RRAM cell area shrinks by a smaller factor than SRAM cell area.
    MemoryTechnology rram65 = t.at_node(MemoryKind::RRAM, TechNode::N65);
    MemoryTechnology rram22 = t.at_node(MemoryKind::RRAM, TechNode::N22);
    double rram_factor = rram22.cell_area_mm2 / rram65.cell_area_mm2;
    double sram_factor = sram22.cell_area_mm2 / sram65.cell_area_mm2;
    CHECK(rram_factor > sram_factor);
    CHECK(rram_factor < 1.0);

    CHECK_THROWS_AS(node_from_name("14"), Error);
}

TEST_CASE("kernel graph validation") {
    KernelGraph kg = KernelGraph::tree_classifier_example();
    kg.validate();

    KernelGraph orphan = kg;
    orphan.nodes.push_back({"stray", KernelOp::Bind, "encoding", CoreRole::Encoding, {}, 1, 64});
    CHECK_THROWS_AS(orphan.validate(), Error);

    KernelGraph bad_modes = kg;
    bad_modes.control_modes.clear();  // multi-mode graph must declare controls
    CHECK_THROWS_AS(bad_modes.validate(), Error);
}

TEST_CASE("spatial lowering dedicates disjoint per-mode groups with no reprogramming") {
    KernelGraph kg = KernelGraph::tree_classifier_example();
    Mapping spatial = lower_kernels(kg, MappingStrategy::Spatial);

    std::set<std::string> modes;
    for (const auto& g : spatial.groups) modes.insert(g.mode);
    CHECK(modes == std::set<std::string>{"encoding", "tree_search", "assoc_search"});
    CHECK(spatial.reprogram_events == 0);

    std::set<std::string> ids;
    for (const auto& g : spatial.groups) CHECK(ids.insert(g.id).second);
}

TEST_CASE("temporal lowering shares groups and pays for mode switches") {
    KernelGraph kg = KernelGraph::tree_classifier_example();
    Mapping temporal = lower_kernels(kg, MappingStrategy::Temporal);

    for (const auto& g : temporal.groups) CHECK(g.mode == "shared");
    // Schedule encoding,tree,assoc,tree,assoc has four adjacent switches.
    CHECK(temporal.reprogram_events == 4);

    Mapping spatial = lower_kernels(kg, MappingStrategy::Spatial);
    CHECK(temporal.groups.size() <= spatial.groups.size());
}

TEST_CASE("single-mode graphs lower identically under both strategies") {
    KernelGraph kg;
    kg.name = "single_mode";
    kg.item_inputs = {"items"};
    kg.nodes = {{"n0", KernelOp::Bind, "only", CoreRole::Encoding, {"items"}, 4, 512}};
    kg.validate();
    Mapping a = lower_kernels(kg, MappingStrategy::Spatial);
    Mapping b = lower_kernels(kg, MappingStrategy::Temporal);
    CHECK(a.groups == b.groups);
    CHECK(a.reprogram_events == b.reprogram_events);
}

TEST_CASE("spatial/temporal duality: temporal saves area, spends latency") {
    KernelGraph kg = KernelGraph::tree_classifier_example();
    Mapping spatial = lower_kernels(kg, MappingStrategy::Spatial);
    Mapping temporal = lower_kernels(kg, MappingStrategy::Temporal);
    CostReport rs = estimate_cost(trace_kernel_graph(kg, spatial), spatial, table());
    CostReport rt = estimate_cost(trace_kernel_graph(kg, temporal), temporal, table());
    CHECK(rt.area_mm2 <= rs.area_mm2);
    CHECK(rt.latency_s >= rs.latency_s);
}

TEST_CASE("duality holds over randomly generated kernel graphs") {
    CounterRng rng = CounterRng::keyed("kernel-gen", "", 17);
    const CoreRole roles[] = {CoreRole::ItemMemory, CoreRole::Encoding, CoreRole::Similarity,
                              CoreRole::Cleanup};
    const KernelOp ops[] = {KernelOp::Bind, KernelOp::Bundle, KernelOp::Permute,
                            KernelOp::Similarity};
    for (int trial = 0; trial < 25; ++trial) {
        KernelGraph kg;
        kg.name = "random" + std::to_string(trial);
        kg.item_inputs = {"items"};
        std::size_t mode_count = 2 + rng.next_below(3);
        for (std::size_t m = 0; m < mode_count; ++m)
            kg.control_modes.push_back("select_m" + std::to_string(m));
        std::size_t node_count = 1 + rng.next_below(6);
        for (std::size_t n = 0; n < node_count; ++n) {
            KernelNode node;
            node.id = "n" + std::to_string(n);
            node.op = ops[rng.next_below(4)];
            node.mode = "m" + std::to_string(n % mode_count);  // every mode populated
            node.role = roles[rng.next_below(4)];
            node.inputs = {"items"};
            node.rows = 1 + rng.next_below(32);
            node.dim = 256 << rng.next_below(4);
            kg.nodes.push_back(std::move(node));
        }
        if (kg.nodes.size() < mode_count) {
            // Top up so every declared mode owns at least one node.
            for (std::size_t m = kg.nodes.size(); m < mode_count; ++m)
                kg.nodes.push_back({"fill" + std::to_string(m), KernelOp::Bind,
                                    "m" + std::to_string(m), CoreRole::Encoding, {"items"}, 4,
                                    512});
        }
        for (std::size_t s = 0; s < 4 + rng.next_below(6); ++s)
            kg.schedule.push_back("m" + std::to_string(rng.next_below(mode_count)));
        kg.validate();

        Mapping spatial = lower_kernels(kg, MappingStrategy::Spatial);
        Mapping temporal = lower_kernels(kg, MappingStrategy::Temporal);
        CostReport rs = estimate_cost(trace_kernel_graph(kg, spatial), spatial, table());
        CostReport rt = estimate_cost(trace_kernel_graph(kg, temporal), temporal, table());
        CHECK(rt.area_mm2 <= rs.area_mm2);
        CHECK(rt.latency_s >= rs.latency_s);
    }
}

TEST_CASE("cost report splits sum to the total exactly") {
    WorkloadModel w = build_navigation_workload({});
    Mapping m = map_workload(w, architecture_for(w, {"sram", MemoryKind::SRAM, MemoryKind::SRAM}));
    CostReport r = estimate_cost(trace_workload(w, m), m, table());
    CHECK(r.total_energy_j == r.read_energy_j + r.write_energy_j + r.compute_energy_j +
                                  r.standby_energy_j + r.refresh_energy_j);
    CHECK(r.edp_js == r.total_energy_j * r.latency_s);
    CHECK(r.total_energy_j > 0);
    CHECK(r.latency_s > 0);
    CHECK(r.area_mm2 > 0);
}

TEST_CASE("monotonicity: more traced work never costs less") {
    WorkloadModel w = build_navigation_workload({});
    Mapping m = map_workload(w, architecture_for(w, {"sram", MemoryKind::SRAM, MemoryKind::SRAM}));
    OpTrace trace = trace_workload(w, m);
    CostReport base = estimate_cost(trace, m, table());

    OpTrace bumped = trace;
    auto& counters = bumped.stages.back().cores.begin()->second;
    counters.reads_bits += 100000;
    counters.read_accesses += 10;
    CostReport more = estimate_cost(bumped, m, table());
    CHECK(more.total_energy_j > base.total_energy_j);
    CHECK(more.latency_s >= base.latency_s);
}

TEST_CASE("navigation training counts: sensor reads per demo, one program write") {
    NavigationConfig cfg;
    cfg.demos = 1;
    cfg.seed = 5;
    WorkloadModel w = build_navigation_workload(cfg);
    Mapping m = map_workload(w, architecture_for(w, {"sram", MemoryKind::SRAM, MemoryKind::SRAM}));
    OpTrace trace = trace_workload(w, m);

    // One encode pass reads one value vector per sensor.
    CHECK(trace.totals("sensor_memory").reads_bits == cfg.sensors * cfg.dim);
    // The trained program is written exactly once, never provisioned.
    CHECK(trace.totals("program_memory").writes_bits == cfg.dim);
    // Static item memories take exactly their programming epoch.
    CHECK(trace.totals("sensor_memory").writes_bits ==
          (cfg.sensors + cfg.sensor_bins) * cfg.dim);
}

TEST_CASE("static write energy is independent of sample count; dynamic grows") {
    NavigationConfig small;
    small.demos = 10;
    NavigationConfig big;
    big.demos = 20;
    WorkloadModel ws = build_navigation_workload(small);
    WorkloadModel wb = build_navigation_workload(big);
    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};
    OpTrace ts = trace_workload(ws, map_workload(ws, architecture_for(ws, mc)));
    OpTrace tb = trace_workload(wb, map_workload(wb, architecture_for(wb, mc)));

    CHECK(ts.totals("sensor_memory").writes_bits == tb.totals("sensor_memory").writes_bits);
    CHECK(ts.totals("actuator_memory").writes_bits == tb.totals("actuator_memory").writes_bits);
    CHECK(tb.totals("sap").writes_bits == 2 * ts.totals("sap").writes_bits);
    CHECK(tb.reprogram_events > ts.reprogram_events);
}

TEST_CASE("all-static recall on NVM pays write energy only for the programming epoch") {
    NavigationConfig cfg;
    cfg.phase = NavigationConfig::Phase::Recall;
    WorkloadModel w = build_navigation_workload(cfg);
    MemoryConfig mc{"mram", MemoryKind::MRAM, MemoryKind::MRAM};
    Mapping m = map_workload(w, architecture_for(w, mc));
    for (const auto& g : m.groups) CHECK(g.kind == CoreKind::Static);  // zero dynamic cores

    OpTrace trace = trace_workload(w, m);
    CostReport r = estimate_cost(trace, m, table());
    double programming = static_cast<double>(m.stored_bits_total()) *
                         table().base(MemoryKind::MRAM).write_energy_j;
    CHECK(r.write_energy_j == doctest::Approx(programming));
}

TEST_CASE("doubling the session doubles eDRAM refresh and leaves RRAM reads alone") {
    NavigationConfig cfg;
    cfg.phase = NavigationConfig::Phase::Recall;
    WorkloadModel w = build_navigation_workload(cfg);

    MemoryConfig edram{"edram", MemoryKind::eDRAM, MemoryKind::eDRAM};
    Mapping me = map_workload(w, architecture_for(w, edram));
    OpTrace t1 = trace_workload(w, me);
    OpTrace t2 = t1;
    t2.wall_duration_s *= 2;
    CostReport r1 = estimate_cost(t1, me, table());
    CostReport r2 = estimate_cost(t2, me, table());
    CHECK(r2.refresh_energy_j == doctest::Approx(2.0 * r1.refresh_energy_j));

    MemoryConfig rram{"rram", MemoryKind::RRAM, MemoryKind::RRAM};
    Mapping mr = map_workload(w, architecture_for(w, rram));
    OpTrace u1 = trace_workload(w, mr);
    OpTrace u2 = u1;
    u2.wall_duration_s *= 2;
    CHECK(estimate_cost(u1, mr, table()).read_energy_j ==
          estimate_cost(u2, mr, table()).read_energy_j);
}

TEST_CASE("capacity below the operand footprint inserts reprogram refills") {
    WorkloadModel w = build_navigation_workload({});
    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};
    Architecture arch = architecture_for(w, mc);
    Architecture cramped = arch;
    for (auto& core : cramped.cores)
        if (core.id == "sensor_memory") core.rows /= 2;  // halve the capacity

    OpTrace full = trace_workload(w, map_workload(w, arch));
    OpTrace tight = trace_workload(w, map_workload(w, cramped));
    CHECK(tight.reprogram_events > full.reprogram_events);
    CHECK(tight.totals("sensor_memory").writes_bits > full.totals("sensor_memory").writes_bits);

    // Oversized capacity costs area and standby only.
    Architecture roomy = arch;
    for (auto& core : roomy.cores)
        if (core.id == "sensor_memory") core.rows *= 4;
    OpTrace slack = trace_workload(w, map_workload(w, roomy));
    CostReport r_full = estimate_cost(full, map_workload(w, arch), table());
    CostReport r_slack = estimate_cost(slack, map_workload(w, roomy), table());
    CHECK(slack.reprogram_events == full.reprogram_events);
    CHECK(r_slack.area_mm2 > r_full.area_mm2);
    CHECK(r_slack.read_energy_j == r_full.read_energy_j);
    CHECK(r_slack.write_energy_j == r_full.write_energy_j);
}

TEST_CASE("missing role raises a mapping error") {
    WorkloadModel w = build_navigation_workload({});
    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};
    Architecture arch = architecture_for(w, mc);
    arch.cores.erase(arch.cores.begin());  // drop the sensor cores
    CHECK_THROWS_AS(map_workload(w, arch), Error);
}

TEST_CASE("factorization mappings: parallel static codebooks, sequential dynamic sharing") {
    FactorizationConfig par;
    par.trials = 3;
    WorkloadModel wp = build_factorization_workload(par);
    std::size_t static_sim = 0, static_proj = 0;
    for (const auto& dmd : wp.demands) {
        if (dmd.role == CoreRole::Similarity && dmd.kind == CoreKind::Static) ++static_sim;
        if (dmd.role == CoreRole::Projection && dmd.kind == CoreKind::Static) ++static_proj;
    }
    CHECK(static_sim == 3);
    CHECK(static_proj == 3);

    FactorizationConfig seq = par;
    seq.schedule = ResonatorSchedule::Sequential;
    seq.sequential_cores = true;
    WorkloadModel wsq = build_factorization_workload(seq);
    CHECK(wsq.demands.size() == 3);
    for (const auto& dmd : wsq.demands) CHECK(dmd.kind == CoreKind::Dynamic);

    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};
    OpTrace tp = trace_workload(wp, map_workload(wp, architecture_for(wp, mc)));
    OpTrace tq = trace_workload(wsq, map_workload(wsq, architecture_for(wsq, mc)));
    // Sequential sharing reprograms codebooks at every factor switch.
    CHECK(tq.reprogram_events > tp.reprogram_events);
    CHECK(tq.totals("similarity").writes_bits > par.items * par.dim);
    // Static codebooks take exactly their programming epoch.
    CHECK(tp.totals("similarity_0").writes_bits == par.items * par.dim);
}

TEST_CASE("perception periphery knobs: sparsity halves encoding ops, fp adds exponent path") {
    PerceptionConfig cfg;
    cfg.samples = 10;
    WorkloadModel w = build_perception_workload(cfg);
    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};
    Architecture arch = architecture_for(w, mc);

    OpTrace plain = trace_workload(w, map_workload(w, arch));

    Architecture sparse = arch;
    sparse.periphery.sparsity_scheduler = true;
    sparse.periphery.sparsity = 0.5;
    OpTrace halved = trace_workload(w, map_workload(w, sparse));
    CHECK(halved.totals("encoding").op_bits * 2 == plain.totals("encoding").op_bits);

    std::uint64_t plain_exp = 0, fp_exp = 0;
    for (const auto& s : plain.stages) plain_exp += s.periphery.exponent_ops;
    Architecture fp = arch;
    fp.periphery.fp_partitioner = true;
    OpTrace fptrace = trace_workload(w, map_workload(w, fp));
    std::uint64_t fp_buffer = 0;
    for (const auto& s : fptrace.stages) {
        fp_exp += s.periphery.exponent_ops;
        fp_buffer += s.periphery.buffer_read_bits;
    }
    CHECK(plain_exp == 0);
    CHECK(fp_exp > 0);
    CHECK(fp_buffer >= 16 * fp_exp);

    // Vector folding: fewer parallel columns, more cycles.
    Architecture folded = arch;
    folded.periphery.dimension_divider = 4;
    Mapping mf = map_workload(w, folded);
    CostReport rf = estimate_cost(trace_workload(w, mf), mf, table());
    Mapping m0 = map_workload(w, arch);
    CostReport r0 = estimate_cost(trace_workload(w, m0), m0, table());
    CHECK(rf.latency_s > r0.latency_s);
    CHECK(rf.area_mm2 < r0.area_mm2);
}

TEST_CASE("traces and reports are deterministic") {
    PerceptionConfig cfg;
    cfg.samples = 5;
    WorkloadModel a = build_perception_workload(cfg);
    WorkloadModel b = build_perception_workload(cfg);
    CHECK(a.run_summary == b.run_summary);
    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};
    Mapping ma = map_workload(a, architecture_for(a, mc));
    Mapping mb = map_workload(b, architecture_for(b, mc));
    CostReport ra = estimate_cost(trace_workload(a, ma), ma, table());
    CostReport rb = estimate_cost(trace_workload(b, mb), mb, table());
    CHECK(ra.to_json().dump() == rb.to_json().dump());
}

TEST_CASE("footprint bounds land in the documented ranges") {
    std::map<WorkloadCategory, FootprintBound> bounds;
    for (int c = 0; c <= static_cast<int>(WorkloadCategory::MultiModalPerception); ++c) {
        auto category = static_cast<WorkloadCategory>(c);
        FootprintBound b = footprint_bounds(WorkloadDescriptor::defaults(category));
        bounds[category] = b;
        // Minimum requirement is a few kilobytes for every category.
        CHECK(b.lower_bytes >= 1024);
        CHECK(b.lower_bytes <= 10 * 1024);
        CHECK(b.upper_bytes > b.lower_bytes);
    }
    auto upper = [&](WorkloadCategory c) { return bounds[c].upper_bytes; };
    CHECK(upper(WorkloadCategory::Clustering) < upper(WorkloadCategory::Classification));
    CHECK(upper(WorkloadCategory::RoboticReasoning) < upper(WorkloadCategory::Classification));
    CHECK(upper(WorkloadCategory::Clustering) < upper(WorkloadCategory::OutlierDetection));
    CHECK(upper(WorkloadCategory::RoboticReasoning) < upper(WorkloadCategory::OutlierDetection));
    CHECK(upper(WorkloadCategory::Classification) < upper(WorkloadCategory::Genomics));
    CHECK(upper(WorkloadCategory::OutlierDetection) < upper(WorkloadCategory::Genomics));
    // Genomics reaches the gigabyte order.
    CHECK(upper(WorkloadCategory::Genomics) >= 300ull * 1024 * 1024);
    CHECK(upper(WorkloadCategory::Genomics) <= 10ull * 1024 * 1024 * 1024);
}

TEST_CASE("descriptor validation rejects out-of-recipe settings") {
    WorkloadDescriptor wd = WorkloadDescriptor::defaults(WorkloadCategory::Classification);
    wd.repr_bits = 2;
    CHECK_THROWS_AS(wd.validate(), Error);
    wd.repr_bits = 4;
    wd.bits_per_cell = 2;
    CHECK_THROWS_AS(wd.validate(), Error);
}

TEST_CASE("concrete pipeline mappings fall inside their category bounds") {
    MemoryConfig mc{"sram", MemoryKind::SRAM, MemoryKind::SRAM};

    PerceptionConfig pc;
    pc.samples = 5;
    WorkloadModel wp = build_perception_workload(pc);
    NavigationConfig nc;
    WorkloadModel wn = build_navigation_workload(nc);
    FactorizationConfig fc;
    fc.trials = 3;
    WorkloadModel wf = build_factorization_workload(fc);

    for (const WorkloadModel* w : {&wp, &wn, &wf}) {
        Mapping m = map_workload(*w, architecture_for(*w, mc));
        double footprint = static_cast<double>(m.stored_bits_total()) / 8.0;
        FootprintBound b = footprint_bounds(WorkloadDescriptor::defaults(w->category));
        CHECK(footprint >= static_cast<double>(b.lower_bytes));
        CHECK(footprint <= static_cast<double>(b.upper_bytes));
    }
}
