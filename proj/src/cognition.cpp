#include "vsakit/cognition.hpp"

#include <algorithm>
#include <set>

#include "vsakit/prng.hpp"

namespace vsa {

// --- Graph memory ----------------------------------------------------------

const HyperVector& GraphMemory::node_hv(std::uint32_t node) const {
    if (node >= node_count_)
        raise(ErrorCode::MissingItem, "graph has no node " + std::to_string(node));
    return nodes_.at(node);
}

const HyperVector& GraphMemory::memory_accum(std::uint32_t node) const {
    if (node >= node_count_)
        raise(ErrorCode::MissingItem, "graph has no node " + std::to_string(node));
    return memory_accums_[node];
}

const HyperVector& GraphMemory::memory(std::uint32_t node) const {
    if (node >= node_count_)
        raise(ErrorCode::MissingItem, "graph has no node " + std::to_string(node));
    return memories_[node];
}

GraphMemory graph_encode(const EdgeList& edges, std::uint32_t node_count, std::uint32_t dim,
                         std::uint64_t seed, const GraphOptions& options) {
    if (node_count < 1) raise(ErrorCode::InvalidArgument, "graph needs at least one node");

    GraphMemory gm;
    gm.node_count_ = node_count;
    gm.dim_ = dim;
    gm.nodes_ = Codebook("graph-nodes", seed, dim, Repr::Binary);
    for (std::uint32_t v = 0; v < node_count; ++v) gm.nodes_.add("n" + std::to_string(v));

    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    EdgeList accepted;
    for (auto [a, b] : edges) {
        if (a >= node_count || b >= node_count)
            raise(ErrorCode::MissingItem,
                  "edge references unknown node " + std::to_string(std::max(a, b)));
        if (a == b) {
            if (options.dedupe) continue;
            raise(ErrorCode::InvalidArgument, "self-loop on node " + std::to_string(a));
        }
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            if (options.dedupe) continue;
            raise(ErrorCode::InvalidArgument, "duplicate edge " + std::to_string(a) + "-" +
                                                  std::to_string(b));
        }
        accepted.emplace_back(a, b);
    }
    gm.edge_count_ = accepted.size();

    // Node memories: accumulate every neighbour's vector.
    gm.memory_accums_.assign(node_count, HyperVector::zeros(dim, Repr::IntAccum));
    auto add_into = [&](std::uint32_t dst, std::uint32_t src) {
        const HyperVector& h = gm.nodes_.at(src);
        auto& acc = gm.memory_accums_[dst].accum();
        for (std::uint32_t j = 0; j < dim; ++j) acc[j] += h.bit(j) ? 1 : -1;
    };
    for (auto [a, b] : accepted) {
        add_into(a, b);
        add_into(b, a);
    }

    gm.memories_.reserve(node_count);
    std::vector<HyperVector> node_terms;
    node_terms.reserve(node_count);
    for (std::uint32_t v = 0; v < node_count; ++v) {
        gm.memories_.push_back(binarize(gm.memory_accums_[v], Repr::Binary,
                                        CounterRng::derive_key("graph-memory-ties",
                                                               std::to_string(v), seed)));
        if (options.composition == GraphOptions::Composition::BindNodeMemory) {
            node_terms.push_back(bind(gm.nodes_.at(v), gm.memories_[v]));
        } else {
            node_terms.push_back(bundle({gm.nodes_.at(v), gm.memories_[v]},
                                        CounterRng::derive_key("graph-node-ties",
                                                               std::to_string(v), seed))
                                     .binarized);
        }
    }
    gm.graph_vector_ = node_count == 1
                           ? node_terms.front()
                           : bundle(node_terms, CounterRng::derive_key("graph-ties", "", seed))
                                 .binarized;
    return gm;
}

std::pair<bool, double> graph_edge_query(const GraphMemory& gm, std::uint32_t i, std::uint32_t j,
                                         double threshold) {
    const HyperVector& mem = gm.memory(i);
    const HyperVector& node = gm.node_hv(j);
    double score = similarity(mem.as_repr(Repr::Bipolar), node.as_repr(Repr::Bipolar),
                              SimilarityMetric::Cosine)
                       .value;
    return {score >= threshold, score};
}

// --- Reactive navigation ---------------------------------------------------

NavigationVocabulary::NavigationVocabulary(std::vector<std::string> sensor_ids,
                                           std::vector<std::string> sensor_value_domain,
                                           std::vector<std::string> actuator_ids,
                                           std::vector<std::string> actuator_value_domain,
                                           std::uint32_t dim_, std::uint64_t seed_)
    : sensor_names(std::move(sensor_ids)),
      actuator_names(std::move(actuator_ids)),
      sensor_id_hvs("nav-sensor-ids", seed_, dim_, Repr::Binary),
      sensor_value_hvs("nav-sensor-values", seed_, dim_, Repr::Binary),
      actuator_id_hvs("nav-actuator-ids", seed_, dim_, Repr::Binary),
      actuator_value_hvs("nav-actuator-values", seed_, dim_, Repr::Binary),
      dim(dim_),
      seed(seed_) {
    if (sensor_names.empty() || actuator_names.empty())
        raise(ErrorCode::InvalidArgument, "navigation needs >= 1 sensor and actuator");
    for (const auto& s : sensor_names) sensor_id_hvs.add(s);
    for (const auto& v : sensor_value_domain) sensor_value_hvs.add(v);
    for (const auto& a : actuator_names) actuator_id_hvs.add(a);
    for (const auto& v : actuator_value_domain) actuator_value_hvs.add(v);
}

namespace {

HyperVector encode_pairs(const Codebook& ids, const Codebook& values,
                         const std::map<std::string, std::string>& readings,
                         std::uint64_t tie_break_seed, const char* what) {
    if (readings.empty())
        raise(ErrorCode::EmptyInput, std::string("no ") + what + " readings to encode");
    std::vector<HyperVector> bound;
    bound.reserve(readings.size());
    for (const auto& [id, value] : readings)
        bound.push_back(bind(ids.get(id), values.get(value)));
    if (bound.size() == 1) return bound.front();
    std::vector<const HyperVector*> parts;
    for (const auto& hv : bound) parts.push_back(&hv);
    return bundle(bound, content_key(what, parts, tie_break_seed)).binarized;
}

} // namespace

HyperVector encode_sensor_readings(const NavigationVocabulary& vocab,
                                   const SensorReadings& readings,
                                   std::uint64_t tie_break_seed) {
    return encode_pairs(vocab.sensor_id_hvs, vocab.sensor_value_hvs, readings, tie_break_seed,
                        "sensor");
}

HyperVector encode_actuator_outputs(const NavigationVocabulary& vocab,
                                    const ActuatorOutputs& outputs,
                                    std::uint64_t tie_break_seed) {
    return encode_pairs(vocab.actuator_id_hvs, vocab.actuator_value_hvs, outputs, tie_break_seed,
                        "actuator");
}

NavigationProgram navigation_train(const NavigationVocabulary& vocab,
                                   const std::vector<NavigationDemo>& demos) {
    if (demos.empty()) raise(ErrorCode::EmptyInput, "navigation training needs >= 1 demo");
    std::vector<HyperVector> pairs;
    pairs.reserve(demos.size());
    for (const NavigationDemo& demo : demos) {
        HyperVector s = encode_sensor_readings(vocab, demo.sensors, vocab.seed);
        HyperVector a = encode_actuator_outputs(vocab, demo.actuators, vocab.seed);
        pairs.push_back(bind(s, a));
    }
    NavigationProgram program;
    program.trained_demos = demos.size();
    if (pairs.size() == 1) {
        program.binarized = pairs.front();
        HyperVector acc = HyperVector::zeros(vocab.dim, Repr::IntAccum);
        for (std::uint32_t j = 0; j < vocab.dim; ++j)
            acc.accum()[j] = pairs.front().bit(j) ? 1 : -1;
        program.accumulator = std::move(acc);
    } else {
        BundleResult r = bundle(pairs, CounterRng::derive_key("nav-program", "", vocab.seed));
        program.accumulator = std::move(r.accumulator);
        program.binarized = std::move(r.binarized);
    }
    return program;
}

std::vector<ActionRecall> navigation_recall(const NavigationProgram& program,
                                            const NavigationVocabulary& vocab,
                                            const SensorReadings& readings, double threshold) {
    if (!program.trained()) raise(ErrorCode::ModelState, "recall requires a trained program");
    HyperVector query = encode_sensor_readings(vocab, readings, vocab.seed);
    HyperVector noisy_actuator = bind(query, program.binarized);

    CleanupMemory cleanup(&vocab.actuator_value_hvs, SimilarityMetric::Cosine, threshold);
    std::vector<ActionRecall> actions;
    actions.reserve(vocab.actuator_names.size());
    for (const auto& actuator : vocab.actuator_names) {
        HyperVector released = unbind(noisy_actuator, vocab.actuator_id_hvs.get(actuator));
        auto res = cleanup.query(released);
        ActionRecall rec;
        rec.actuator = actuator;
        rec.value = res.best_symbol;
        rec.score = res.score;
        rec.matched = res.symbol.has_value();
        actions.push_back(std::move(rec));
    }
    return actions;
}

// --- HDFF -------------------------------------------------------------------

HdffDescriptor::HdffDescriptor(const HdffConfig& config) : config_(config) {
    if (config.layer_dims.empty())
        raise(ErrorCode::InvalidArgument, "hdff needs >= 1 layer");
    projections_.reserve(config.layer_dims.size());
    for (std::size_t l = 0; l < config.layer_dims.size(); ++l)
        projections_.emplace_back(config.layer_dims[l], config.dim,
                                  CounterRng::derive_key("hdff-layer", std::to_string(l),
                                                         config.seed));
}

HyperVector HdffDescriptor::encode(const std::vector<std::vector<double>>& layer_features) const {
    if (layer_features.size() != projections_.size())
        raise(ErrorCode::ShapeMismatch, "expected " + std::to_string(projections_.size()) +
                                            " layers, got " +
                                            std::to_string(layer_features.size()));
    std::vector<HyperVector> projected;
    projected.reserve(projections_.size());
    for (std::size_t l = 0; l < projections_.size(); ++l)
        projected.push_back(projections_[l].encode(layer_features[l]));
    if (projected.size() == 1) return projected.front();
    if (config_.combine == HdffConfig::Combine::Bind) return compose(projected);
    std::vector<const HyperVector*> parts;
    for (const auto& hv : projected) parts.push_back(&hv);
    return bundle(projected, content_key("hdff-combine", parts, config_.seed)).binarized;
}

void HdffDescriptor::fit_class(const std::string& label,
                               const std::vector<std::vector<std::vector<double>>>& samples) {
    if (samples.empty()) raise(ErrorCode::EmptyInput, "class fit needs >= 1 sample");
    std::vector<HyperVector> descriptors;
    descriptors.reserve(samples.size());
    for (const auto& sample : samples) descriptors.push_back(encode(sample));
    HyperVector rep = descriptors.size() == 1
                          ? descriptors.front()
                          : bundle(descriptors,
                                   CounterRng::derive_key("hdff-class", label, config_.seed))
                                .binarized;
    class_reps_.emplace_back(label, std::move(rep));
}

HdffDescriptor::Score HdffDescriptor::score(
    const std::vector<std::vector<double>>& layer_features) const {
    if (class_reps_.empty()) raise(ErrorCode::ModelState, "no class representatives fitted");
    HyperVector y = encode(layer_features).as_repr(Repr::Bipolar);
    Score out;
    out.score = -1e300;
    for (const auto& [label, rep] : class_reps_) {
        double s = similarity(y, rep.as_repr(Repr::Bipolar), SimilarityMetric::Cosine).value;
        if (s > out.score) {
            out.score = s;
            out.nearest = label;
        }
    }
    out.out_of_distribution = out.score < config_.threshold;
    return out;
}

} // namespace vsa
