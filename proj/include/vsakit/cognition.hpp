#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vsakit/codebook.hpp"
#include "vsakit/encoders.hpp"
#include "vsakit/hypervector.hpp"
#include "vsakit/reasoning.hpp"

namespace vsa {

// --- Graph memory ----------------------------------------------------------

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct GraphOptions {
    bool dedupe = false;  // silently drop self-loops and duplicates instead of raising
    // How node and memory vectors combine into the graph vector. Binding is
    // the reading under which edge recovery by unbinding works; the bundled
    // alternative is kept for experimentation.
    enum class Composition { BindNodeMemory, BundleNodeMemory } composition =
        Composition::BindNodeMemory;
};

// Holographic graph store: per node, the accumulated neighbour vectors; the
// graph vector bundles every node bound with its memory.
class GraphMemory {
public:
    GraphMemory() = default;

    std::uint32_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edge_count_; }
    std::uint32_t dim() const { return dim_; }

    const HyperVector& node_hv(std::uint32_t node) const;
    const HyperVector& memory_accum(std::uint32_t node) const;  // IntAccum M_i
    const HyperVector& memory(std::uint32_t node) const;        // binarized M_i
    const HyperVector& graph_vector() const { return graph_vector_; }

    friend GraphMemory graph_encode(const EdgeList&, std::uint32_t, std::uint32_t, std::uint64_t,
                                    const GraphOptions&);
    friend std::pair<bool, double> graph_edge_query(const GraphMemory&, std::uint32_t,
                                                    std::uint32_t, double);

private:
    Codebook nodes_;
    std::vector<HyperVector> memory_accums_;
    std::vector<HyperVector> memories_;
    HyperVector graph_vector_;
    std::uint32_t node_count_ = 0;
    std::uint32_t dim_ = 0;
    std::size_t edge_count_ = 0;
};

// Encodes a simple undirected graph over nodes 0..node_count-1. Self-loops
// and duplicate edges raise unless options.dedupe is set.
GraphMemory graph_encode(const EdgeList& edges, std::uint32_t node_count, std::uint32_t dim,
                         std::uint64_t seed, const GraphOptions& options = {});

// Edge presence score: bipolar cosine of node i's binarized memory against
// node j's vector.
std::pair<bool, double> graph_edge_query(const GraphMemory& gm, std::uint32_t i, std::uint32_t j,
                                         double threshold = 0.25);

// --- Reactive navigation ---------------------------------------------------

// Item memories for a sensor-actuator task: ID vectors for the sensors and
// actuators plus value vectors, with the actuation values doubling as the
// recall clean-up targets.
struct NavigationVocabulary {
    NavigationVocabulary(std::vector<std::string> sensor_ids,
                         std::vector<std::string> sensor_value_domain,
                         std::vector<std::string> actuator_ids,
                         std::vector<std::string> actuator_value_domain, std::uint32_t dim,
                         std::uint64_t seed);

    std::vector<std::string> sensor_names;
    std::vector<std::string> actuator_names;
    Codebook sensor_id_hvs;
    Codebook sensor_value_hvs;
    Codebook actuator_id_hvs;
    Codebook actuator_value_hvs;
    std::uint32_t dim = 0;
    std::uint64_t seed = 0;
};

using SensorReadings = std::map<std::string, std::string>;   // sensor id -> value symbol
using ActuatorOutputs = std::map<std::string, std::string>;  // actuator id -> value symbol

struct NavigationDemo {
    SensorReadings sensors;
    ActuatorOutputs actuators;
};

struct NavigationProgram {
    HyperVector accumulator;  // IntAccum bundle of sensor-actuator pairs
    HyperVector binarized;
    std::size_t trained_demos = 0;

    bool trained() const { return trained_demos > 0; }
};

// Bundle of bind(sensor id, value) over all readings.
HyperVector encode_sensor_readings(const NavigationVocabulary& vocab,
                                   const SensorReadings& readings,
                                   std::uint64_t tie_break_seed = 0);
HyperVector encode_actuator_outputs(const NavigationVocabulary& vocab,
                                    const ActuatorOutputs& outputs,
                                    std::uint64_t tie_break_seed = 0);

// Program vector: bundle over demos of bind(sensor vector, actuator vector).
NavigationProgram navigation_train(const NavigationVocabulary& vocab,
                                   const std::vector<NavigationDemo>& demos);

struct ActionRecall {
    std::string actuator;
    std::string value;   // argmax clean-up value
    double score = 0.0;  // bipolar cosine of the cleaned value
    bool matched = false;
};

// Bind the query sensor vector to the program, release each actuator ID and
// clean the result against the actuation-value codebook.
std::vector<ActionRecall> navigation_recall(const NavigationProgram& program,
                                            const NavigationVocabulary& vocab,
                                            const SensorReadings& readings,
                                            double threshold = 0.25);

// --- Hyperdimensional feature fusion (OOD scoring) -------------------------

struct HdffConfig {
    std::vector<std::size_t> layer_dims;
    std::uint32_t dim = 10000;
    std::uint64_t seed = 0;
    enum class Combine { Bundle, Bind } combine = Combine::Bundle;
    double threshold = 0.25;  // scores below flag out-of-distribution
};

// Per-layer similarity-preserving projections plus bundled class
// representatives.
class HdffDescriptor {
public:
    HdffDescriptor() = default;
    explicit HdffDescriptor(const HdffConfig& config);

    std::size_t layer_count() const { return projections_.size(); }
    const HdffConfig& config() const { return config_; }

    // Descriptor vector y for one sample's per-layer features.
    HyperVector encode(const std::vector<std::vector<double>>& layer_features) const;

    // Bundles the samples' descriptors into a class representative.
    void fit_class(const std::string& label,
                   const std::vector<std::vector<std::vector<double>>>& samples);

    std::size_t class_count() const { return class_reps_.size(); }

    struct Score {
        double score = 0.0;      // max bipolar cosine over class representatives
        std::string nearest;
        bool out_of_distribution = false;
    };
    Score score(const std::vector<std::vector<double>>& layer_features) const;

private:
    HdffConfig config_;
    std::vector<ProjectionEncoder> projections_;
    std::vector<std::pair<std::string, HyperVector>> class_reps_;
};

inline HdffDescriptor::Score hdff_score(const HdffDescriptor& desc,
                                        const std::vector<std::vector<double>>& layer_features) {
    return desc.score(layer_features);
}

} // namespace vsa
