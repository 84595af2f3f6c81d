#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsakit/encoders.hpp"
#include "vsakit/hypervector.hpp"

namespace vsa {

struct LabeledDataset {
    std::vector<std::vector<double>> features;
    std::vector<std::string> labels;

    std::size_t size() const { return features.size(); }
};

// Per-class accumulator plus its majority-binarized snapshot. Accumulators
// are double precision on a fixed 2^-20 grid: every update adds a quantized
// step times a +/-1 vector, so accumulator arithmetic is exact and
// order-independent, and the paired add/subtract of the iterative rule
// cancels to exactly zero.
class ClassifierModel {
public:
    ClassifierModel() = default;

    const std::vector<std::string>& classes() const { return classes_; }
    std::uint32_t dim() const { return encoder_.out_dim(); }
    SimilarityMetric metric() const { return metric_; }
    const ProjectionEncoder& encoder() const { return encoder_; }
    bool trained() const { return !classes_.empty(); }

    const std::vector<double>& accumulator(std::size_t class_index) const {
        return accum_[class_index];
    }
    const HyperVector& binarized(std::size_t class_index) const { return binarized_[class_index]; }

    // Snaps each accumulator to its bipolar majority sign; zero entries take
    // a deterministic tie bit keyed by (tie_seed, class index).
    void refresh_binarized();

    // Rounds an update step onto the accumulator grid.
    static double quantize_step(double x);

    friend ClassifierModel train_single_pass(const LabeledDataset&, const ProjectionEncoder&,
                                             SimilarityMetric, std::uint64_t);
    friend void retrain_iterative(ClassifierModel&, const LabeledDataset&, double, std::size_t);
    friend std::pair<std::string, std::vector<double>> infer_hv(const ClassifierModel&,
                                                                const HyperVector&);
    friend void save_model(const ClassifierModel&, const std::string&);
    friend ClassifierModel load_model(const std::string&);

private:
    std::vector<std::string> classes_;
    std::vector<std::vector<double>> accum_;
    std::vector<HyperVector> binarized_;
    ProjectionEncoder encoder_;
    SimilarityMetric metric_ = SimilarityMetric::Cosine;
    std::uint64_t tie_seed_ = 0;

    std::size_t class_index(const std::string& label) const;
};

// Single-pass training: class accumulators are the elementwise sums of their
// members' encoded bipolar vectors.
ClassifierModel train_single_pass(const LabeledDataset& dataset, const ProjectionEncoder& encoder,
                                  SimilarityMetric metric = SimilarityMetric::Cosine,
                                  std::uint64_t tie_seed = 0);

// Perceptron-style fine-tuning: every misclassified sample moves the true
// class toward its encoding and the predicted class away, with step
// eta * (1 - delta) where delta is the predicted class's similarity mapped to
// [0,1]. Predictions within an epoch use the snapshot from the epoch start;
// snapshots refresh at the end of each epoch.
void retrain_iterative(ClassifierModel& model, const LabeledDataset& dataset, double eta,
                       std::size_t epochs);

// Associative-search inference: nearest binarized class vector, deterministic
// first-class tie-break. Returns the label and the per-class ranking scores
// (higher is more similar).
std::pair<std::string, std::vector<double>> infer_hv(const ClassifierModel& model,
                                                     const HyperVector& query);
std::pair<std::string, std::vector<double>> infer(const ClassifierModel& model,
                                                  const std::vector<double>& sample);

void save_model(const ClassifierModel& model, const std::string& path);
ClassifierModel load_model(const std::string& path);

struct ClusterModel {
    std::size_t k = 0;
    std::vector<HyperVector> centroid_accums;     // IntAccum
    std::vector<HyperVector> centroids;           // binarized
    std::vector<std::size_t> assignments;         // per sample
    std::vector<std::size_t> change_history;      // assignment changes per iteration
    std::size_t iterations = 0;
    bool converged = false;
};

// HDCluster-style k-means in hypervector space: random initial centroids,
// Hamming assignment against binarized centroids, accumulator updates by
// summing members. Stops when no assignment changes or after max_iters.
ClusterModel cluster(const std::vector<std::vector<double>>& samples,
                     const ProjectionEncoder& encoder, std::size_t k, std::size_t max_iters,
                     std::uint64_t seed);

} // namespace vsa
