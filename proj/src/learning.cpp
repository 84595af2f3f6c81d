#include "vsakit/learning.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>

#include <json.hpp>

#include "vsakit/prng.hpp"
#include "vsakit/serialize.hpp"

namespace vsa {

namespace {

// Maps a raw metric value onto [0,1] confidence for the Eq-style update.
double to_unit_confidence(SimilarityMetric metric, double value, std::uint32_t dim) {
    switch (metric) {
        case SimilarityMetric::NormalizedHamming: return 1.0 - value;
        case SimilarityMetric::Cosine: return 0.5 * (value + 1.0);
        case SimilarityMetric::Dot: return 0.5 * (value / static_cast<double>(dim) + 1.0);
    }
    return 0.0;
}

double ranking_score(SimilarityMetric metric, const HyperVector& a, const HyperVector& b) {
    return similarity(a, b, metric).ranking_value();
}

HyperVector binarize_real(const std::vector<double>& acc, std::uint64_t tie_key) {
    HyperVector out = HyperVector::zeros(static_cast<std::uint32_t>(acc.size()), Repr::Bipolar);
    CounterRng ties(tie_key);
    for (std::uint32_t i = 0; i < acc.size(); ++i)
        out.set_bit(i, acc[i] > 0.0 || (acc[i] == 0.0 && (ties.word_at(i) & 1ull)));
    return out;
}

} // namespace

double ClassifierModel::quantize_step(double x) {
    return std::nearbyint(x * 1048576.0) / 1048576.0;
}

std::size_t ClassifierModel::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == label) return i;
    raise(ErrorCode::MissingItem, "unknown class label '" + label + "'");
}

void ClassifierModel::refresh_binarized() {
    binarized_.clear();
    binarized_.reserve(accum_.size());
    for (std::size_t c = 0; c < accum_.size(); ++c)
        binarized_.push_back(binarize_real(
            accum_[c], CounterRng::derive_key("classifier-ties", classes_[c], tie_seed_)));
}

ClassifierModel train_single_pass(const LabeledDataset& dataset, const ProjectionEncoder& encoder,
                                  SimilarityMetric metric, std::uint64_t tie_seed) {
    if (dataset.size() == 0) raise(ErrorCode::EmptyInput, "cannot train on an empty dataset");
    if (dataset.features.size() != dataset.labels.size())
        raise(ErrorCode::ShapeMismatch, "feature/label count mismatch");

    ClassifierModel model;
    model.encoder_ = encoder;
    model.metric_ = metric;
    model.tie_seed_ = tie_seed;
    for (const auto& label : dataset.labels)
        if (std::find(model.classes_.begin(), model.classes_.end(), label) == model.classes_.end())
            model.classes_.push_back(label);
    model.accum_.assign(model.classes_.size(),
                        std::vector<double>(encoder.out_dim(), 0.0));

    for (std::size_t s = 0; s < dataset.size(); ++s) {
        HyperVector q = encoder.encode(dataset.features[s]);
        auto& acc = model.accum_[model.class_index(dataset.labels[s])];
        for (std::uint32_t j = 0; j < q.dim(); ++j) acc[j] += q.bit(j) ? 1.0 : -1.0;
    }
    model.refresh_binarized();
    return model;
}

void retrain_iterative(ClassifierModel& model, const LabeledDataset& dataset, double eta,
                       std::size_t epochs) {
    if (!(eta > 0.0)) raise(ErrorCode::InvalidArgument, "learning rate must be positive");
    if (!model.trained()) raise(ErrorCode::ModelState, "retrain requires a trained model");

    // Encodings are reused across epochs.
    std::vector<HyperVector> encoded;
    std::vector<std::size_t> truth;
    encoded.reserve(dataset.size());
    for (std::size_t s = 0; s < dataset.size(); ++s) {
        encoded.push_back(model.encoder_.encode(dataset.features[s]));
        truth.push_back(model.class_index(dataset.labels[s]));
    }

    for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
        for (std::size_t s = 0; s < dataset.size(); ++s) {
            const HyperVector& q = encoded[s];
            std::size_t best = 0;
            double best_score = -1e300;
            for (std::size_t c = 0; c < model.classes_.size(); ++c) {
                double score = ranking_score(model.metric_, q, model.binarized_[c]);
                if (score > best_score) {
                    best_score = score;
                    best = c;
                }
            }
            if (best == truth[s]) continue;
            double raw = similarity(q, model.binarized_[best], model.metric_).value;
            double delta = to_unit_confidence(model.metric_, raw, q.dim());
            double step = ClassifierModel::quantize_step(eta * (1.0 - delta));
            auto& win = model.accum_[truth[s]];
            auto& lose = model.accum_[best];
            for (std::uint32_t j = 0; j < q.dim(); ++j) {
                double signed_step = q.bit(j) ? step : -step;
                win[j] += signed_step;
                lose[j] -= signed_step;
            }
        }
        model.refresh_binarized();
    }
}

std::pair<std::string, std::vector<double>> infer_hv(const ClassifierModel& model,
                                                     const HyperVector& query) {
    if (!model.trained()) raise(ErrorCode::ModelState, "inference requires a trained model");
    std::vector<double> scores(model.classes_.size());
    std::size_t best = 0;
    for (std::size_t c = 0; c < model.classes_.size(); ++c) {
        scores[c] = ranking_score(model.metric_, query, model.binarized_[c]);
        if (scores[c] > scores[best]) best = c;
    }
    return {model.classes_[best], scores};
}

std::pair<std::string, std::vector<double>> infer(const ClassifierModel& model,
                                                  const std::vector<double>& sample) {
    if (!model.trained()) raise(ErrorCode::ModelState, "inference requires a trained model");
    return infer_hv(model, model.encoder().encode(sample));
}

namespace {

// Checkpoint payload: "VSAM" magic, version u16, class count u32, dim u32,
// then per class dim little-endian doubles.
std::string pack_accumulators(const std::vector<std::vector<double>>& accum,
                              std::uint32_t dim) {
    std::string blob = "VSAM";
    auto put_u16 = [&](std::uint16_t v) {
        blob.push_back(static_cast<char>(v & 0xff));
        blob.push_back(static_cast<char>(v >> 8));
    };
    auto put_u32 = [&](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) blob.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put_u16(1);
    put_u32(static_cast<std::uint32_t>(accum.size()));
    put_u32(dim);
    for (const auto& acc : accum) {
        for (double x : acc) {
            std::uint64_t bits;
            std::memcpy(&bits, &x, 8);
            for (int i = 0; i < 8; ++i) blob.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
        }
    }
    return blob;
}

std::vector<std::vector<double>> unpack_accumulators(const std::string& blob,
                                                     const std::string& path) {
    if (blob.size() < 14 || blob.compare(0, 4, "VSAM") != 0)
        raise(ErrorCode::ParseError, "not a classifier payload: " + path);
    auto u32_at = [&](std::size_t off) {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(blob[off + i])) << (8 * i);
        return v;
    };
    std::uint32_t classes = u32_at(6);
    std::uint32_t dim = u32_at(10);
    if (blob.size() != 14 + static_cast<std::size_t>(classes) * dim * 8)
        raise(ErrorCode::ParseError, "truncated classifier payload: " + path);
    std::vector<std::vector<double>> accum(classes, std::vector<double>(dim));
    std::size_t off = 14;
    for (auto& acc : accum) {
        for (double& x : acc) {
            std::uint64_t bits = 0;
            for (int i = 0; i < 8; ++i)
                bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(blob[off + i]))
                        << (8 * i);
            std::memcpy(&x, &bits, 8);
            off += 8;
        }
    }
    return accum;
}

std::string payload_path_for(const std::string& manifest_path) {
    auto dot = manifest_path.rfind(".json");
    std::string base =
        dot == std::string::npos ? manifest_path : manifest_path.substr(0, dot);
    return base + ".bin";
}

} // namespace

void save_model(const ClassifierModel& model, const std::string& path) {
    std::string payload = payload_path_for(path);
    write_file_atomic(payload, pack_accumulators(model.accum_, model.encoder_.out_dim()));

    nlohmann::json j;
    j["format"] = "vsakit-classifier";
    j["version"] = 1;
    j["classes"] = model.classes_;
    j["dim"] = model.encoder_.out_dim();
    j["metric"] = static_cast<int>(model.metric_);
    j["tie_seed"] = model.tie_seed_;
    j["encoder"] = {{"in_dim", model.encoder_.in_dim()},
                    {"out_dim", model.encoder_.out_dim()},
                    {"seed", model.encoder_.seed()}};
    j["payload"] = std::filesystem::path(payload).filename().string();
    write_file_atomic(path, j.dump(2) + "\n");
}

ClassifierModel load_model(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || j.value("format", "") != "vsakit-classifier")
        raise(ErrorCode::ParseError, "not a classifier checkpoint: " + path);
    ClassifierModel model;
    model.classes_ = j.at("classes").get<std::vector<std::string>>();
    model.metric_ = static_cast<SimilarityMetric>(j.at("metric").get<int>());
    model.tie_seed_ = j.at("tie_seed").get<std::uint64_t>();
    const auto& enc = j.at("encoder");
    model.encoder_ = ProjectionEncoder(enc.at("in_dim").get<std::size_t>(),
                                       enc.at("out_dim").get<std::uint32_t>(),
                                       enc.at("seed").get<std::uint64_t>());

    std::filesystem::path payload = std::filesystem::path(path).parent_path() /
                                    j.at("payload").get<std::string>();
    model.accum_ = unpack_accumulators(read_file(payload.string()), payload.string());
    if (model.accum_.size() != model.classes_.size())
        raise(ErrorCode::ParseError, "checkpoint accumulator/class count mismatch");
    model.refresh_binarized();
    return model;
}

ClusterModel cluster(const std::vector<std::vector<double>>& samples,
                     const ProjectionEncoder& encoder, std::size_t k, std::size_t max_iters,
                     std::uint64_t seed) {
    if (k < 1) raise(ErrorCode::InvalidArgument, "cluster count must be >= 1");
    if (k > samples.size())
        raise(ErrorCode::InvalidArgument, "cluster count exceeds dataset size");

    const std::uint32_t dim = encoder.out_dim();
    std::vector<HyperVector> encoded;
    encoded.reserve(samples.size());
    for (const auto& s : samples) encoded.push_back(encoder.encode(s).as_repr(Repr::Binary));

    ClusterModel model;
    model.k = k;
    model.centroids.reserve(k);
    for (std::size_t c = 0; c < k; ++c)
        model.centroids.push_back(
            random_hv("cluster-centroids", "c" + std::to_string(c), seed, dim, Repr::Binary));
    model.centroid_accums.assign(k, HyperVector::zeros(dim, Repr::IntAccum));
    model.assignments.assign(samples.size(), 0);

    std::vector<std::size_t> prev(samples.size(), k);  // sentinel: nothing assigned yet
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        // Assignment by Hamming similarity to the binarized centroids.
        std::size_t changes = 0;
        for (std::size_t s = 0; s < encoded.size(); ++s) {
            std::size_t best = 0;
            std::uint32_t best_dist = hamming_raw(encoded[s], model.centroids[0]);
            for (std::size_t c = 1; c < k; ++c) {
                std::uint32_t d = hamming_raw(encoded[s], model.centroids[c]);
                if (d < best_dist) {
                    best_dist = d;
                    best = c;
                }
            }
            if (prev[s] != best) ++changes;
            model.assignments[s] = best;
        }
        model.change_history.push_back(changes);
        model.iterations = iter + 1;
        if (changes == 0) {
            model.converged = true;
            break;
        }
        prev = model.assignments;

        // Centroid update: accumulate members; empty clusters keep their vector.
        for (std::size_t c = 0; c < k; ++c) {
            HyperVector acc = HyperVector::zeros(dim, Repr::IntAccum);
            std::size_t members = 0;
            for (std::size_t s = 0; s < encoded.size(); ++s) {
                if (model.assignments[s] != c) continue;
                ++members;
                for (std::uint32_t j = 0; j < dim; ++j)
                    acc.accum()[j] += encoded[s].bit(j) ? 1 : -1;
            }
            if (members == 0) continue;
            model.centroid_accums[c] = acc;
            model.centroids[c] = binarize(
                acc, Repr::Binary,
                CounterRng::derive_key("cluster-ties", std::to_string(c), seed));
        }
    }
    return model;
}

} // namespace vsa
