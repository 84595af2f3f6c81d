#include "vsakit/synth.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vsakit/prng.hpp"

namespace vsa {

LabeledDataset make_blobs(std::size_t samples, std::size_t features, std::size_t classes,
                          std::uint64_t seed, double centroid_scale, double noise) {
    if (classes == 0 || samples < classes)
        raise(ErrorCode::InvalidArgument, "blobs need >= 1 sample per class");
    CounterRng rng = CounterRng::keyed("blobs", "", seed);
    std::vector<std::vector<double>> centroids(classes, std::vector<double>(features));
    for (auto& c : centroids)
        for (auto& x : c) x = centroid_scale * rng.next_gaussian();

    LabeledDataset ds;
    ds.features.reserve(samples);
    ds.labels.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t cls = s % classes;
        std::vector<double> f(features);
        for (std::size_t i = 0; i < features; ++i)
            f[i] = centroids[cls][i] + noise * rng.next_gaussian();
        ds.features.push_back(std::move(f));
        ds.labels.push_back("class" + std::to_string(cls));
    }
    return ds;
}

std::pair<LabeledDataset, LabeledDataset> split_dataset(const LabeledDataset& dataset,
                                                        double holdout_fraction,
                                                        std::uint64_t seed) {
    if (!(holdout_fraction >= 0.0 && holdout_fraction < 1.0))
        raise(ErrorCode::InvalidArgument, "holdout fraction must lie in [0, 1)");
    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), 0);
    CounterRng rng = CounterRng::keyed("split", "", seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.next_below(i)]);

    auto holdout = static_cast<std::size_t>(holdout_fraction * static_cast<double>(order.size()));
    LabeledDataset test, train;
    for (std::size_t i = 0; i < order.size(); ++i) {
        LabeledDataset& dst = i < holdout ? test : train;
        dst.features.push_back(dataset.features[order[i]]);
        dst.labels.push_back(dataset.labels[order[i]]);
    }
    return {train, test};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> random_graph(std::uint32_t nodes,
                                                                  double edge_prob,
                                                                  std::uint64_t seed) {
    CounterRng rng = CounterRng::keyed("graph", "", seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < nodes; ++i)
        for (std::uint32_t j = i + 1; j < nodes; ++j)
            if (rng.next_real() < edge_prob) edges.emplace_back(i, j);
    return edges;
}

namespace {

std::vector<std::string> direction_names(std::size_t count) {
    static const char* base[] = {"north", "south", "east", "west"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(i < 4 ? base[i] : "dir" + std::to_string(i));
    return out;
}

} // namespace

NavigationVocabulary make_grid_vocab(std::uint32_t dim, std::uint64_t seed, std::size_t sensors,
                                     std::size_t bins, std::size_t actuator_values) {
    std::vector<std::string> sensor_ids;
    for (std::size_t s = 0; s < sensors; ++s) sensor_ids.push_back("s" + std::to_string(s));
    std::vector<std::string> bin_values;
    for (std::size_t b = 0; b < bins; ++b) bin_values.push_back("d" + std::to_string(b));
    return NavigationVocabulary(sensor_ids, bin_values, {"move"},
                                direction_names(actuator_values), dim, seed);
}

std::vector<NavigationDemo> make_grid_demos(std::size_t count, std::uint64_t seed,
                                            std::size_t sensors, std::size_t bins,
                                            std::size_t actuator_values) {
    std::vector<std::string> dirs = direction_names(actuator_values);
    CounterRng rng = CounterRng::keyed("grid-demos", "", seed);
    std::vector<NavigationDemo> demos;
    std::set<std::string> seen;
    while (demos.size() < count) {
        NavigationDemo d;
        std::string key;
        for (std::size_t s = 0; s < sensors; ++s) {
            std::string v = "d" + std::to_string(rng.next_below(bins));
            d.sensors["s" + std::to_string(s)] = v;
            key += v;
            key += '|';
        }
        if (!seen.insert(key).second) continue;
        d.actuators["move"] = dirs[rng.next_below(dirs.size())];
        demos.push_back(std::move(d));
    }
    return demos;
}

std::vector<ModalRecord> make_modal_records(std::size_t modalities, std::size_t features_each,
                                            std::size_t timestamps, std::uint64_t seed) {
    CounterRng rng = CounterRng::keyed("modal-records", "", seed);
    std::vector<ModalRecord> records;
    for (std::size_t t = 0; t < timestamps; ++t) {
        for (std::size_t m = 0; m < modalities; ++m) {
            ModalRecord rec;
            rec.modality = "m" + std::to_string(m);
            rec.timestamp = static_cast<std::uint32_t>(t);
            for (std::size_t f = 0; f < features_each; ++f)
                rec.features.emplace_back("m" + std::to_string(m) + "_f" + std::to_string(f),
                                          rng.next_real());
            records.push_back(std::move(rec));
        }
    }
    return records;
}

} // namespace vsa
