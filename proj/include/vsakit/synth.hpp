#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vsakit/cognition.hpp"
#include "vsakit/encoders.hpp"
#include "vsakit/learning.hpp"

namespace vsa {

// Seeded synthetic inputs shared by the demo workloads, the CLI and the test
// suites. Everything here is a pure function of its arguments.

// Gaussian blobs: class centroids drawn from N(0, centroid_scale^2 I),
// samples from N(centroid, noise^2 I), classes assigned round-robin.
LabeledDataset make_blobs(std::size_t samples, std::size_t features, std::size_t classes,
                          std::uint64_t seed, double centroid_scale = 2.0, double noise = 1.0);

// Deterministic holdout split; the first ceil(fraction * n) samples of a
// seeded shuffle become the test set.
std::pair<LabeledDataset, LabeledDataset> split_dataset(const LabeledDataset& dataset,
                                                        double holdout_fraction,
                                                        std::uint64_t seed);

// Erdos-Renyi simple undirected graph as an edge list over nodes 0..V-1.
std::vector<std::pair<std::uint32_t, std::uint32_t>> random_graph(std::uint32_t nodes,
                                                                  double edge_prob,
                                                                  std::uint64_t seed);

// Modal records for the multi-modal fusion demo: modalities m0..m{M-1} with
// the given arity, timestamps 0..timestamps-1, values uniform in [0,1].
std::vector<ModalRecord> make_modal_records(std::size_t modalities, std::size_t features_each,
                                            std::size_t timestamps, std::uint64_t seed);

// Grid navigation task: range sensors s0..s{S-1} quantized into `bins`
// distance values d0..d{bins-1}, one "move" actuator over four directions.
NavigationVocabulary make_grid_vocab(std::uint32_t dim, std::uint64_t seed,
                                     std::size_t sensors = 4, std::size_t bins = 16,
                                     std::size_t actuator_values = 4);

// Distinct seeded sensor configurations, each mapped to a direction.
std::vector<NavigationDemo> make_grid_demos(std::size_t count, std::uint64_t seed,
                                            std::size_t sensors = 4, std::size_t bins = 16,
                                            std::size_t actuator_values = 4);

} // namespace vsa
