#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vsakit/codebook.hpp"
#include "vsakit/hypervector.hpp"

namespace vsa {

// Random-projection encoder: in_dim Rademacher (+/-1) rows of length out_dim,
// regenerated deterministically from the seed. Sign quantization of the
// projected accumulator yields a bipolar hypervector; zero sums resolve
// through the seeded tie stream so the output is scale invariant.
class ProjectionEncoder {
public:
    ProjectionEncoder() = default;
    ProjectionEncoder(std::size_t in_dim, std::uint32_t out_dim, std::uint64_t seed);

    std::size_t in_dim() const { return rows_.size(); }
    std::uint32_t out_dim() const { return out_dim_; }
    std::uint64_t seed() const { return seed_; }
    const HyperVector& row(std::size_t i) const { return rows_[i]; }

    HyperVector encode(const std::vector<double>& features) const;

private:
    std::uint32_t out_dim_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<HyperVector> rows_;  // bipolar rows of E
};

inline HyperVector project_encode(const ProjectionEncoder& enc, const std::vector<double>& features) {
    return enc.encode(features);
}

// Feature-value embedding: L quantization bins over [min,max], each bin
// mapped to a hypervector interpolated between two quasi-orthogonal random
// endpoints. Neighbouring bins stay close; the ends are unrelated.
class LevelEmbedding {
public:
    LevelEmbedding() = default;
    LevelEmbedding(double min_value, double max_value, std::size_t levels,
                   std::uint32_t dim, std::uint64_t seed, bool clamp = true);

    std::size_t levels() const { return level_hvs_.size(); }
    double min_value() const { return min_; }
    double max_value() const { return max_; }
    std::uint32_t dim() const { return dim_; }

    std::size_t bin(double value) const;
    const HyperVector& level_hv(std::size_t level) const { return level_hvs_[level]; }
    const HyperVector& encode(double value) const { return level_hvs_[bin(value)]; }

private:
    double min_ = 0.0, max_ = 1.0;
    std::uint32_t dim_ = 0;
    bool clamp_ = true;
    std::vector<HyperVector> level_hvs_;
};

inline const HyperVector& level_encode(const LevelEmbedding& emb, double value) {
    return emb.encode(value);
}

// Position-permuted n-gram sequence encoding: each window binds
// rho^0(s0) (.) rho^1(s1) ... rho^{n-1}(s_{n-1}); windows are bundled and the
// majority vote returned.
HyperVector ngram_encode(const Codebook& codebook, const std::vector<std::string>& sequence,
                         std::size_t n, std::uint64_t tie_break_seed = 0);

// One sample from one sensing modality at one timestamp.
struct ModalRecord {
    std::string modality;
    std::uint32_t timestamp = 0;
    std::vector<std::pair<std::string, double>> features;  // feature id -> value
};

// Declared arity per modality; records must match.
using ModalitySchema = std::map<std::string, std::size_t>;

// Multi-modal fusion: per record, features bind id and value vectors and
// bundle; the record vector is permuted by its timestamp; records of one
// modality bundle into a modal vector and the modal vectors bundle into the
// fused output.
HyperVector multimodal_encode(const std::vector<ModalRecord>& records,
                              const ModalitySchema& schema,
                              const Codebook& id_codebook,
                              const LevelEmbedding& value_emb,
                              std::uint64_t tie_break_seed = 0);

} // namespace vsa
