#include "vsakit/encoders.hpp"

#include <cmath>

#include "vsakit/prng.hpp"

namespace vsa {

ProjectionEncoder::ProjectionEncoder(std::size_t in_dim, std::uint32_t out_dim, std::uint64_t seed)
    : out_dim_(out_dim), seed_(seed) {
    if (in_dim == 0) raise(ErrorCode::InvalidArgument, "projection encoder needs in_dim >= 1");
    rows_.reserve(in_dim);
    for (std::size_t i = 0; i < in_dim; ++i)
        rows_.push_back(random_hv("projection-rows", "row" + std::to_string(i), seed, out_dim,
                                  Repr::Bipolar));
}

HyperVector ProjectionEncoder::encode(const std::vector<double>& features) const {
    if (features.size() != rows_.size())
        raise(ErrorCode::ShapeMismatch, "feature length " + std::to_string(features.size()) +
                                            " != encoder in_dim " + std::to_string(rows_.size()));
    for (double f : features)
        if (!std::isfinite(f)) raise(ErrorCode::InvalidArgument, "non-finite feature value");

    std::vector<double> acc(out_dim_, 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        double f = features[r];
        if (f == 0.0) continue;
        const HyperVector& row = rows_[r];
        for (std::uint32_t j = 0; j < out_dim_; ++j) acc[j] += row.bit(j) ? f : -f;
    }
    CounterRng ties = CounterRng::keyed("projection-ties", "", seed_);
    HyperVector out = HyperVector::zeros(out_dim_, Repr::Bipolar);
    for (std::uint32_t j = 0; j < out_dim_; ++j) {
        bool bitval = acc[j] > 0.0 || (acc[j] == 0.0 && (ties.word_at(j) & 1ull));
        out.set_bit(j, bitval);
    }
    return out;
}

LevelEmbedding::LevelEmbedding(double min_value, double max_value, std::size_t levels,
                               std::uint32_t dim, std::uint64_t seed, bool clamp)
    : min_(min_value), max_(max_value), dim_(dim), clamp_(clamp) {
    if (levels < 2) raise(ErrorCode::InvalidArgument, "level embedding needs >= 2 levels");
    if (!(max_value > min_value))
        raise(ErrorCode::InvalidArgument, "level embedding needs max > min");
    HyperVector lo = random_hv("level-embedding", "lo", seed, dim, Repr::Binary);
    HyperVector hi = random_hv("level-embedding", "hi", seed, dim, Repr::Binary);
    level_hvs_.reserve(levels);
    for (std::size_t l = 0; l < levels; ++l) {
        // Level l takes hi's bits on a prefix growing linearly with l.
        std::uint32_t cut = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(l) * dim) / (levels - 1));
        HyperVector hv = lo;
        for (std::uint32_t i = 0; i < cut; ++i) hv.set_bit(i, hi.bit(i));
        level_hvs_.push_back(std::move(hv));
    }
}

std::size_t LevelEmbedding::bin(double value) const {
    if (std::isnan(value)) raise(ErrorCode::InvalidArgument, "cannot level-encode NaN");
    if (value < min_ || value > max_) {
        if (!clamp_)
            raise(ErrorCode::InvalidArgument, "value " + std::to_string(value) +
                                                  " outside embedding range");
        value = value < min_ ? min_ : max_;
    }
    double t = (value - min_) / (max_ - min_);
    auto b = static_cast<std::size_t>(t * static_cast<double>(levels()));
    return b >= levels() ? levels() - 1 : b;
}

HyperVector ngram_encode(const Codebook& codebook, const std::vector<std::string>& sequence,
                         std::size_t n, std::uint64_t tie_break_seed) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "n-gram size must be >= 1");
    if (sequence.size() < n)
        raise(ErrorCode::InvalidArgument, "sequence shorter than n-gram size");
    std::vector<HyperVector> grams;
    grams.reserve(sequence.size() - n + 1);
    for (std::size_t start = 0; start + n <= sequence.size(); ++start) {
        HyperVector g = codebook.get(sequence[start]);
        for (std::size_t j = 1; j < n; ++j)
            g = bind(g, permute(codebook.get(sequence[start + j]), static_cast<std::int64_t>(j)));
        grams.push_back(std::move(g));
    }
    if (grams.size() == 1) return grams.front();
    std::vector<const HyperVector*> parts;
    for (const auto& g : grams) parts.push_back(&g);
    return bundle(grams, content_key("ngram", parts, tie_break_seed)).binarized;
}

HyperVector multimodal_encode(const std::vector<ModalRecord>& records,
                              const ModalitySchema& schema,
                              const Codebook& id_codebook,
                              const LevelEmbedding& value_emb,
                              std::uint64_t tie_break_seed) {
    if (records.empty()) raise(ErrorCode::EmptyInput, "multimodal_encode needs >= 1 record");

    // Group record vectors by modality, keeping schema order.
    std::map<std::string, std::vector<HyperVector>> per_modality;
    for (const ModalRecord& rec : records) {
        auto it = schema.find(rec.modality);
        if (it == schema.end())
            raise(ErrorCode::MissingItem, "unregistered modality '" + rec.modality + "'");
        if (rec.features.size() != it->second)
            raise(ErrorCode::InvalidArgument,
                  "modality '" + rec.modality + "' expects " + std::to_string(it->second) +
                      " features, got " + std::to_string(rec.features.size()));
        std::vector<HyperVector> bound;
        bound.reserve(rec.features.size());
        for (const auto& [feature_id, value] : rec.features) {
            const HyperVector& id_hv = id_codebook.get(feature_id);
            const HyperVector& val_hv = value_emb.encode(value);
            bound.push_back(bind(id_hv, val_hv));
        }
        HyperVector rec_hv;
        if (bound.size() == 1) {
            rec_hv = bound.front();
        } else {
            std::vector<const HyperVector*> parts;
            for (const auto& hv : bound) parts.push_back(&hv);
            rec_hv = bundle(bound, content_key("mm-record", parts, tie_break_seed)).binarized;
        }
        per_modality[rec.modality].push_back(permute(rec_hv, rec.timestamp));
    }

    auto content_bundle = [&](const char* domain, std::vector<HyperVector>& hvs) {
        if (hvs.size() == 1) return hvs.front();
        std::vector<const HyperVector*> parts;
        for (const auto& hv : hvs) parts.push_back(&hv);
        return bundle(hvs, content_key(domain, parts, tie_break_seed)).binarized;
    };
    std::vector<HyperVector> modal_hvs;
    modal_hvs.reserve(per_modality.size());
    for (auto& [modality, recs] : per_modality)
        modal_hvs.push_back(content_bundle("mm-modality", recs));
    return content_bundle("mm-fusion", modal_hvs);
}

} // namespace vsa
