#include "vsakit/reasoning.hpp"

#include <cmath>

#include "vsakit/prng.hpp"

namespace vsa {

CleanupMemory::Result CleanupMemory::query(const HyperVector& noisy) const {
    if (codebook_ == nullptr || codebook_->size() == 0)
        raise(ErrorCode::EmptyInput, "cleanup memory has no stored items");
    Result res;
    double best = -1e300;
    // Packed operands score in the bipolar view, so the random-pair noise
    // floor sits at 0 for cosine/dot and exact matches at 1.
    const HyperVector probe = noisy.is_packed() ? noisy.as_repr(Repr::Bipolar) : noisy;
    for (std::size_t i = 0; i < codebook_->size(); ++i) {
        const HyperVector& item = codebook_->at(i);
        double score = similarity(probe, item.is_packed() ? item.as_repr(Repr::Bipolar) : item,
                                  metric_)
                           .ranking_value();
        if (score > best) {
            best = score;
            res.best_symbol = codebook_->symbol_at(i);
        }
    }
    res.score = best;
    if (best >= threshold_) res.symbol = res.best_symbol;
    return res;
}

HyperVector compose(const std::vector<HyperVector>& factors) {
    if (factors.size() < 2)
        raise(ErrorCode::InvalidArgument, "compose needs at least two factors");
    HyperVector out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = bind(out, factors[i]);
    return out;
}

CleanupMemory::Result query_unbind(const HyperVector& composite, const HyperVector& key,
                                   const CleanupMemory& cleanup) {
    return cleanup.query(unbind(composite, key));
}

namespace {

// sign(X X^T v): similarity of v to each item, then the similarity-weighted
// bundle of the items, thresholded back to bipolar. Zero sums resolve
// through the seeded tie stream.
HyperVector cleanup_project(const HyperVector& v, const Codebook& cb, std::uint64_t tie_key) {
    const std::uint32_t dim = v.dim();
    if (cb.dim() != dim)
        raise(ErrorCode::ShapeMismatch, "codebook dimension does not match composite");

    std::vector<std::int64_t> weights(cb.size());
    for (std::size_t m = 0; m < cb.size(); ++m) {
        // Bipolar dot product via Hamming distance.
        const HyperVector item = cb.at(m).as_repr(v.repr());
        weights[m] = static_cast<std::int64_t>(dim) -
                     2ll * static_cast<std::int64_t>(hamming_raw(v, item));
    }

    std::vector<std::int64_t> acc(dim, 0);
    for (std::size_t m = 0; m < cb.size(); ++m) {
        const HyperVector& item = cb.at(m);
        std::int64_t w = weights[m];
        if (w == 0) continue;
        for (std::uint32_t j = 0; j < dim; ++j) acc[j] += item.bit(j) ? w : -w;
    }

    CounterRng ties(tie_key);
    HyperVector out = HyperVector::zeros(dim, Repr::Bipolar);
    for (std::uint32_t j = 0; j < dim; ++j)
        out.set_bit(j, acc[j] > 0 || (acc[j] == 0 && (ties.word_at(j) & 1ull)));
    return out;
}

std::uint64_t tie_key_for(std::uint64_t seed, std::size_t factor, std::size_t iteration) {
    return CounterRng::derive_key("resonator-ties",
                                  std::to_string(factor) + ":" + std::to_string(iteration), seed);
}

} // namespace

ResonatorState resonator_init(const std::vector<const Codebook*>& codebooks,
                              ResonatorSchedule schedule, double noise_p, std::uint64_t seed) {
    if (codebooks.empty()) raise(ErrorCode::InvalidArgument, "resonator needs >= 1 codebook");
    ResonatorState state;
    state.schedule = schedule;
    state.noise_p = noise_p;
    state.seed = seed;
    state.converged.assign(codebooks.size(), false);
    for (std::size_t i = 0; i < codebooks.size(); ++i) {
        const Codebook& cb = *codebooks[i];
        if (cb.size() == 0) raise(ErrorCode::EmptyInput, "resonator codebook is empty");
        std::vector<HyperVector> items;
        items.reserve(cb.size());
        for (std::size_t m = 0; m < cb.size(); ++m)
            items.push_back(cb.at(m).as_repr(Repr::Bipolar));
        if (items.size() == 1) {
            state.estimates.push_back(items.front());
        } else {
            state.estimates.push_back(
                bundle(items, CounterRng::derive_key("resonator-init", std::to_string(i), seed))
                    .binarized);
        }
    }
    return state;
}

ResonatorState resonator_step(const ResonatorState& state, const HyperVector& composite,
                              const std::vector<const Codebook*>& codebooks) {
    if (state.estimates.size() != codebooks.size())
        raise(ErrorCode::ShapeMismatch, "estimate count does not match codebook count");
    const HyperVector f = composite.repr() == Repr::Bipolar ? composite
                                                            : composite.as_repr(Repr::Bipolar);
    for (const auto& est : state.estimates)
        if (est.dim() != f.dim())
            raise(ErrorCode::ShapeMismatch, "estimate dimension does not match composite");

    ResonatorState next = state;
    next.iteration = state.iteration + 1;
    const bool sequential = state.schedule == ResonatorSchedule::Sequential;

    for (std::size_t i = 0; i < codebooks.size(); ++i) {
        // Unbind every other factor's estimate from the composite; the
        // parallel schedule reads the previous iteration, the sequential one
        // whatever is freshest.
        HyperVector v = f;
        for (std::size_t j = 0; j < codebooks.size(); ++j) {
            if (j == i) continue;
            const HyperVector& other = sequential ? next.estimates[j] : state.estimates[j];
            v = bind(v, other);
        }
        HyperVector clean = cleanup_project(v, *codebooks[i], tie_key_for(state.seed, i, next.iteration));
        next.converged[i] = clean == state.estimates[i];
        if (state.noise_p > 0.0) {
            std::uint64_t noise_seed = CounterRng::derive_key(
                "resonator-noise", std::to_string(i) + ":" + std::to_string(next.iteration),
                state.seed);
            next.estimates[i] = inject_noise(clean, state.noise_p, noise_seed);
        } else {
            next.estimates[i] = std::move(clean);
        }
    }
    return next;
}

FactorizeResult factorize(const HyperVector& composite,
                          const std::vector<const Codebook*>& codebooks, std::size_t max_iters,
                          ResonatorSchedule schedule, double noise_p, std::uint64_t seed,
                          double trust_threshold) {
    if (max_iters < 1) raise(ErrorCode::InvalidArgument, "max_iters must be >= 1");
    ResonatorState state = resonator_init(codebooks, schedule, noise_p, seed);

    FactorizeResult result;
    while (state.iteration < max_iters) {
        state = resonator_step(state, composite, codebooks);
        if (state.all_converged()) break;
    }
    result.iterations = state.iteration;
    result.converged = state.all_converged();

    // Decode each estimate to its nearest codebook item.
    std::vector<HyperVector> decoded_items;
    for (std::size_t i = 0; i < codebooks.size(); ++i) {
        CleanupMemory cm(codebooks[i], SimilarityMetric::Cosine, -1.0);
        auto res = cm.query(state.estimates[i]);
        result.factors.push_back(res.best_symbol);
        decoded_items.push_back(codebooks[i]->get(res.best_symbol).as_repr(composite.repr()));
    }
    HyperVector recomposed =
        decoded_items.size() == 1 ? decoded_items.front() : compose(decoded_items);
    result.recompose_similarity =
        similarity(recomposed.as_repr(Repr::Bipolar), composite.as_repr(Repr::Bipolar),
                   SimilarityMetric::Cosine)
            .value;
    result.trusted = result.converged && result.recompose_similarity >= trust_threshold;
    return result;
}

} // namespace vsa
