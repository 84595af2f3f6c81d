#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsakit/codebook.hpp"
#include "vsakit/hypervector.hpp"

namespace vsa {

// Nearest-item search over a codebook. Returns a stored symbol or an
// explicit no-match; never fabricates a vector. Scores are oriented so
// higher means more similar regardless of the metric.
class CleanupMemory {
public:
    CleanupMemory() = default;
    CleanupMemory(const Codebook* codebook, SimilarityMetric metric = SimilarityMetric::Cosine,
                  double threshold = 0.25)
        : codebook_(codebook), metric_(metric), threshold_(threshold) {}

    struct Result {
        std::optional<std::string> symbol;  // empty when below threshold
        std::string best_symbol;            // argmax regardless of threshold
        double score = 0.0;                 // oriented score of best_symbol
    };

    Result query(const HyperVector& noisy) const;

    double threshold() const { return threshold_; }
    SimilarityMetric metric() const { return metric_; }
    const Codebook& codebook() const { return *codebook_; }

private:
    const Codebook* codebook_ = nullptr;
    SimilarityMetric metric_ = SimilarityMetric::Cosine;
    double threshold_ = 0.25;
};

// Left fold of bind over >= 2 factors. Order insensitive for XOR/multiply.
HyperVector compose(const std::vector<HyperVector>& factors);

// Unbind the key from a composite, then clean up against the memory.
CleanupMemory::Result query_unbind(const HyperVector& composite, const HyperVector& key,
                                   const CleanupMemory& cleanup);

enum class ResonatorSchedule : std::uint8_t { Parallel = 0, Sequential = 1 };

// Current factor estimates of a resonator network run.
struct ResonatorState {
    std::vector<HyperVector> estimates;  // bipolar, one per codebook
    std::size_t iteration = 0;
    std::vector<bool> converged;         // per factor: unchanged in last step
    ResonatorSchedule schedule = ResonatorSchedule::Parallel;
    double noise_p = 0.0;
    std::uint64_t seed = 0;

    bool all_converged() const {
        for (bool c : converged)
            if (!c) return false;
        return !converged.empty();
    }
};

// Initial state: each estimate superposes that codebook's items.
ResonatorState resonator_init(const std::vector<const Codebook*>& codebooks,
                              ResonatorSchedule schedule, double noise_p, std::uint64_t seed);

// One full update sweep. Each factor's new estimate is
// sign(X X^T (f (.) all other estimates)), evaluated two-stage: item
// similarities first, then the similarity-weighted item bundle. Parallel
// sweeps read only the previous iteration's estimates; sequential sweeps use
// the freshest ones. Convergence flags compare the pre-noise estimates, so a
// fixed point is detected even when noise_p keeps perturbing the next input.
ResonatorState resonator_step(const ResonatorState& state, const HyperVector& composite,
                              const std::vector<const Codebook*>& codebooks);

struct FactorizeResult {
    std::vector<std::string> factors;   // decoded symbol per codebook
    std::size_t iterations = 0;
    bool converged = false;
    double recompose_similarity = 0.0;  // cosine of compose(decoded) vs input
    bool trusted = false;               // converged and recompose close to 1
};

// Iterate resonator sweeps until every estimate is bit-identical across two
// consecutive iterations, or max_iters. Non-convergence is a best-effort
// decode, not an error.
FactorizeResult factorize(const HyperVector& composite,
                          const std::vector<const Codebook*>& codebooks, std::size_t max_iters,
                          ResonatorSchedule schedule = ResonatorSchedule::Parallel,
                          double noise_p = 0.0, std::uint64_t seed = 0,
                          double trust_threshold = 0.5);

} // namespace vsa
