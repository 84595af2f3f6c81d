#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsakit/errors.hpp"

namespace vsa {

// Element domain of a hypervector. Binary and Bipolar share the same packed
// bit payload under the bijection 0 <-> -1, 1 <-> +1; IntAccum carries a
// signed integer per element (bundle and classifier accumulators).
enum class Repr : std::uint8_t { Binary = 0, Bipolar = 1, IntAccum = 2 };

const char* repr_name(Repr r);
Repr repr_from_name(const std::string& name);

enum class SimilarityMetric : std::uint8_t { NormalizedHamming = 0, Cosine = 1, Dot = 2 };

struct SimilarityScore {
    SimilarityMetric metric;
    double value;

    // Ranking orientation: higher means more similar for every metric, so
    // NormalizedHamming (a distance) ranks as 1 - h.
    double ranking_value() const {
        return metric == SimilarityMetric::NormalizedHamming ? 1.0 - value : value;
    }
};

class HyperVector {
public:
    HyperVector() = default;

    // Zero-initialized vector (all bits 0 / all accumulators 0).
    static HyperVector zeros(std::uint32_t dim, Repr repr, int accum_bits = 32);

    std::uint32_t dim() const { return dim_; }
    Repr repr() const { return repr_; }
    int accum_bits() const { return accum_bits_; }
    bool is_packed() const { return repr_ != Repr::IntAccum; }

    // Packed-bit access (Binary/Bipolar only).
    bool bit(std::uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ull;
    }
    void set_bit(std::uint32_t i, bool v) {
        std::uint64_t mask = 1ull << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    // Accumulator access (IntAccum only).
    const std::vector<std::int32_t>& accum() const { return accum_; }
    std::vector<std::int32_t>& accum() { return accum_; }

    // Element value in the vector's own domain: {0,1}, {-1,+1} or the
    // accumulator integer.
    std::int32_t element(std::uint32_t i) const;

    // Binary <-> Bipolar are views of the same bits; converting to the
    // current repr is the identity. Not defined for IntAccum sources.
    HyperVector as_repr(Repr target) const;

    // Exact equality: same dim, repr and payload.
    bool operator==(const HyperVector& other) const;
    bool operator!=(const HyperVector& other) const { return !(*this == other); }

    // Number of payload words (packed) for iteration helpers.
    std::size_t word_count() const { return words_.size(); }

    // Mask covering the valid bits of the last word.
    std::uint64_t tail_mask() const;

    std::string to_bit_string() const;                 // debugging helper, packed reprs
    static HyperVector from_bit_string(const std::string& bits, Repr repr);

private:
    std::uint32_t dim_ = 0;
    Repr repr_ = Repr::Binary;
    std::uint8_t accum_bits_ = 32;
    std::vector<std::uint64_t> words_;  // packed payload, bit i at word i/64
    std::vector<std::int32_t> accum_;   // integer payload

    friend HyperVector random_hv(const std::string&, const std::string&, std::uint64_t,
                                 std::uint32_t, Repr, int);
};

struct BundleResult {
    HyperVector accumulator;  // IntAccum, elementwise sum of the bipolar view
    HyperVector binarized;    // majority vote in the inputs' repr
};

// Deterministic item generation: a pure function of (codebook_name, symbol,
// seed, dim, repr). Elements are i.i.d. uniform over the repr's alphabet.
HyperVector random_hv(const std::string& codebook_name, const std::string& symbol,
                      std::uint64_t seed, std::uint32_t dim, Repr repr,
                      int accum_bits = 8);

// XOR (Binary) or elementwise product (Bipolar). Self-inverse; the result is
// quasi-orthogonal to both inputs.
HyperVector bind(const HyperVector& a, const HyperVector& b);

// Inverse of bind; for XOR/multiply binding this is bind itself.
HyperVector unbind(const HyperVector& x, const HyperVector& b);

// Elementwise sum plus majority vote. Ties (even counts) resolve through a
// deterministic bit stream keyed by tie_break_seed and the element index, so
// the expected distance statistics stay unbiased.
BundleResult bundle(const std::vector<HyperVector>& inputs, std::uint64_t tie_break_seed);

// Majority-binarize an IntAccum vector into the requested packed repr.
HyperVector binarize(const HyperVector& accumulator, Repr target, std::uint64_t tie_break_seed);

// Cyclic rotation: element i of the output is element (i - k) mod D of the
// input. Distance preserving; permute(a, D) == a.
HyperVector permute(const HyperVector& a, std::int64_t k);

SimilarityScore similarity(const HyperVector& a, const HyperVector& b, SimilarityMetric metric);

// Raw Hamming distance in differing positions (packed reprs).
std::uint32_t hamming_raw(const HyperVector& a, const HyperVector& b);

inline double hamming_normalized(const HyperVector& a, const HyperVector& b) {
    return similarity(a, b, SimilarityMetric::NormalizedHamming).value;
}

// Flip each element independently with probability p; deterministic in seed.
// The flip mask depends only on (dim, p, seed), never on the data, so noise
// commutes exactly through XOR binding.
HyperVector inject_noise(const HyperVector& a, double p, std::uint64_t seed);

// Elementwise complement of a packed vector.
HyperVector complement(const HyperVector& a);

// Key for content-dependent tie streams: bundles of different payloads must
// not share tie bits, or the shared bits correlate otherwise unrelated
// encodings (even-count bundles tie on a third or more of their positions).
std::uint64_t content_key(std::string_view domain, const std::vector<const HyperVector*>& parts,
                          std::uint64_t seed);

} // namespace vsa
