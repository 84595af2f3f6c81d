#include "vsakit/hypervector.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "vsakit/prng.hpp"

namespace vsa {

const char* repr_name(Repr r) {
    switch (r) {
        case Repr::Binary: return "binary";
        case Repr::Bipolar: return "bipolar";
        case Repr::IntAccum: return "int_accum";
    }
    return "?";
}

Repr repr_from_name(const std::string& name) {
    if (name == "binary") return Repr::Binary;
    if (name == "bipolar") return Repr::Bipolar;
    if (name == "int_accum") return Repr::IntAccum;
    raise(ErrorCode::ParseError, "unknown repr name: " + name);
}

HyperVector HyperVector::zeros(std::uint32_t dim, Repr repr, int accum_bits) {
    if (dim == 0) raise(ErrorCode::InvalidArgument, "hypervector dimension must be >= 1");
    HyperVector hv;
    hv.dim_ = dim;
    hv.repr_ = repr;
    if (repr == Repr::IntAccum) {
        if (accum_bits < 2 || accum_bits > 32)
            raise(ErrorCode::InvalidArgument, "accumulator bit-width must be in [2, 32]");
        hv.accum_bits_ = static_cast<std::uint8_t>(accum_bits);
        hv.accum_.assign(dim, 0);
    } else {
        hv.words_.assign((dim + 63) / 64, 0);
    }
    return hv;
}

std::int32_t HyperVector::element(std::uint32_t i) const {
    switch (repr_) {
        case Repr::Binary: return bit(i) ? 1 : 0;
        case Repr::Bipolar: return bit(i) ? 1 : -1;
        case Repr::IntAccum: return accum_[i];
    }
    return 0;
}

HyperVector HyperVector::as_repr(Repr target) const {
    if (repr_ == Repr::IntAccum || target == Repr::IntAccum)
        raise(ErrorCode::ShapeMismatch, "repr view conversion is defined for packed vectors only");
    HyperVector out = *this;
    out.repr_ = target;
    return out;
}

bool HyperVector::operator==(const HyperVector& other) const {
    return dim_ == other.dim_ && repr_ == other.repr_ &&
           words_ == other.words_ && accum_ == other.accum_;
}

std::uint64_t HyperVector::tail_mask() const {
    unsigned rem = dim_ & 63;
    return rem == 0 ? ~0ull : ((1ull << rem) - 1);
}

std::string HyperVector::to_bit_string() const {
    std::string s;
    s.reserve(dim_);
    for (std::uint32_t i = 0; i < dim_; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
}

HyperVector HyperVector::from_bit_string(const std::string& bits, Repr repr) {
    HyperVector hv = zeros(static_cast<std::uint32_t>(bits.size()), repr);
    for (std::uint32_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            raise(ErrorCode::ParseError, "bit string may contain only 0 and 1");
        hv.set_bit(i, bits[i] == '1');
    }
    return hv;
}

namespace {

void require_same_shape(const HyperVector& a, const HyperVector& b) {
    if (a.dim() != b.dim())
        raise(ErrorCode::ShapeMismatch, "dimension mismatch: " + std::to_string(a.dim()) +
                                            " vs " + std::to_string(b.dim()));
    if (a.repr() != b.repr())
        raise(ErrorCode::ShapeMismatch, std::string("repr mismatch: ") + repr_name(a.repr()) +
                                            " vs " + repr_name(b.repr()));
}

void require_packed(const HyperVector& a, const char* op) {
    if (!a.is_packed())
        raise(ErrorCode::ShapeMismatch, std::string(op) + " requires a binary or bipolar vector");
}

} // namespace

HyperVector random_hv(const std::string& codebook_name, const std::string& symbol,
                      std::uint64_t seed, std::uint32_t dim, Repr repr, int accum_bits) {
    if (dim == 0) raise(ErrorCode::InvalidArgument, "hypervector dimension must be >= 1");
    std::uint64_t key = CounterRng::derive_key(codebook_name, symbol, seed);
    CounterRng rng(key);
    HyperVector hv = HyperVector::zeros(dim, repr, repr == Repr::IntAccum ? accum_bits : 32);
    if (repr == Repr::IntAccum) {
        // Uniform over the signed accum_bits range.
        std::int64_t lo = -(1ll << (accum_bits - 1));
        std::uint64_t span = 1ull << accum_bits;
        for (std::uint32_t i = 0; i < dim; ++i)
            hv.accum()[i] = static_cast<std::int32_t>(lo + static_cast<std::int64_t>(rng.next_below(span)));
        return hv;
    }
    for (auto& w : hv.words()) w = rng.next_u64();
    hv.words().back() &= hv.tail_mask();
    return hv;
}

HyperVector bind(const HyperVector& a, const HyperVector& b) {
    require_same_shape(a, b);
    require_packed(a, "bind");
    HyperVector out = a;
    const auto& bw = b.words();
    if (a.repr() == Repr::Binary) {
        for (std::size_t i = 0; i < out.word_count(); ++i) out.words()[i] ^= bw[i];
    } else {
        // Bipolar product under 0<->-1, 1<->+1 is XNOR of the packed bits.
        for (std::size_t i = 0; i < out.word_count(); ++i) out.words()[i] = ~(out.words()[i] ^ bw[i]);
        out.words().back() &= out.tail_mask();
    }
    return out;
}

HyperVector unbind(const HyperVector& x, const HyperVector& b) {
    return bind(x, b);
}

HyperVector binarize(const HyperVector& accumulator, Repr target, std::uint64_t tie_break_seed) {
    if (accumulator.repr() != Repr::IntAccum)
        raise(ErrorCode::ShapeMismatch, "binarize expects an accumulator vector");
    if (target == Repr::IntAccum)
        raise(ErrorCode::InvalidArgument, "binarize target must be binary or bipolar");
    CounterRng ties = CounterRng::keyed("bundle-ties", "", tie_break_seed);
    HyperVector out = HyperVector::zeros(accumulator.dim(), target);
    for (std::uint32_t i = 0; i < accumulator.dim(); ++i) {
        std::int32_t v = accumulator.accum()[i];
        bool bitval = v > 0 || (v == 0 && (ties.word_at(i) & 1ull));
        out.set_bit(i, bitval);
    }
    return out;
}

BundleResult bundle(const std::vector<HyperVector>& inputs, std::uint64_t tie_break_seed) {
    if (inputs.empty()) raise(ErrorCode::EmptyInput, "bundle of zero inputs");
    const HyperVector& first = inputs.front();
    require_packed(first, "bundle");
    for (const auto& hv : inputs) require_same_shape(first, hv);

    HyperVector acc = HyperVector::zeros(first.dim(), Repr::IntAccum, 32);
    for (const auto& hv : inputs) {
        // Bipolar view: bit set counts +1, clear counts -1.
        for (std::uint32_t i = 0; i < first.dim(); ++i)
            acc.accum()[i] += hv.bit(i) ? 1 : -1;
    }
    HyperVector bin = binarize(acc, first.repr(), tie_break_seed);
    return BundleResult{std::move(acc), std::move(bin)};
}

HyperVector permute(const HyperVector& a, std::int64_t k) {
    require_packed(a, "permute");
    const std::int64_t d = a.dim();
    std::int64_t s = ((k % d) + d) % d;
    if (s == 0) return a;
    HyperVector out = HyperVector::zeros(a.dim(), a.repr());
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
        std::uint32_t src = static_cast<std::uint32_t>((i + d - s) % d);
        if (a.bit(src)) out.set_bit(i, true);
    }
    return out;
}

std::uint32_t hamming_raw(const HyperVector& a, const HyperVector& b) {
    require_same_shape(a, b);
    require_packed(a, "hamming");
    std::uint32_t diff = 0;
    for (std::size_t i = 0; i < a.word_count(); ++i)
        diff += static_cast<std::uint32_t>(std::popcount(a.words()[i] ^ b.words()[i]));
    return diff;
}

SimilarityScore similarity(const HyperVector& a, const HyperVector& b, SimilarityMetric metric) {
    if (a.dim() != b.dim())
        raise(ErrorCode::ShapeMismatch, "similarity requires matching dimensions");
    switch (metric) {
        case SimilarityMetric::NormalizedHamming: {
            if (!a.is_packed() || !b.is_packed() || a.repr() != b.repr())
                raise(ErrorCode::ShapeMismatch,
                      "normalized Hamming requires two binary or two bipolar vectors");
            double h = static_cast<double>(hamming_raw(a, b)) / a.dim();
            return {metric, h};
        }
        case SimilarityMetric::Dot:
        case SimilarityMetric::Cosine: {
            if (a.repr() != b.repr())
                raise(ErrorCode::ShapeMismatch, "similarity requires matching reprs");
            double dot = 0.0, na = 0.0, nb = 0.0;
            if (a.repr() == Repr::Bipolar) {
                dot = static_cast<double>(a.dim()) - 2.0 * hamming_raw(a, b);
                na = nb = std::sqrt(static_cast<double>(a.dim()));
            } else if (a.repr() == Repr::Binary) {
                std::uint64_t both = 0, ca = 0, cb = 0;
                for (std::size_t i = 0; i < a.word_count(); ++i) {
                    both += std::popcount(a.words()[i] & b.words()[i]);
                    ca += std::popcount(a.words()[i]);
                    cb += std::popcount(b.words()[i]);
                }
                dot = static_cast<double>(both);
                na = std::sqrt(static_cast<double>(ca));
                nb = std::sqrt(static_cast<double>(cb));
            } else {
                for (std::uint32_t i = 0; i < a.dim(); ++i) {
                    double x = a.accum()[i], y = b.accum()[i];
                    dot += x * y;
                    na += x * x;
                    nb += y * y;
                }
                na = std::sqrt(na);
                nb = std::sqrt(nb);
            }
            if (metric == SimilarityMetric::Dot) return {metric, dot};
            if (na == 0.0 || nb == 0.0)
                raise(ErrorCode::InvalidArgument, "cosine similarity undefined for a zero-norm vector");
            return {metric, dot / (na * nb)};
        }
    }
    raise(ErrorCode::Internal, "unreachable similarity metric");
}

HyperVector inject_noise(const HyperVector& a, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        raise(ErrorCode::InvalidArgument, "noise probability must lie in [0, 1]");
    require_packed(a, "inject_noise");
    CounterRng rng = CounterRng::keyed("noise", "", seed);
    HyperVector out = a;
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
        double u = static_cast<double>(rng.word_at(i) >> 11) * 0x1.0p-53;
        if (u < p) out.set_bit(i, !out.bit(i));
    }
    return out;
}

HyperVector complement(const HyperVector& a) {
    require_packed(a, "complement");
    HyperVector out = a;
    for (auto& w : out.words()) w = ~w;
    out.words().back() &= out.tail_mask();
    return out;
}

std::uint64_t content_key(std::string_view domain, const std::vector<const HyperVector*>& parts,
                          std::uint64_t seed) {
    std::uint64_t h = CounterRng::derive_key(domain, "", seed);
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    };
    for (const HyperVector* hv : parts) {
        mix(hv->dim());
        mix(static_cast<std::uint64_t>(hv->repr()));
        if (hv->is_packed()) {
            for (std::uint64_t w : hv->words()) mix(w);
        } else {
            for (std::int32_t v : hv->accum()) mix(static_cast<std::uint64_t>(v));
        }
    }
    return h;
}

} // namespace vsa
