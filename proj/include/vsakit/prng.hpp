#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace vsa {

// Counter-based deterministic generator. Every stream is a pure function of
// its key, so item memories regenerate identically regardless of the order
// entries are requested in, and independent streams never share state.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key), counter_(0) {}

    // SplitMix64 finalizer over key + counter.
    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Stateless access: word i of the stream, independent of cursor position.
    std::uint64_t word_at(std::uint64_t index) const {
        std::uint64_t z = key_ + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    bool next_bit() { return next_u64() & 1ull; }

    // Uniform in [0, 1).
    double next_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

    // Standard normal via Box-Muller.
    double next_gaussian() {
        double u1 = next_real();
        double u2 = next_real();
        while (u1 <= 1e-300) u1 = next_real();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::uint64_t key() const { return key_; }

    // FNV-1a over length-prefixed fields; field order matters, so
    // ("ab","c") and ("a","bc") derive different keys.
    static std::uint64_t derive_key(std::string_view domain,
                                    std::string_view name,
                                    std::uint64_t seed) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix_byte = [&h](unsigned char b) {
            h ^= b;
            h *= 0x100000001b3ull;
        };
        auto mix_str = [&](std::string_view s) {
            mix_byte(static_cast<unsigned char>(s.size() & 0xff));
            mix_byte(static_cast<unsigned char>((s.size() >> 8) & 0xff));
            for (char c : s) mix_byte(static_cast<unsigned char>(c));
        };
        mix_str(domain);
        mix_str(name);
        for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>((seed >> (8 * i)) & 0xff));
        return h;
    }

    static CounterRng keyed(std::string_view domain, std::string_view name, std::uint64_t seed) {
        return CounterRng(derive_key(domain, name, seed));
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

} // namespace vsa
