#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "vsakit/hypervector.hpp"

namespace vsa {

// Item memory: named store of randomly generated hypervectors. Entries are a
// pure function of (name, symbol, seed, dim, repr), so a codebook regenerated
// with the same identity yields identical vectors in any insertion order.
class Codebook {
public:
    Codebook() = default;
    Codebook(std::string name, std::uint64_t seed, std::uint32_t dim, Repr repr = Repr::Binary);

    const std::string& name() const { return name_; }
    std::uint64_t seed() const { return seed_; }
    std::uint32_t dim() const { return dim_; }
    Repr repr() const { return repr_; }
    std::size_t size() const { return symbols_.size(); }

    // Generates and stores the symbol's vector; returns it. Idempotent.
    const HyperVector& add(const std::string& symbol);

    // Adds "prefix0" .. "prefix{n-1}".
    void add_range(const std::string& prefix, std::size_t n);

    bool contains(const std::string& symbol) const;

    // Lookup; missing symbol raises MissingItem.
    const HyperVector& get(const std::string& symbol) const;

    const HyperVector& at(std::size_t index) const { return entries_[index]; }
    const std::string& symbol_at(std::size_t index) const { return symbols_[index]; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<HyperVector>& entries() const { return entries_; }

private:
    std::string name_;
    std::uint64_t seed_ = 0;
    std::uint32_t dim_ = 0;
    Repr repr_ = Repr::Binary;
    std::vector<std::string> symbols_;   // insertion order
    std::vector<HyperVector> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace vsa
