#include "vsakit/codebook.hpp"

namespace vsa {

Codebook::Codebook(std::string name, std::uint64_t seed, std::uint32_t dim, Repr repr)
    : name_(std::move(name)), seed_(seed), dim_(dim), repr_(repr) {
    if (dim == 0) raise(ErrorCode::InvalidArgument, "codebook dimension must be >= 1");
}

const HyperVector& Codebook::add(const std::string& symbol) {
    auto it = index_.find(symbol);
    if (it != index_.end()) return entries_[it->second];
    entries_.push_back(random_hv(name_, symbol, seed_, dim_, repr_));
    symbols_.push_back(symbol);
    index_.emplace(symbol, entries_.size() - 1);
    return entries_.back();
}

void Codebook::add_range(const std::string& prefix, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add(prefix + std::to_string(i));
}

bool Codebook::contains(const std::string& symbol) const {
    return index_.count(symbol) != 0;
}

const HyperVector& Codebook::get(const std::string& symbol) const {
    auto it = index_.find(symbol);
    if (it == index_.end())
        raise(ErrorCode::MissingItem, "codebook '" + name_ + "' has no symbol '" + symbol + "'");
    return entries_[it->second];
}

} // namespace vsa
