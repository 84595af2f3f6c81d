#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vsakit/hypervector.hpp"

namespace vsa {

// Compact binary container: "VSAH" magic, version, repr, accumulator width,
// dim, a 64-bit seed/metadata slot, then the payload as little-endian words
// (packed reprs) or little-endian int32 (accumulators).
void save_hv(const HyperVector& hv, std::ostream& out, std::uint64_t seed_meta = 0);
HyperVector load_hv(std::istream& in, std::uint64_t* seed_meta = nullptr);

void save_hv_file(const HyperVector& hv, const std::string& path, std::uint64_t seed_meta = 0);
HyperVector load_hv_file(const std::string& path, std::uint64_t* seed_meta = nullptr);

// JSON debug form for small vectors: {"dim":..,"repr":..,"data":[..]}.
nlohmann::json hv_to_json(const HyperVector& hv);
HyperVector hv_from_json(const nlohmann::json& j);

// Atomic file write: writes to <path>.tmp and renames over the target.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

} // namespace vsa
