#include "vsakit/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace vsa {

namespace {

constexpr char kMagic[4] = {'V', 'S', 'A', 'H'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::ostream& out, std::uint16_t v) {
    char b[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
    out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint16_t get_u16(std::istream& in) {
    unsigned char b[2];
    in.read(reinterpret_cast<char*>(b), 2);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

} // namespace

void save_hv(const HyperVector& hv, std::ostream& out, std::uint64_t seed_meta) {
    out.write(kMagic, 4);
    put_u16(out, kVersion);
    out.put(static_cast<char>(hv.repr()));
    out.put(static_cast<char>(hv.accum_bits()));
    put_u32(out, hv.dim());
    put_u64(out, seed_meta);
    if (hv.is_packed()) {
        for (std::uint64_t w : hv.words()) put_u64(out, w);
    } else {
        for (std::int32_t v : hv.accum()) put_u32(out, static_cast<std::uint32_t>(v));
    }
    if (!out) raise(ErrorCode::IoError, "failed to write hypervector container");
}

HyperVector load_hv(std::istream& in, std::uint64_t* seed_meta) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kMagic, 4))
        raise(ErrorCode::ParseError, "not a hypervector container (bad magic)");
    std::uint16_t version = get_u16(in);
    if (version != kVersion)
        raise(ErrorCode::ParseError, "unsupported container version " + std::to_string(version));
    Repr repr = static_cast<Repr>(in.get());
    int accum_bits = in.get();
    std::uint32_t dim = get_u32(in);
    std::uint64_t meta = get_u64(in);
    if (seed_meta) *seed_meta = meta;
    HyperVector hv = HyperVector::zeros(dim, repr, repr == Repr::IntAccum ? accum_bits : 32);
    if (hv.is_packed()) {
        for (auto& w : hv.words()) w = get_u64(in);
    } else {
        for (auto& v : hv.accum()) v = static_cast<std::int32_t>(get_u32(in));
    }
    if (!in) raise(ErrorCode::ParseError, "truncated hypervector container");
    return hv;
}

void save_hv_file(const HyperVector& hv, const std::string& path, std::uint64_t seed_meta) {
    std::ostringstream buf(std::ios::binary);
    save_hv(hv, buf, seed_meta);
    write_file_atomic(path, buf.str());
}

HyperVector load_hv_file(const std::string& path, std::uint64_t* seed_meta) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::IoError, "cannot open " + path);
    return load_hv(in, seed_meta);
}

nlohmann::json hv_to_json(const HyperVector& hv) {
    nlohmann::json j;
    j["dim"] = hv.dim();
    j["repr"] = repr_name(hv.repr());
    if (hv.is_packed()) {
        std::vector<int> data(hv.dim());
        for (std::uint32_t i = 0; i < hv.dim(); ++i) data[i] = hv.element(i);
        j["data"] = data;
    } else {
        j["accum_bits"] = hv.accum_bits();
        j["data"] = hv.accum();
    }
    return j;
}

HyperVector hv_from_json(const nlohmann::json& j) {
    Repr repr = repr_from_name(j.at("repr").get<std::string>());
    std::uint32_t dim = j.at("dim").get<std::uint32_t>();
    const auto& data = j.at("data");
    if (data.size() != dim) raise(ErrorCode::ParseError, "hypervector json: data length != dim");
    HyperVector hv = HyperVector::zeros(dim, repr, j.value("accum_bits", 32));
    for (std::uint32_t i = 0; i < dim; ++i) {
        int v = data[i].get<int>();
        if (repr == Repr::IntAccum) {
            hv.accum()[i] = v;
        } else {
            if (repr == Repr::Binary && v != 0 && v != 1)
                raise(ErrorCode::ParseError, "binary element outside {0,1}");
            if (repr == Repr::Bipolar && v != -1 && v != 1)
                raise(ErrorCode::ParseError, "bipolar element outside {-1,+1}");
            hv.set_bit(i, v > 0);
        }
    }
    return hv;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) raise(ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace vsa
