#include "vsakit/capi.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "vsakit/codebook.hpp"
#include "vsakit/hypervector.hpp"
#include "vsakit/reasoning.hpp"
#include "vsakit/runner.hpp"
#include "vsakit/serialize.hpp"

using namespace vsa;

struct vsa_hv {
    HyperVector value;
};

struct vsa_codebook {
    Codebook value;
};

namespace {

thread_local std::string g_last_error;

vsa_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::Ok: return VSA_OK;
        case ErrorCode::InvalidArgument: return VSA_ERR_INVALID_ARGUMENT;
        case ErrorCode::ShapeMismatch: return VSA_ERR_SHAPE_MISMATCH;
        case ErrorCode::EmptyInput: return VSA_ERR_EMPTY_INPUT;
        case ErrorCode::MissingItem: return VSA_ERR_MISSING_ITEM;
        case ErrorCode::ModelState: return VSA_ERR_MODEL_STATE;
        case ErrorCode::MappingError: return VSA_ERR_MAPPING;
        case ErrorCode::IncompleteTable: return VSA_ERR_INCOMPLETE_TABLE;
        case ErrorCode::UnsupportedNode: return VSA_ERR_UNSUPPORTED_NODE;
        case ErrorCode::IoError: return VSA_ERR_IO;
        case ErrorCode::ParseError: return VSA_ERR_PARSE;
        case ErrorCode::Internal: return VSA_ERR_INTERNAL;
    }
    return VSA_ERR_INTERNAL;
}

template <typename Fn>
vsa_status guarded(Fn&& fn) {
    try {
        fn();
        return VSA_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return VSA_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return VSA_ERR_INTERNAL;
    }
}

vsa_status require(bool ok, const char* message) {
    if (ok) return VSA_OK;
    g_last_error = message;
    return VSA_ERR_INVALID_ARGUMENT;
}

Repr to_repr(vsa_repr repr) { return static_cast<Repr>(repr); }
SimilarityMetric to_metric(vsa_metric metric) { return static_cast<SimilarityMetric>(metric); }

} // namespace

extern "C" {

const char* vsa_last_error(void) { return g_last_error.c_str(); }

const char* vsa_version(void) { return "vsakit 1.0.0"; }

void vsa_string_free(char* s) { std::free(s); }

vsa_status vsa_hv_random(const char* codebook_name, const char* symbol, uint64_t seed,
                         uint32_t dim, vsa_repr repr, vsa_hv** out) {
    if (vsa_status s = require(codebook_name && symbol && out, "null argument")) return s;
    return guarded([&] {
        *out = new vsa_hv{random_hv(codebook_name, symbol, seed, dim, to_repr(repr))};
    });
}

vsa_status vsa_hv_from_bits(const char* bits, vsa_repr repr, vsa_hv** out) {
    if (vsa_status s = require(bits && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{HyperVector::from_bit_string(bits, to_repr(repr))}; });
}

vsa_status vsa_hv_clone(const vsa_hv* hv, vsa_hv** out) {
    if (vsa_status s = require(hv && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{hv->value}; });
}

void vsa_hv_free(vsa_hv* hv) { delete hv; }

uint32_t vsa_hv_dim(const vsa_hv* hv) { return hv ? hv->value.dim() : 0; }

vsa_repr vsa_hv_repr(const vsa_hv* hv) {
    return hv ? static_cast<vsa_repr>(hv->value.repr()) : VSA_REPR_BINARY;
}

int32_t vsa_hv_element(const vsa_hv* hv, uint32_t index) {
    if (!hv || index >= hv->value.dim()) return 0;
    return hv->value.element(index);
}

int vsa_hv_equal(const vsa_hv* a, const vsa_hv* b) {
    if (!a || !b) return 0;
    return a->value == b->value ? 1 : 0;
}

vsa_status vsa_bind(const vsa_hv* a, const vsa_hv* b, vsa_hv** out) {
    if (vsa_status s = require(a && b && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{bind(a->value, b->value)}; });
}

vsa_status vsa_unbind(const vsa_hv* x, const vsa_hv* b, vsa_hv** out) {
    if (vsa_status s = require(x && b && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{unbind(x->value, b->value)}; });
}

vsa_status vsa_bundle(const vsa_hv* const* inputs, size_t count, uint64_t tie_seed,
                      vsa_hv** accumulator_out, vsa_hv** binarized_out) {
    if (vsa_status s = require(inputs || count == 0, "null inputs")) return s;
    return guarded([&] {
        std::vector<HyperVector> hvs;
        hvs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!inputs[i]) raise(ErrorCode::InvalidArgument, "null input hypervector");
            hvs.push_back(inputs[i]->value);
        }
        BundleResult r = bundle(hvs, tie_seed);
        if (accumulator_out) *accumulator_out = new vsa_hv{std::move(r.accumulator)};
        if (binarized_out) *binarized_out = new vsa_hv{std::move(r.binarized)};
    });
}

vsa_status vsa_permute(const vsa_hv* a, int64_t k, vsa_hv** out) {
    if (vsa_status s = require(a && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{permute(a->value, k)}; });
}

vsa_status vsa_similarity(const vsa_hv* a, const vsa_hv* b, vsa_metric metric,
                          double* value_out) {
    if (vsa_status s = require(a && b && value_out, "null argument")) return s;
    return guarded([&] { *value_out = similarity(a->value, b->value, to_metric(metric)).value; });
}

vsa_status vsa_inject_noise(const vsa_hv* a, double p, uint64_t seed, vsa_hv** out) {
    if (vsa_status s = require(a && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{inject_noise(a->value, p, seed)}; });
}

vsa_status vsa_hv_save(const vsa_hv* hv, const char* path) {
    if (vsa_status s = require(hv && path, "null argument")) return s;
    return guarded([&] { save_hv_file(hv->value, path); });
}

vsa_status vsa_hv_load(const char* path, vsa_hv** out) {
    if (vsa_status s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{load_hv_file(path)}; });
}

vsa_status vsa_codebook_create(const char* name, uint64_t seed, uint32_t dim, vsa_repr repr,
                               vsa_codebook** out) {
    if (vsa_status s = require(name && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_codebook{Codebook(name, seed, dim, to_repr(repr))}; });
}

void vsa_codebook_free(vsa_codebook* cb) { delete cb; }

vsa_status vsa_codebook_add(vsa_codebook* cb, const char* symbol) {
    if (vsa_status s = require(cb && symbol, "null argument")) return s;
    return guarded([&] { cb->value.add(symbol); });
}

vsa_status vsa_codebook_get(const vsa_codebook* cb, const char* symbol, vsa_hv** out) {
    if (vsa_status s = require(cb && symbol && out, "null argument")) return s;
    return guarded([&] { *out = new vsa_hv{cb->value.get(symbol)}; });
}

size_t vsa_codebook_size(const vsa_codebook* cb) { return cb ? cb->value.size() : 0; }

vsa_status vsa_cleanup_query(const vsa_codebook* cb, const vsa_hv* noisy, vsa_metric metric,
                             double threshold, char* symbol_buf, size_t symbol_buf_len,
                             double* score_out, int* matched_out) {
    if (vsa_status s = require(cb && noisy && symbol_buf && symbol_buf_len > 0, "null argument"))
        return s;
    return guarded([&] {
        CleanupMemory cm(&cb->value, to_metric(metric), threshold);
        CleanupMemory::Result res = cm.query(noisy->value);
        std::snprintf(symbol_buf, symbol_buf_len, "%s", res.best_symbol.c_str());
        if (score_out) *score_out = res.score;
        if (matched_out) *matched_out = res.symbol.has_value() ? 1 : 0;
    });
}

vsa_status vsa_factorize(const vsa_hv* composite, const vsa_codebook* const* codebooks,
                         size_t codebook_count, size_t max_iters, int schedule, double noise_p,
                         uint64_t seed, char** json_out) {
    if (vsa_status s =
            require(composite && codebooks && codebook_count > 0 && json_out, "null argument"))
        return s;
    return guarded([&] {
        std::vector<const Codebook*> cbs;
        cbs.reserve(codebook_count);
        for (size_t i = 0; i < codebook_count; ++i) {
            if (!codebooks[i]) raise(ErrorCode::InvalidArgument, "null codebook");
            cbs.push_back(&codebooks[i]->value);
        }
        FactorizeResult res = factorize(
            composite->value, cbs, max_iters,
            schedule ? ResonatorSchedule::Sequential : ResonatorSchedule::Parallel, noise_p,
            seed);
        nlohmann::json j = {{"factors", res.factors},
                            {"iterations", res.iterations},
                            {"converged", res.converged},
                            {"recompose_similarity", res.recompose_similarity},
                            {"trusted", res.trusted}};
        std::string text = j.dump();
        *json_out = static_cast<char*>(std::malloc(text.size() + 1));
        if (!*json_out) raise(ErrorCode::Internal, "out of memory");
        std::memcpy(*json_out, text.c_str(), text.size() + 1);
    });
}

vsa_status vsa_run(const char* subcommand, const char* config_path, const char* overrides_json,
                   const char* out_dir, const char* format, int64_t seed_or_negative,
                   uint32_t jobs) {
    if (vsa_status s = require(subcommand, "null subcommand")) return s;
    return guarded([&] {
        RunOptions options;
        if (config_path) options.config_path = config_path;
        if (overrides_json) {
            options.overrides = nlohmann::json::parse(overrides_json, nullptr, false);
            if (options.overrides.is_discarded() || !options.overrides.is_object())
                raise(ErrorCode::ParseError, "overrides must be a JSON object");
        }
        if (out_dir) options.out_dir = out_dir;
        if (format) options.format = format;
        if (seed_or_negative >= 0) options.seed = static_cast<std::uint64_t>(seed_or_negative);
        if (jobs > 0) options.jobs = jobs;
        run_subcommand(subcommand, options);
    });
}

} // extern "C"
