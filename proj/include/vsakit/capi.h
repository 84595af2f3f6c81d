/*
 * C API for the vsakit shared library.
 *
 * All objects are opaque handles created and destroyed through these
 * functions. Every fallible call returns a vsa_status; on failure the
 * thread-local message from vsa_last_error() describes what went wrong.
 * Output handles are written only on VSA_OK.
 */
#ifndef VSAKIT_CAPI_H
#define VSAKIT_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VSA_API __declspec(dllexport)
#else
#define VSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vsa_status {
    VSA_OK = 0,
    VSA_ERR_INVALID_ARGUMENT = 1,
    VSA_ERR_SHAPE_MISMATCH = 2,
    VSA_ERR_EMPTY_INPUT = 3,
    VSA_ERR_MISSING_ITEM = 4,
    VSA_ERR_MODEL_STATE = 5,
    VSA_ERR_MAPPING = 6,
    VSA_ERR_INCOMPLETE_TABLE = 7,
    VSA_ERR_UNSUPPORTED_NODE = 8,
    VSA_ERR_IO = 9,
    VSA_ERR_PARSE = 10,
    VSA_ERR_INTERNAL = 11
} vsa_status;

typedef enum vsa_repr {
    VSA_REPR_BINARY = 0,
    VSA_REPR_BIPOLAR = 1,
    VSA_REPR_INT_ACCUM = 2
} vsa_repr;

typedef enum vsa_metric {
    VSA_METRIC_NORMALIZED_HAMMING = 0,
    VSA_METRIC_COSINE = 1,
    VSA_METRIC_DOT = 2
} vsa_metric;

typedef struct vsa_hv vsa_hv;
typedef struct vsa_codebook vsa_codebook;

/* Thread-local message for the most recent failure on this thread. */
VSA_API const char* vsa_last_error(void);
VSA_API const char* vsa_version(void);

/* Frees strings returned through char** outputs. */
VSA_API void vsa_string_free(char* s);

/* --- hypervectors ------------------------------------------------------- */

VSA_API vsa_status vsa_hv_random(const char* codebook_name, const char* symbol, uint64_t seed,
                                 uint32_t dim, vsa_repr repr, vsa_hv** out);
VSA_API vsa_status vsa_hv_from_bits(const char* bits, vsa_repr repr, vsa_hv** out);
VSA_API vsa_status vsa_hv_clone(const vsa_hv* hv, vsa_hv** out);
VSA_API void vsa_hv_free(vsa_hv* hv);

VSA_API uint32_t vsa_hv_dim(const vsa_hv* hv);
VSA_API vsa_repr vsa_hv_repr(const vsa_hv* hv);
/* Element in the vector's own domain: {0,1}, {-1,+1} or the accumulator. */
VSA_API int32_t vsa_hv_element(const vsa_hv* hv, uint32_t index);
VSA_API int vsa_hv_equal(const vsa_hv* a, const vsa_hv* b);

VSA_API vsa_status vsa_bind(const vsa_hv* a, const vsa_hv* b, vsa_hv** out);
VSA_API vsa_status vsa_unbind(const vsa_hv* x, const vsa_hv* b, vsa_hv** out);
/* Either output may be NULL when only one half of the result is needed. */
VSA_API vsa_status vsa_bundle(const vsa_hv* const* inputs, size_t count, uint64_t tie_seed,
                              vsa_hv** accumulator_out, vsa_hv** binarized_out);
VSA_API vsa_status vsa_permute(const vsa_hv* a, int64_t k, vsa_hv** out);
VSA_API vsa_status vsa_similarity(const vsa_hv* a, const vsa_hv* b, vsa_metric metric,
                                  double* value_out);
VSA_API vsa_status vsa_inject_noise(const vsa_hv* a, double p, uint64_t seed, vsa_hv** out);

/* Binary container round-trip. */
VSA_API vsa_status vsa_hv_save(const vsa_hv* hv, const char* path);
VSA_API vsa_status vsa_hv_load(const char* path, vsa_hv** out);

/* --- codebooks (item memories) ------------------------------------------ */

VSA_API vsa_status vsa_codebook_create(const char* name, uint64_t seed, uint32_t dim,
                                       vsa_repr repr, vsa_codebook** out);
VSA_API void vsa_codebook_free(vsa_codebook* cb);
VSA_API vsa_status vsa_codebook_add(vsa_codebook* cb, const char* symbol);
VSA_API vsa_status vsa_codebook_get(const vsa_codebook* cb, const char* symbol, vsa_hv** out);
VSA_API size_t vsa_codebook_size(const vsa_codebook* cb);

/* Nearest stored item; *matched_out is 0 when the score sits below the
 * threshold. symbol_buf receives the best symbol, NUL terminated. */
VSA_API vsa_status vsa_cleanup_query(const vsa_codebook* cb, const vsa_hv* noisy,
                                     vsa_metric metric, double threshold, char* symbol_buf,
                                     size_t symbol_buf_len, double* score_out, int* matched_out);

/* --- resonator factorization --------------------------------------------- */

/* Disentangles the composite against the codebooks. schedule: 0 parallel,
 * 1 sequential. Returns a JSON record {factors, iterations, converged,
 * recompose_similarity, trusted} through json_out (free with
 * vsa_string_free). */
VSA_API vsa_status vsa_factorize(const vsa_hv* composite, const vsa_codebook* const* codebooks,
                                 size_t codebook_count, size_t max_iters, int schedule,
                                 double noise_p, uint64_t seed, char** json_out);

/* --- experiment runner ----------------------------------------------------- */

/* Runs one CLI subcommand. config_path and overrides_json may be NULL;
 * out_dir/format override the config when non-NULL; seed_or_negative < 0
 * leaves the configured seed untouched. */
VSA_API vsa_status vsa_run(const char* subcommand, const char* config_path,
                           const char* overrides_json, const char* out_dir, const char* format,
                           int64_t seed_or_negative, uint32_t jobs);

#ifdef __cplusplus
}
#endif

#endif /* VSAKIT_CAPI_H */
