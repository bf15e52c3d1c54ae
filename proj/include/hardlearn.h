/* hardlearn C API: opaque handles plus error codes over the C++ core.
 *
 * Conventions:
 *   - Functions returning int give HL_OK (0) on success; on failure they
 *     return an error code and hl_last_error() describes the problem
 *     (thread-local).
 *   - Functions returning a pointer give NULL on failure.
 *   - char* results are owned by the caller and released with
 *     hl_string_free(); handles are released with their *_free function.
 *   - Randomness is named by a (master_seed, stream) pair; experiments
 *     derive their own sub-streams deterministically.
 *   - *_run functions return a full result record as canonical JSON
 *     (sorted keys, 17-significant-digit floats): re-running with the same
 *     inputs reproduces the "metrics" object byte for byte.
 */
#ifndef HARDLEARN_H
#define HARDLEARN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HL_API __declspec(dllexport)
#else
#define HL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  HL_OK = 0,
  HL_ERR_DOMAIN = 1,
  HL_ERR_USAGE = 2,
  HL_ERR_IO = 3,
};

typedef struct hl_ring_elem hl_ring_elem;
typedef struct hl_prf_key hl_prf_key;
typedef struct hl_truth_table hl_truth_table;
typedef struct hl_pke_keypair hl_pke_keypair;

HL_API const char* hl_version(void);
HL_API const char* hl_last_error(void);
HL_API void hl_string_free(char* s);

/* Runs the built-in ring/fourier invariant sweep; HL_OK when clean. */
HL_API int hl_selftest(void);

/* Resolves an experiment configuration: key=value file (optional), then a
 * named preset filling unset keys, then explicit "key=value" overrides
 * which win over both. Returns JSON {"values": {...}, "warning": "..."}.
 * Presets: desk-prf, desk-pke, paper-asymptotic. */
HL_API char* hl_config_resolve(const char* config_path, const char* preset,
                               const char* const* overrides, size_t n_overrides);

/* ---- ring ---------------------------------------------------------- */

HL_API hl_ring_elem* hl_ring_elem_uniform(uint32_t d, uint64_t q, uint64_t master_seed,
                                          uint64_t stream);
HL_API hl_ring_elem* hl_ring_elem_from_coeffs(uint32_t d, uint64_t q, const uint64_t* coeffs,
                                              size_t n);
HL_API hl_ring_elem* hl_ring_elem_load(const char* path);
HL_API int hl_ring_elem_save(const hl_ring_elem* e, const char* path);
HL_API void hl_ring_elem_free(hl_ring_elem* e);

HL_API int hl_ring_elem_dim(const hl_ring_elem* e, uint32_t* d_out);
HL_API int hl_ring_elem_modulus(const hl_ring_elem* e, uint64_t* q_out);
HL_API int hl_ring_elem_coeffs(const hl_ring_elem* e, uint64_t* out, size_t n);

HL_API hl_ring_elem* hl_ring_add(const hl_ring_elem* a, const hl_ring_elem* b);
HL_API hl_ring_elem* hl_ring_sub(const hl_ring_elem* a, const hl_ring_elem* b);
HL_API hl_ring_elem* hl_ring_mul(const hl_ring_elem* a, const hl_ring_elem* b);
HL_API hl_ring_elem* hl_ring_round(const hl_ring_elem* a, uint64_t p);
HL_API int hl_ring_msb_first_coeff(const hl_ring_elem* a);

/* ---- sample batches -------------------------------------------------- */

/* type: "lwe" | "rlwe" | "rlwr"; arm: "planted" | "uniform". Writes the
 * batch file streamed one sample at a time. */
HL_API int hl_gen_batch_file(const char* type, uint32_t d, uint64_t q, uint64_t p, uint64_t m,
                             double sigma, const char* arm, uint64_t master_seed,
                             uint64_t stream, const char* path);

/* ---- PRF ------------------------------------------------------------- */

/* secret_dist: "uniform" | "gaussian" (sigma applies to gaussian). */
HL_API hl_prf_key* hl_prf_keygen(uint32_t d, uint64_t q, uint64_t p, uint32_t k,
                                 const char* secret_dist, double sigma, uint64_t master_seed,
                                 uint64_t stream);
HL_API hl_prf_key* hl_prf_key_load(const char* path);
HL_API int hl_prf_key_save(const hl_prf_key* key, const char* path);
HL_API void hl_prf_key_free(hl_prf_key* key);

HL_API int hl_prf_eval_bit(const hl_prf_key* key, uint64_t x);
HL_API hl_ring_elem* hl_prf_eval_ring(const hl_prf_key* key, uint64_t x);

HL_API hl_truth_table* hl_prf_truth_table(const hl_prf_key* key);
HL_API hl_truth_table* hl_truth_table_load(const char* path);
HL_API int hl_truth_table_save(const hl_truth_table* t, const char* path);
HL_API int hl_truth_table_bit(const hl_truth_table* t, uint64_t x);
HL_API int hl_truth_table_k(const hl_truth_table* t);
HL_API void hl_truth_table_free(hl_truth_table* t);

/* Advisory secure-regime report for the one-bit PRF parameters (JSON). */
HL_API char* hl_prf_regime_report(uint32_t d, uint64_t q, uint64_t p, uint32_t k,
                                  const char* secret_dist, double sigma);

/* ---- PKE -------------------------------------------------------------- */

HL_API hl_pke_keypair* hl_pke_keygen(uint32_t d, uint64_t q, uint32_t m, double sigma,
                                     uint64_t master_seed, uint64_t stream);
HL_API int hl_pke_save_keys(const hl_pke_keypair* kp, const char* priv_path,
                            const char* pub_path);
HL_API hl_pke_keypair* hl_pke_load_public(const char* pub_path);
HL_API hl_pke_keypair* hl_pke_load_private(const char* priv_path);
HL_API void hl_pke_keypair_free(hl_pke_keypair* kp);

/* Writes the ciphertext CSV line to ct_path. */
HL_API int hl_pke_encrypt_file(const hl_pke_keypair* pub, int bit, uint64_t master_seed,
                               uint64_t stream, const char* ct_path);
/* rule: "nearest" | "literal". Returns the bit (0/1) or negative error. */
HL_API int hl_pke_decrypt_file(const hl_pke_keypair* priv, const char* ct_path,
                               const char* rule);

/* Monte-Carlo decryption-error estimate; returns a result record (JSON). */
HL_API char* hl_pke_error_rate_run(uint32_t d, uint64_t q, uint32_t m, double sigma,
                                   uint64_t trials, uint64_t master_seed);

/* ---- fourier ----------------------------------------------------------- */

/* Reads a truth-table file, writes the spectrum dump "S,coefficient"
 * sorted by S, and returns a result record (JSON) with Parseval data. */
HL_API char* hl_fourier_wht_run(const char* table_path, const char* spectrum_csv_path);

/* Draws n Fourier samples from the table's spectrum; result record lists
 * the sampled sets. */
HL_API char* hl_fourier_sample_run(const char* table_path, uint64_t n, uint64_t master_seed);

/* ---- learners ----------------------------------------------------------- */

/* algo: "gf2-linear" | "low-degree-1" | "junta-4" | "memorizing".
 * Returns a result record with the learner report (hypothesis included). */
HL_API char* hl_learn_run(const char* algo, const char* target_table_path, uint64_t budget,
                          uint64_t master_seed);

/* ---- reductions ---------------------------------------------------------- */

HL_API int hl_reduce_bound(uint32_t k, uint64_t queries, double* out);

/* family: "prf-desk" | "linear"; learner as in hl_learn_run plus "cheat";
 * ci: "wald" | "clopper-pearson". */
HL_API char* hl_reduce_prf_dist_run(const char* learner, const char* family, uint32_t k,
                                    uint64_t budget, uint64_t trials, uint64_t master_seed,
                                    const char* ci);

/* learner: "cheat-decryptor" | "coin" | "memorizing". */
HL_API char* hl_reduce_pke_adv_run(const char* learner, uint32_t d, uint64_t q, uint32_t m,
                                   double sigma, uint64_t training_size, uint64_t trials,
                                   uint64_t master_seed);

HL_API char* hl_reduce_params_tc0_run(double n, double alpha, double tau, double delta);
HL_API char* hl_reduce_params_ac0_run(double n, double c, double eta, double a);
HL_API char* hl_reduce_bound_run(uint32_t k, uint64_t queries);

HL_API int hl_example_state_gap(double t, double L, double* out);

#ifdef __cplusplus
}
#endif

#endif /* HARDLEARN_H */
