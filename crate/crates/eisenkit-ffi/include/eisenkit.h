#ifndef EISENKIT_H
#define EISENKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes.
typedef enum EkStatus {
  EK_STATUS_OK = 0,
  EK_STATUS_NULL_POINTER = 1,
  EK_STATUS_INVALID_INPUT = 2,
  EK_STATUS_NUMERIC_ENVELOPE = 3,
  EK_STATUS_PANIC = 4,
} EkStatus;

// Opaque Dirichlet character.
typedef struct EkCharacter EkCharacter;

// Opaque Eisenstein series at a fixed spectral point.
typedef struct EkEisenstein EkEisenstein;

// A complex number.
typedef struct EkComplex {
  double re;
  double im;
} EkComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create the character with Conrey-style label `q:index`.
//
// # Safety
// `out` must be a valid pointer to writable storage for a handle.
enum EkStatus ek_character_new(uint64_t q, uint64_t index, struct EkCharacter **out);

// Parse a character from a label such as `"5:3"`.
//
// # Safety
// `label` must be a NUL-terminated string and `out` valid writable storage.
enum EkStatus ek_character_parse(const char *label, struct EkCharacter **out);

// Release a character handle. Null is ignored.
//
// # Safety
// `chi` must be null or a handle from this library not yet freed.
void ek_character_free(struct EkCharacter *chi);

// `χ(n)`, zero when `gcd(n, q) > 1`.
//
// # Safety
// `chi` must be a live handle and `out` valid writable storage.
enum EkStatus ek_character_eval(const struct EkCharacter *chi, int64_t n, struct EkComplex *out);

// Conductor of the character.
//
// # Safety
// `chi` must be a live handle and `out` valid writable storage.
enum EkStatus ek_character_conductor(const struct EkCharacter *chi, uint64_t *out);

// Label `q:index` of the character; free with [`ek_string_free`].
//
// # Safety
// `chi` must be a live handle and `out` valid writable storage.
enum EkStatus ek_character_label(const struct EkCharacter *chi, char **out);

// Gauss sum of a primitive character.
//
// # Safety
// `chi` must be a live handle and `out` valid writable storage.
enum EkStatus ek_gauss_sum(const struct EkCharacter *chi, struct EkComplex *out);

// `L(s, χ)`, or the completed `Λ(s, χ)` when `completed` is true.
//
// # Safety
// `chi` must be a live handle and `out` valid writable storage.
enum EkStatus ek_dirichlet_l(const struct EkCharacter *chi,
                             struct EkComplex s,
                             bool completed,
                             struct EkComplex *out);

// `K_ν(x)` for complex order and real `x > 0`.
//
// # Safety
// `out` must be valid writable storage.
enum EkStatus ek_bessel_k(struct EkComplex nu, double x, struct EkComplex *out);

// Eisenstein series for primitive `chi1`, `chi2` at spectral point `s`.
//
// # Safety
// `chi1` and `chi2` must be live handles and `out` valid writable storage.
enum EkStatus ek_eisenstein_new(const struct EkCharacter *chi1,
                                const struct EkCharacter *chi2,
                                struct EkComplex s,
                                struct EkEisenstein **out);

// Release an Eisenstein handle. Null is ignored.
//
// # Safety
// `e` must be null or a handle from this library not yet freed.
void ek_eisenstein_free(struct EkEisenstein *e);

// `E(x + iy)` with truncation error below `eps`.
//
// # Safety
// `e` must be a live handle and `out` valid writable storage.
enum EkStatus ek_eisenstein_evaluate(const struct EkEisenstein *e,
                                     double x,
                                     double y,
                                     double eps,
                                     struct EkComplex *out);

// Scattering constant `c(s)`.
//
// # Safety
// `e` must be a live handle and `out` valid writable storage.
enum EkStatus ek_eisenstein_scattering(const struct EkEisenstein *e, struct EkComplex *out);

// Functional-equation residual at `x + iy`.
//
// # Safety
// `e` must be a live handle and `out` valid writable storage.
enum EkStatus ek_eisenstein_fe_residual(const struct EkEisenstein *e,
                                        double x,
                                        double y,
                                        double *out);

// Message for the last failure on this thread, or null if the last call
// succeeded. Free with [`ek_string_free`].
char *ek_last_error_message(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void ek_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EISENKIT_H */
