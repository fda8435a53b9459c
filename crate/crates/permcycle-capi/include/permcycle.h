#ifndef PERMCYCLE_H
#define PERMCYCLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirroring the library's error set. `PC_OK` is zero.
 */
typedef enum PcStatus {
  PcOk = 0,
  PcErrNotPrime = 1,
  PcErrEvenCharacteristic = 2,
  PcErrReducibleModulus = 3,
  PcErrFieldMismatch = 4,
  PcErrZeroInverse = 5,
  PcErrZeroOrder = 6,
  PcErrZeroLog = 7,
  PcErrOrderNotDividing = 8,
  PcErrSyntax = 9,
  PcErrOddIndex = 10,
  PcErrEqualUnits = 11,
  PcErrUnitOutsideSubgroup = 12,
  PcErrAllUnitsEqual = 13,
  PcErrBadResidue = 14,
  PcErrIndexNotMultipleOf3 = 15,
  PcErrBadDivisibility = 16,
  PcErrOrderMismatch = 17,
  PcErrNotAPermutation = 18,
  PcErrNotCosetMultiplicative = 19,
  PcErrVerificationFailed = 20,
  PcErrBadElement = 21,
  PcErrBadParameter = 22,
  PcErrNullPointer = 100,
  PcErrInvalidUtf8 = 101,
} PcStatus;

/**
 * Opaque handle to a construction.
 */
typedef struct PcConstruction PcConstruction;

/**
 * Opaque handle to a finite field.
 */
typedef struct PcField PcField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the prime field F_p.
 */
enum PcStatus pc_field_new_prime(uint64_t p, struct PcField **out);

/**
 * Creates the extension field F_{p^k}. `modulus` may be NULL to select
 * the default modulus; otherwise it points to `modulus_len` ascending
 * coefficients (the leading 1 may be included or omitted).
 */
enum PcStatus pc_field_new_extension(uint64_t p,
                                     uint32_t k,
                                     const uint64_t *modulus,
                                     uintptr_t modulus_len,
                                     struct PcField **out);

/**
 * Creates F_q from its order by prime-power decomposition.
 */
enum PcStatus pc_field_from_order(uint64_t q, struct PcField **out);

void pc_field_free(struct PcField *field);

uint64_t pc_field_q(const struct PcField *field);

uint64_t pc_field_p(const struct PcField *field);

uint32_t pc_field_k(const struct PcField *field);

/**
 * Encoding of the canonical generator.
 */
uint64_t pc_field_generator(const struct PcField *field);

/**
 * Binomial a*x^{(q+1)/2} + b*x from units (u, v) of the order-m subgroup.
 */
enum PcStatus pc_construct_bin(const struct PcField *field,
                               uint64_t m,
                               uint64_t u,
                               uint64_t v,
                               struct PcConstruction **out);

/**
 * Trinomial from units (u, v, w).
 */
enum PcStatus pc_construct_tri(const struct PcField *field,
                               uint64_t m,
                               uint64_t u,
                               uint64_t v,
                               uint64_t w,
                               struct PcConstruction **out);

/**
 * r-term cyclotomic construction x*G(x^{(q-1)/r}) from `r` units.
 */
enum PcStatus pc_construct_cyclotomic(const struct PcField *field,
                                      uint64_t r,
                                      uint64_t m,
                                      const uint64_t *units,
                                      uintptr_t units_len,
                                      struct PcConstruction **out);

/**
 * Geometric-sum construction from units (u, v) of order exactly m.
 */
enum PcStatus pc_construct_geom_sum(const struct PcField *field,
                                    uint64_t m,
                                    uint64_t u,
                                    uint64_t v,
                                    struct PcConstruction **out);

void pc_construction_free(struct PcConstruction *c);

/**
 * Polynomial in text form; free with pc_string_free.
 */
char *pc_construction_poly(const struct PcConstruction *c);

/**
 * Compositional inverse polynomial in text form.
 */
char *pc_construction_inverse_poly(const struct PcConstruction *c);

/**
 * Predicted cycle type, e.g. "1+3^4".
 */
char *pc_construction_cycle_type(const struct PcConstruction *c);

/**
 * Full construction record as a JSON object.
 */
char *pc_construction_json(const struct PcConstruction *c);

/**
 * Runs the exhaustive oracle: bijection, predicted cycle type and (when
 * `check_inverse` is nonzero) inverse composition.
 */
enum PcStatus pc_construction_verify(const struct PcConstruction *c, int32_t check_inverse);

/**
 * Parses `poly_text` over the field and analyzes it. Writes 1 or 0 to
 * `out_is_permutation` and, when the map is a permutation, the cycle
 * type string to `out_cycle_type` (otherwise NULL).
 */
enum PcStatus pc_verify_poly(const struct PcField *field,
                             const char *poly_text,
                             int32_t *out_is_permutation,
                             char **out_cycle_type);

/**
 * Releases a string returned by this library.
 */
void pc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERMCYCLE_H */
