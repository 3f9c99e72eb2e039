/* Copyright 2026 the rnx authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the reaction network analysis library.
 *
 * Conventions:
 *   - Every fallible call returns rnx_status; RNX_OK is 0.
 *   - On failure, rnx_last_error() describes the problem for the calling
 *     thread and rnx_last_error_line() gives the 1-based input line for
 *     parse errors (0 otherwise).
 *   - Objects are opaque; each *_new/*_parse has a matching *_free.
 *     Handles are not thread-safe individually, but distinct handles may
 *     be used from distinct threads freely.
 *   - char** results are heap strings owned by the caller; release them
 *     with rnx_string_free.  const char* results are borrowed and live as
 *     long as the handle they came from.
 */

#ifndef RNX_H
#define RNX_H

#include <stdint.h>

#if defined(_WIN32)
#define RNX_API __declspec(dllexport)
#else
#define RNX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rnx_status {
  RNX_OK = 0,
  RNX_ERR_IO = 1,
  RNX_ERR_SYNTAX = 2,
  RNX_ERR_AUTOCATALYSIS = 3,
  RNX_ERR_DUPLICATE_LABEL = 4,
  RNX_ERR_EMPTY_REACTION = 5,
  RNX_ERR_CONSTRAINT_INFEASIBLE = 6,
  RNX_ERR_DIMENSION_MISMATCH = 7,
  RNX_ERR_TOO_LARGE = 8,
  RNX_ERR_COMBINATORIAL_BLOWUP = 9,
  RNX_ERR_DOMAIN_MISMATCH = 10,
  RNX_ERR_WITNESS_NOT_FOUND = 11,
  RNX_ERR_INVALID_ARGUMENT = 12,
  RNX_ERR_NOMEM = 13,
  RNX_ERR_INTERNAL = 14
} rnx_status;

typedef enum rnx_behavior {
  RNX_BEHAVIOR_GOOD = 0,
  RNX_BEHAVIOR_BAD = 1,
  RNX_BEHAVIOR_ZERO = 2
} rnx_behavior;

RNX_API const char* rnx_status_name(rnx_status status);
RNX_API const char* rnx_last_error(void);
RNX_API int rnx_last_error_line(void);
RNX_API void rnx_string_free(char* s);

/* ---- networks ------------------------------------------------------- */

typedef struct rnx_network rnx_network;

RNX_API rnx_status rnx_network_parse(const char* text, rnx_network** out);
RNX_API rnx_status rnx_network_parse_file(const char* path, rnx_network** out);
RNX_API void rnx_network_free(rnx_network* net);

RNX_API int32_t rnx_network_metabolite_count(const rnx_network* net);
RNX_API int32_t rnx_network_reaction_count(const rnx_network* net);
RNX_API int32_t rnx_network_feed_count(const rnx_network* net);
RNX_API int32_t rnx_network_exit_count(const rnx_network* net);
/* 1 when every coefficient is 1, else 0. */
RNX_API int rnx_network_unit_coefficients(const rnx_network* net);
RNX_API const char* rnx_network_metabolite_label(const rnx_network* net,
                                                 int32_t metabolite);
RNX_API const char* rnx_network_reaction_label(const rnx_network* net,
                                               int32_t reaction);
/* -1 when the label is unknown. */
RNX_API int32_t rnx_network_metabolite_index(const rnx_network* net,
                                             const char* label);
RNX_API int32_t rnx_network_reaction_index(const rnx_network* net,
                                           const char* label);
/* Stoichiometric entry S[metabolite][reaction]; 0 out of range. */
RNX_API int64_t rnx_network_stoich(const rnx_network* net, int32_t metabolite,
                                   int32_t reaction);
RNX_API rnx_status rnx_network_serialize(const rnx_network* net, char** out);
RNX_API rnx_status rnx_network_to_json(const rnx_network* net, char** out);

/* ---- selection constraints ------------------------------------------ */

typedef struct rnx_constraint rnx_constraint;

RNX_API rnx_status rnx_constraint_new(rnx_constraint** out);
RNX_API void rnx_constraint_free(rnx_constraint* c);
/* Labels are resolved against the network at iterator/count time. */
RNX_API rnx_status rnx_constraint_force(rnx_constraint* c,
                                        const char* metabolite,
                                        const char* reaction);
RNX_API rnx_status rnx_constraint_forbid(rnx_constraint* c,
                                         const char* metabolite,
                                         const char* reaction);

/* ---- child selections ----------------------------------------------- */

typedef struct rnx_selection rnx_selection;
typedef struct rnx_selection_iter rnx_selection_iter;

/* constraint may be NULL.  Selections stream in lexicographic order of the
 * assignment vector. */
RNX_API rnx_status rnx_selection_iter_new(const rnx_network* net,
                                          const rnx_constraint* constraint,
                                          rnx_selection_iter** out);
/* Slice `partition` of `partitions` disjoint slices covering the same
 * stream, for one iterator per worker thread. */
RNX_API rnx_status rnx_selection_iter_new_partition(
    const rnx_network* net, const rnx_constraint* constraint,
    int32_t partition, int32_t partitions, rnx_selection_iter** out);
/* *out becomes NULL when the stream is exhausted. */
RNX_API rnx_status rnx_selection_iter_next(rnx_selection_iter* it,
                                           rnx_selection** out);
RNX_API void rnx_selection_iter_free(rnx_selection_iter* it);

RNX_API void rnx_selection_free(rnx_selection* sel);
/* Reaction selected for the metabolite, -1 out of range. */
RNX_API int32_t rnx_selection_child(const rnx_selection* sel,
                                    int32_t metabolite);
RNX_API rnx_status rnx_selection_distance(const rnx_selection* a,
                                          const rnx_selection* b,
                                          int32_t* out);
RNX_API rnx_status rnx_selection_to_json(const rnx_network* net,
                                         const rnx_selection* sel, char** out);

/* Exact count of the selections the constraint admits, as a decimal
 * string. */
RNX_API rnx_status rnx_count_selections(const rnx_network* net,
                                        const rnx_constraint* constraint,
                                        char** out);

/* ---- classification ------------------------------------------------- */

typedef struct rnx_classification rnx_classification;

/* completion_bound limits cycle enumeration and completion counting;
 * 0 picks the default of 10^7. */
RNX_API rnx_status rnx_classify(const rnx_network* net,
                                const rnx_selection* sel,
                                uint64_t completion_bound,
                                rnx_classification** out);
RNX_API void rnx_classification_free(rnx_classification* cls);

RNX_API rnx_behavior rnx_classification_behavior(const rnx_classification* cls);
/* det(S^J) as a decimal string. */
RNX_API rnx_status rnx_classification_det(const rnx_classification* cls,
                                          char** out);
/* 1 when good/bad completion counts are available.  They are absent for
 * non-unit coefficients or when the bound was exceeded (see
 * rnx_classification_blowup). */
RNX_API int rnx_classification_has_counts(const rnx_classification* cls);
RNX_API uint64_t rnx_classification_good_count(const rnx_classification* cls);
RNX_API uint64_t rnx_classification_bad_count(const rnx_classification* cls);
RNX_API int rnx_classification_blowup(const rnx_classification* cls);
/* det * (-1)^M == 1 + G - B; 1 = holds, 0 = violated, -1 = counts absent. */
RNX_API int rnx_classification_identity(const rnx_classification* cls);
/* Completion cycles; count is -1 when cycles are unavailable.  A cycle of
 * half-length l has 2*l vertices, alternating metabolite and reaction
 * indices starting at the smallest metabolite. */
RNX_API int32_t rnx_classification_cycle_count(const rnx_classification* cls);
RNX_API int32_t rnx_classification_cycle_half_length(
    const rnx_classification* cls, int32_t cycle);
RNX_API rnx_status rnx_classification_cycle_vertices(
    const rnx_classification* cls, int32_t cycle, int32_t* buffer);
/* 1 = bad, 0 = good, -1 out of range. */
RNX_API int rnx_classification_cycle_bad(const rnx_classification* cls,
                                         int32_t cycle);
RNX_API rnx_status rnx_classification_to_json(const rnx_network* net,
                                              const rnx_selection* sel,
                                              const rnx_classification* cls,
                                              char** out);

/* ---- bifurcation pairs ---------------------------------------------- */

typedef struct rnx_pair rnx_pair;
typedef struct rnx_pair_iter rnx_pair_iter;

/* budget caps the enumerated selections (0 = unlimited); neighbours of an
 * in-budget selection are probed even when they fall outside it. */
RNX_API rnx_status rnx_pair_iter_new(const rnx_network* net,
                                     const rnx_constraint* constraint,
                                     uint64_t budget, rnx_pair_iter** out);
RNX_API rnx_status rnx_pair_iter_next(rnx_pair_iter* it, rnx_pair** out);
RNX_API void rnx_pair_iter_free(rnx_pair_iter* it);
RNX_API void rnx_pair_free(rnx_pair* pair);

RNX_API int32_t rnx_pair_pivot(const rnx_pair* pair);
RNX_API int32_t rnx_pair_good_child(const rnx_pair* pair);
RNX_API int32_t rnx_pair_bad_child(const rnx_pair* pair);
/* |det| of the good and bad minors, decimal strings. */
RNX_API rnx_status rnx_pair_coefficient_a(const rnx_pair* pair, char** out);
RNX_API rnx_status rnx_pair_coefficient_b(const rnx_pair* pair, char** out);
RNX_API rnx_status rnx_pair_good_selection(const rnx_pair* pair,
                                           rnx_selection** out);
RNX_API rnx_status rnx_pair_bad_selection(const rnx_pair* pair,
                                          rnx_selection** out);
RNX_API rnx_status rnx_pair_xi(const rnx_network* net, const rnx_pair* pair,
                               char** out);
RNX_API rnx_status rnx_pair_to_json(const rnx_network* net,
                                    const rnx_pair* pair, char** out);

/* ---- sign-change witnesses ------------------------------------------ */

typedef struct rnx_witness rnx_witness;

RNX_API rnx_status rnx_witness_construct(const rnx_network* net,
                                         const rnx_pair* pair, double epsilon,
                                         rnx_witness** out);
RNX_API void rnx_witness_free(rnx_witness* w);

RNX_API double rnx_witness_det_plus(const rnx_witness* w);
RNX_API double rnx_witness_det_minus(const rnx_witness* w);
/* Epsilon that succeeded, after any retries. */
RNX_API double rnx_witness_epsilon(const rnx_witness* w);
/* Rate derivative on the xi = +1 (side > 0) or xi = -1 side. */
RNX_API double rnx_witness_rate(const rnx_witness* w, int side,
                                int32_t reaction, int32_t metabolite);
RNX_API rnx_status rnx_witness_to_json(const rnx_network* net,
                                       const rnx_witness* w, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RNX_H */
