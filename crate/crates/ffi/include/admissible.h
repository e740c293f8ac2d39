#ifndef ADMISSIBLE_H
#define ADMISSIBLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stdint.h>

typedef enum AdmMode {
  // Rationality and common cautious belief of rationality.
  ADM_MODE_RCBR = 0,
  // Rationality and common certain belief, inside transparency of cautiousness.
  ADM_MODE_RHAT = 1,
} AdmMode;

typedef enum AdmNotion {
  ADM_NOTION_CAUTIOUS = 0,
  ADM_NOTION_WEAK = 1,
  ADM_NOTION_CERTAIN = 2,
  ADM_NOTION_WEAK_ASSUMPTION = 3,
  ADM_NOTION_FULL = 4,
} AdmNotion;

typedef enum AdmStatus {
  ADM_STATUS_OK = 0,
  // Malformed document or argument.
  ADM_STATUS_INVALID = 1,
  // Well-formed input outside the operation's domain.
  ADM_STATUS_PRECONDITION = 2,
  // A computed result failed its own check.
  ADM_STATUS_INTERNAL = 3,
  ADM_STATUS_IO = 4,
  ADM_STATUS_NULL_ARGUMENT = 5,
  // A Rust panic was caught at the boundary.
  ADM_STATUS_PANIC = 6,
} AdmStatus;

typedef struct AdmGame AdmGame;

typedef struct AdmLps AdmLps;

typedef struct AdmStructure AdmStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into this library on the same thread.
const char *adm_last_error(void);

// # Safety
// `s` must come from this library and not have been freed.
void adm_string_free(char *s);

// Library version, static storage.
const char *adm_version(void);

// Parses a game document.
//
// # Safety
// `json` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_game_from_json(const char *json, struct AdmGame **out);

// # Safety
// `path` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_game_load(const char *path, struct AdmGame **out);

// # Safety
// `game` comes from this library (or is NULL) and is not used afterwards.
void adm_game_free(struct AdmGame *game);

// # Safety
// `game` is a live handle; `out` is writable.
enum AdmStatus adm_game_num_strategies(const struct AdmGame *game,
                                       uintptr_t player,
                                       uintptr_t *out);

// Iterated admissibility rounds, limit and elimination witnesses.
//
// # Safety
// `game` is a live handle; `out` is writable.
enum AdmStatus adm_game_ia(const struct AdmGame *game, char **out);

// All self-admissible sets. `force` lifts the size guard.
//
// # Safety
// `game` is a live handle; `out` is writable.
enum AdmStatus adm_game_sas_enumerate(const struct AdmGame *game, bool force, char **out);

// Checks a set written like `a=u;b=l,r`.
//
// # Safety
// `game` is a live handle; `set` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_game_sas_check(const struct AdmGame *game, const char *set, char **out);

// Lexicographic rationalizability rounds with witness LPS's.
//
// # Safety
// `game` is a live handle; `out` is writable.
enum AdmStatus adm_game_stahl(const struct AdmGame *game, char **out);

// Parses a structure document; the game must be inline.
//
// # Safety
// `json` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_structure_from_json(const char *json, struct AdmStructure **out);

// Loads a structure file; a game given as a path is resolved next to it.
//
// # Safety
// `path` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_structure_load(const char *path, struct AdmStructure **out);

// The structure whose rounds of R^m project onto the admissibility rounds.
//
// # Safety
// `game` is a live handle; `out` is writable.
enum AdmStatus adm_structure_build_lemma1(const struct AdmGame *game, struct AdmStructure **out);

// A structure realizing the self-admissible set `set` (`a=u;b=l,r`).
//
// # Safety
// `game` is a live handle; `set` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_structure_build_sas(const struct AdmGame *game,
                                       const char *set,
                                       struct AdmStructure **out);

// # Safety
// `ts` is a live handle; `out` is writable.
enum AdmStatus adm_structure_to_json(const struct AdmStructure *ts, char **out);

// Event hierarchy to its fixpoint.
//
// # Safety
// `ts` is a live handle; `out` is writable.
enum AdmStatus adm_structure_iterate(const struct AdmStructure *ts, enum AdmMode mode, char **out);

// # Safety
// `ts` comes from this library (or is NULL) and is not used afterwards.
void adm_structure_free(struct AdmStructure *ts);

// Parses `{"space": [[s, t], ...], "levels": [[...], ...]}`.
//
// # Safety
// `json` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_lps_from_json(const char *json, struct AdmLps **out);

// Evaluates a belief notion on an event written as `s1|t;s2` (a bare
// strategy stands for all its atoms).
//
// # Safety
// `lps` is a live handle; `event` is a nul-terminated string; `out` is writable.
enum AdmStatus adm_lps_check(const struct AdmLps *lps,
                             const char *event,
                             enum AdmNotion notion,
                             char **out);

// # Safety
// `lps` comes from this library (or is NULL) and is not used afterwards.
void adm_lps_free(struct AdmLps *lps);

// Re-runs the bundled worked instances. Succeeds even when some fail; the
// per-item status is in the JSON.
//
// # Safety
// `out` is writable.
enum AdmStatus adm_verify(uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ADMISSIBLE_H */
