#ifndef SOFTDITO_H
#define SOFTDITO_H

/* Generated in cbindgen style from crates/ffi/src/lib.rs; keep in sync. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SD_STATUS_NULL_ARGUMENT = -1,
  /**
   * A string argument was not valid UTF-8.
   */
  SD_STATUS_INVALID_UTF8 = -2,
  /**
   * The document text has syntax or resolution errors.
   */
  SD_STATUS_PARSE = -3,
  /**
   * A name does not resolve to a declaration of the needed kind.
   */
  SD_STATUS_NOT_FOUND = -4,
  /**
   * The arguments are well-formed but the operation is undefined for them.
   */
  SD_STATUS_INVALID = -5,
  /**
   * A declared family is not closed.
   */
  SD_STATUS_NOT_CLOSED = -6,
  /**
   * The library panicked; the handle may be left unchanged.
   */
  SD_STATUS_PANIC = -99,
} SdStatus;

/**
 * Parsed specification document.
 */
typedef struct SdDocument SdDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *sd_version(void);

/**
 * Message for the last failing call on this thread, or null. Valid until
 * the next call on this thread.
 */
const char *sd_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void sd_string_free(char *s);

/**
 * Parses `text` into a new document stored in `*out`. On a parse failure
 * every error, one per line, is in `sd_last_error`.
 */
SdStatus sd_document_parse(const char *text, SdDocument **out);

/**
 * Releases a document. Null is ignored.
 */
void sd_document_free(SdDocument *doc);

/**
 * Canonical text of the document; parsing it yields an equal document.
 */
SdStatus sd_document_to_text(const SdDocument *doc, char **out);

/**
 * `*ok` is true iff every declared topology and cotopology is closed.
 */
SdStatus sd_document_check(const SdDocument *doc, bool *ok);

/**
 * Interior of set `set` in topology or ditopology `space`, formatted as
 * `{e1: {x}, ...}`.
 */
SdStatus sd_interior(const SdDocument *doc, const char *space, const char *set, char **out);

/**
 * Closure of set `set` in cotopology or ditopology `space`.
 */
SdStatus sd_closure(const SdDocument *doc, const char *space, const char *set, char **out);

/**
 * Checks `axiom` (T0, T1, T2, regular, T3, normal, T4) on `space`. A null
 * `domain` ranges over every parameter set; otherwise it lists one, e.g.
 * `"e1,e2"`. When the axiom fails and `witness` is not null, `*witness`
 * receives a description of the failure; otherwise it is set to null.
 */
SdStatus sd_axiom(const SdDocument *doc,
                  const char *space,
                  const char *axiom,
                  const char *domain,
                  bool *holds,
                  char **witness);

/**
 * Continuity of `map` from `source` to `target`, two spaces of one kind:
 * τ-continuity for topologies, κ-continuity for cotopologies and both for
 * ditopologies.
 */
SdStatus sd_continuity(const SdDocument *doc,
                       const char *map,
                       const char *source,
                       const char *target,
                       bool *continuous);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOFTDITO_H */
