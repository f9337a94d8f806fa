#ifndef SCHURLAT_H
#define SCHURLAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SCHURLAT_API __declspec(dllexport)
#else
#define SCHURLAT_API __attribute__((visibility("default")))
#endif

/* Status codes. The first four double as process exit codes. */
typedef enum schurlat_status {
  SCHURLAT_OK = 0,
  SCHURLAT_INVALID_INPUT = 2,
  SCHURLAT_CAP_EXCEEDED = 3,
  SCHURLAT_INVARIANT_VIOLATION = 4,
  SCHURLAT_INTERNAL_ERROR = 5
} schurlat_status;

/* Opaque handles. */
typedef struct schurlat_context schurlat_context;
typedef struct schurlat_module schurlat_module;

SCHURLAT_API const char* schurlat_version(void);

SCHURLAT_API schurlat_status schurlat_context_create(schurlat_context** out);
SCHURLAT_API void schurlat_context_destroy(schurlat_context* ctx);

/* Message of the most recent failure on this context ("" if none). The
   pointer stays valid until the next call on the context. */
SCHURLAT_API const char* schurlat_last_error(const schurlat_context* ctx);

/* Runs a command ("hooks", "dim", "rho", "order", "fix", "scan", "sample",
   "irreducible") on a JSON request. On success *response receives a JSON
   document to be released with schurlat_string_free. */
SCHURLAT_API schurlat_status schurlat_run(schurlat_context* ctx, const char* command, const char* request_json,
                                          char** response);

/* Progress messages of long commands (scan) are passed to the callback. */
typedef void (*schurlat_progress_fn)(const char* message, void* user);
SCHURLAT_API void schurlat_set_progress(schurlat_context* ctx, schurlat_progress_fn fn, void* user);

SCHURLAT_API void schurlat_string_free(char* s);

/* Partition helpers; parts are weakly decreasing and positive. */
SCHURLAT_API schurlat_status schurlat_is_core(schurlat_context* ctx, const int* parts, size_t count, unsigned modulus,
                                              int* out);
SCHURLAT_API schurlat_status schurlat_dimension(schurlat_context* ctx, unsigned n, const int* parts, size_t count,
                                                uint64_t* out);

/* Schur module S_lambda(K^n); model is "weyl" or "quotient". */
SCHURLAT_API schurlat_status schurlat_module_create(schurlat_context* ctx, unsigned n, const int* parts, size_t count,
                                                    const char* model, schurlat_module** out);
SCHURLAT_API size_t schurlat_module_dim(const schurlat_module* m);
/* Writes the letters of basis tableau `index` in row-reading order into
   letters (capacity entries); returns the number of boxes. */
SCHURLAT_API size_t schurlat_module_basis_word(const schurlat_module* m, size_t index, int* letters, size_t capacity);
SCHURLAT_API void schurlat_module_destroy(schurlat_module* m);

#ifdef __cplusplus
}
#endif

#endif
