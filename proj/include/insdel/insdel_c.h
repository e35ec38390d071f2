#ifndef INSDEL_C_H
#define INSDEL_C_H

/* C API for the insdel code analysis library.
 *
 * Every run function writes a JSON report into *report_out (heap-allocated,
 * release with insdel_string_free) and returns a status code:
 *   0  success / all claims verified
 *   1  a claim failed (the report carries the details)
 *   2  input error
 *   3  budget exceeded
 * Budget arguments of 0 select the built-in defaults.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define INSDEL_OK 0
#define INSDEL_ERR_CLAIM 1
#define INSDEL_ERR_INPUT 2
#define INSDEL_ERR_BUDGET 3

typedef int insdel_status;

/* Opaque handle to a loaded linear code. */
typedef struct insdel_code insdel_code;

/* Loads a code file (JSON text: field block + generator rows). */
insdel_status insdel_code_load_json(const char* json_text, insdel_code** code_out,
                                    char** error_out);

/* Builds a code from a named construction family ("palindrome", "odd",
 * "rs-example"). a_tokens is a space-separated element token list for the
 * odd family; pass NULL or "" for the default parameter choice. */
insdel_status insdel_code_construct(const char* family, uint32_t p, uint32_t e, size_t k,
                                    const char* a_tokens, insdel_code** code_out,
                                    char** error_out);

void insdel_code_free(insdel_code* code);

/* Basic shape accessors. */
size_t insdel_code_length(const insdel_code* code);
size_t insdel_code_dimension(const insdel_code* code);

/* Serializes the code back to code-file JSON. */
insdel_status insdel_code_emit_json(const insdel_code* code, char** json_out);

/* Command runners; each produces the full JSON report. */
insdel_status insdel_run_bounds(const insdel_code* code, uint64_t enum_budget,
                                char** report_out);
insdel_status insdel_run_distance(const insdel_code* code, uint64_t pair_budget,
                                  uint64_t enum_budget, char** report_out);
insdel_status insdel_run_certify(const insdel_code* code, char** report_out);
insdel_status insdel_run_strict_direct(const insdel_code* code, uint64_t enum_budget,
                                       char** report_out);
insdel_status insdel_run_search(size_t n, size_t k, const char* bound,
                                const char* ones_filter, uint64_t enum_budget,
                                uint64_t pair_budget, char** report_out);
insdel_status insdel_run_verify_example(const char* example_id, uint64_t pair_budget,
                                        uint64_t enum_budget, char** report_out);
insdel_status insdel_run_construct(const char* family, uint32_t p, uint32_t e, size_t k,
                                   const char* a_tokens, char** report_out);

/* Extracts the human-readable summary line from a report produced above. */
char* insdel_report_summary(const char* report_json);

void insdel_string_free(char* s);

const char* insdel_status_name(insdel_status status);

#ifdef __cplusplus
}
#endif

#endif /* INSDEL_C_H */
