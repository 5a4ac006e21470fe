#ifndef QCALC_QCALC_H
#define QCALC_QCALC_H

/* C interface to the qcalc engine. Handles are opaque; every call returns a
 * qc_status and the message of the last failure on the calling thread is
 * available from qc_last_error(). Strings returned through char ** are owned
 * by the caller and released with qc_string_free(). */

#include <stddef.h>

#if defined(_WIN32)
#define QC_API __declspec(dllexport)
#else
#define QC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qc_status {
	QC_OK = 0,
	QC_ERR_ARGUMENT = 1,      /* null pointer, bad option value */
	QC_ERR_PARSE = 2,         /* expression or file syntax; message has line:column */
	QC_ERR_ALPHABET = 3,      /* unknown generator */
	QC_ERR_UNKNOWN_SUITE = 4,
	QC_ERR_POLE = 5,          /* division by zero or pole under specialization */
	QC_ERR_BUDGET = 6,        /* rewrite step budget exhausted (QCALC_STEP_BUDGET) */
	QC_ERR_INCONSISTENT = 7,  /* presentation collapses */
	QC_ERR_IO = 8,
	QC_ERR_INTERNAL = 9
} qc_status;

typedef struct qc_algebra qc_algebra;
typedef struct qc_options qc_options;
typedef struct qc_report qc_report;

QC_API const char *qc_version(void);
QC_API const char *qc_last_error(void);
QC_API const char *qc_status_name(qc_status s);
QC_API void qc_string_free(char *s);

/* Presentations: a shipped name ("qfuzzy") or a file path. */
QC_API qc_status qc_algebra_load(const char *path_or_name, qc_algebra **out);
QC_API qc_status qc_algebra_load_text(const char *text, qc_algebra **out);
QC_API void qc_algebra_free(qc_algebra *a);
QC_API qc_status qc_algebra_name(const qc_algebra *a, char **out);
QC_API qc_status qc_algebra_emit(const qc_algebra *a, char **out);
QC_API qc_status qc_normalize(const qc_algebra *a, const char *expr, char **out);
/* sigma [theta, x}, normalized. */
QC_API qc_status qc_differential(const qc_algebra *a, const char *expr, char **out);
/* Number of critical pairs up to max_degree whose reductions disagree. */
QC_API qc_status qc_confluence_failures(const qc_algebra *a, int max_degree, size_t *count);
/* Names of the shipped presentations, newline separated. */
QC_API qc_status qc_builtin_names(char **out);

/* Suite options. Keys: q-at, t, max-degree, seed, rmatrix, normalization
 * (hecke | quantum-group), bracket (standard | inverted), table (0 | 1). */
QC_API qc_status qc_options_new(qc_options **out);
QC_API void qc_options_free(qc_options *o);
QC_API qc_status qc_options_set(qc_options *o, const char *key, const char *value);

QC_API size_t qc_suite_count(void);
QC_API const char *qc_suite_name(size_t i);
QC_API const char *qc_suite_description(size_t i);

/* Runs "all", a suite name, or a prefix such as "spheres:". Options may be null. */
QC_API qc_status qc_run(const char *pattern, const qc_options *o, qc_report **out);
QC_API qc_status qc_report_from_json(const char *json, qc_report **out);
QC_API void qc_report_free(qc_report *r);
/* 1 when no claim failed. */
QC_API int qc_report_ok(const qc_report *r);
QC_API size_t qc_report_suite_count(const qc_report *r);
QC_API size_t qc_report_count(const qc_report *r, const char *status);
QC_API qc_status qc_report_json(const qc_report *r, char **out);
QC_API qc_status qc_report_text(const qc_report *r, char **out);
/* Status ("pass", "fail", "skipped") of a claim id in any suite of the report, or null. */
QC_API const char *qc_report_claim_status(const qc_report *r, const char *claim_id);

/* Presentation generated by a construction: qfuzzy, braided-sphere, eq9, frt,
 * reflection. Uses the rmatrix option (default standard); braided-sphere takes
 * λ symbolic. Output is in the .alg format. */
QC_API qc_status qc_derive(const char *construction, const qc_options *o, char **out);

#ifdef __cplusplus
}
#endif

#endif
