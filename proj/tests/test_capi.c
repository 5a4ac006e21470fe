/* The C interface from a C translation unit. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qcalc/qcalc.h"

#ifndef QCALC_TEST_DATA
#define QCALC_TEST_DATA "tests/data"
#endif

static int failures = 0;

#define EXPECT(cond)                                                                                                   \
	do {                                                                                                               \
		if (!(cond)) {                                                                                                 \
			fprintf(stderr, "%s:%d: expected %s (last error: %s)\n", __FILE__, __LINE__, #cond, qc_last_error());     \
			++failures;                                                                                                \
		}                                                                                                              \
	} while (0)

static void expect_normal(qc_algebra *a, const char *expr, const char *want)
{
	char *out = NULL;
	qc_status s = qc_normalize(a, expr, &out);
	EXPECT(s == QC_OK);
	if (s == QC_OK && strcmp(out, want) != 0) {
		fprintf(stderr, "normalize(%s) = %s, want %s\n", expr, out, want);
		++failures;
	}
	qc_string_free(out);
}

int main(void)
{
	EXPECT(strlen(qc_version()) > 0);

	qc_algebra *qf = NULL;
	EXPECT(qc_algebra_load("qfuzzy", &qf) == QC_OK);
	expect_normal(qf, "b*a", "q^2*a*b - λ*b");
	expect_normal(qf, "1", "1");
	size_t bad = 99;
	EXPECT(qc_confluence_failures(qf, 4, &bad) == QC_OK && bad == 0);

	char *out = NULL;
	EXPECT(qc_normalize(qf, "b*(a", &out) == QC_ERR_PARSE);
	EXPECT(strlen(qc_last_error()) > 0);
	EXPECT(qc_normalize(qf, "zz*a", &out) != QC_OK);
	EXPECT(qc_normalize(NULL, "a", &out) == QC_ERR_ARGUMENT);
	qc_algebra_free(qf);

	qc_algebra *bq = NULL;
	EXPECT(qc_algebra_load("bqsu2", &bq) == QC_OK);
	expect_normal(bq, "α*δ - q^2*γ*β", "1");
	qc_algebra_free(bq);

	qc_algebra *om = NULL;
	EXPECT(qc_algebra_load("bicross", &om) == QC_OK);
	EXPECT(qc_differential(om, "x", &out) == QC_OK && strcmp(out, "dx") == 0);
	qc_string_free(out);
	qc_algebra_free(om);

	qc_algebra *missing = NULL;
	EXPECT(qc_algebra_load("no-such-algebra", &missing) != QC_OK);
	EXPECT(qc_algebra_load_text("name: broken\ngenerators: [a, b]\nrelations: [\"b*a = \"]\n", &missing) ==
	       QC_ERR_PARSE);

	/* suites */
	EXPECT(qc_suite_count() > 20);
	qc_report *r = NULL;
	EXPECT(qc_run("rmatrix:ybe", NULL, &r) == QC_OK);
	EXPECT(qc_report_ok(r) == 1);
	EXPECT(qc_report_claim_status(r, "rmatrix.ybe") && strcmp(qc_report_claim_status(r, "rmatrix.ybe"), "pass") == 0);
	char *json = NULL;
	EXPECT(qc_report_json(r, &json) == QC_OK);
	qc_report_free(r);

	/* JSON round trip */
	qc_report *back = NULL;
	EXPECT(qc_report_from_json(json, &back) == QC_OK);
	EXPECT(qc_report_ok(back) == 1);
	EXPECT(qc_report_count(back, "pass") == 3);
	qc_report_free(back);
	qc_string_free(json);
	EXPECT(qc_report_from_json("{not json", &back) == QC_ERR_PARSE);

	qc_options *o = NULL;
	EXPECT(qc_options_new(&o) == QC_OK);
	EXPECT(qc_options_set(o, "rmatrix", QCALC_TEST_DATA "/perturbed.rmat") == QC_OK);
	EXPECT(qc_run("rmatrix:ybe", o, &r) == QC_OK);
	EXPECT(qc_report_ok(r) == 0);
	EXPECT(strcmp(qc_report_claim_status(r, "rmatrix.ybe"), "fail") == 0);
	qc_report_free(r);
	EXPECT(qc_options_set(o, "q-at", "2") == QC_ERR_ARGUMENT);
	EXPECT(qc_options_set(o, "q-at", "9/4") == QC_OK);
	EXPECT(qc_options_set(o, "normalization", "sideways") == QC_ERR_ARGUMENT);
	EXPECT(qc_options_set(o, "colour", "1") == QC_ERR_ARGUMENT);
	EXPECT(qc_run("no:such-suite", o, &r) == QC_ERR_UNKNOWN_SUITE);
	qc_options_free(o);

	/* specialized rerun */
	EXPECT(qc_options_new(&o) == QC_OK);
	EXPECT(qc_options_set(o, "q-at", "4") == QC_OK);
	EXPECT(qc_run("dga:bqsu2", o, &r) == QC_OK);
	EXPECT(qc_report_ok(r) == 1);
	qc_report_free(r);
	qc_options_free(o);

	/* derive */
	EXPECT(qc_derive("qfuzzy", NULL, &out) == QC_OK);
	qc_algebra *derived = NULL;
	EXPECT(qc_algebra_load_text(out, &derived) == QC_OK);
	qc_string_free(out);
	if (derived) {
		expect_normal(derived, "b*a", "q^2*a*b - λ*b");
		qc_algebra_free(derived);
	}
	EXPECT(qc_derive("nonsense", NULL, &out) == QC_ERR_ARGUMENT);

	if (failures)
		fprintf(stderr, "%d C interface checks failed\n", failures);
	else
		printf("C interface checks passed\n");
	return failures ? 1 : 0;
}
