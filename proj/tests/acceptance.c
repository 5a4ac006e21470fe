/* One line per acceptance criterion, through the C interface only. */

#include <stdio.h>
#include <string.h>
#include <time.h>

#include "qcalc/qcalc.h"

#ifndef QCALC_TEST_DATA
#define QCALC_TEST_DATA "tests/data"
#endif

#define SUITE_LIMIT_MS 60000.0

struct option {
	const char *key, *value;
};

struct outcome {
	int ok;       /* suite passed */
	int ran;      /* qc_run succeeded */
	double ms;
	char why[512];
	qc_report *report;
};

static double now_ms(void)
{
	struct timespec ts;
	timespec_get(&ts, TIME_UTC);
	return ts.tv_sec * 1000.0 + ts.tv_nsec / 1e6;
}

static struct outcome run(const char *suite, const struct option *opts)
{
	struct outcome o;
	memset(&o, 0, sizeof o);
	qc_options *op = NULL;
	qc_options_new(&op);
	for (; opts && opts->key; ++opts)
		if (qc_options_set(op, opts->key, opts->value) != QC_OK) {
			snprintf(o.why, sizeof o.why, "option %s: %s", opts->key, qc_last_error());
			qc_options_free(op);
			return o;
		}
	double start = now_ms();
	qc_status s = qc_run(suite, op, &o.report);
	o.ms = now_ms() - start;
	qc_options_free(op);
	if (s != QC_OK) {
		snprintf(o.why, sizeof o.why, "%s: %s", suite, qc_last_error());
		return o;
	}
	o.ran = 1;
	o.ok = qc_report_ok(o.report);
	if (!o.ok)
		snprintf(o.why, sizeof o.why, "%s: %zu failing claims", suite, qc_report_count(o.report, "fail"));
	else if (o.ms > SUITE_LIMIT_MS)
		snprintf(o.why, sizeof o.why, "%s took %.0f ms", suite, o.ms);
	return o;
}

struct criterion {
	int failed;
	double ms;
	char why[1024];
};

static void note(struct criterion *c, const char *why)
{
	c->failed = 1;
	if (!c->why[0])
		snprintf(c->why, sizeof c->why, "%s", why);
}

/* Suite must pass and contain each listed claim as passing. */
static void need(struct criterion *c, const char *suite, const struct option *opts, const char *const *claims)
{
	struct outcome o = run(suite, opts);
	c->ms += o.ms;
	if (!o.ran || !o.ok || o.ms > SUITE_LIMIT_MS)
		note(c, o.why);
	for (; o.ran && claims && *claims; ++claims) {
		const char *st = qc_report_claim_status(o.report, *claims);
		if (!st || strcmp(st, "pass") != 0) {
			char msg[256];
			snprintf(msg, sizeof msg, "%s: claim %s is %s", suite, *claims, st ? st : "missing");
			note(c, msg);
		}
	}
	qc_report_free(o.report);
}

/* Suite must run and report a failure. */
static void need_failure(struct criterion *c, const char *suite, const struct option *opts, const char *what)
{
	struct outcome o = run(suite, opts);
	c->ms += o.ms;
	if (!o.ran)
		note(c, o.why);
	else if (o.ok) {
		char msg[256];
		snprintf(msg, sizeof msg, "negative control passed: %s", what);
		note(c, msg);
	}
	qc_report_free(o.report);
}

static int report(int n, const char *what, struct criterion *c)
{
	if (c->failed)
		printf("criterion %d: FAIL - %s [%.0f ms] (%s)\n", n, what, c->ms, c->why);
	else
		printf("criterion %d: PASS - %s [%.0f ms]\n", n, what, c->ms);
	return c->failed;
}

int main(void)
{
	int failures = 0;
	const struct option none[] = {{NULL, NULL}};

	{
		struct criterion c = {0};
		need(&c, "spheres:classical", none, NULL);
		need(&c, "spheres:fuzzy", none, NULL);
		need(&c, "spheres:qsphere", none, NULL);
		need(&c, "spheres:qfuzzy", none, NULL);
		failures += report(1, "projector identities e^2 = e, e† = e and the trace for the four spheres", &c);
	}
	{
		struct criterion c = {0};
		need(&c, "spheres:prop1", none, NULL);
		failures += report(2, "q-fuzzy sphere identifications in both directions, composites are identities", &c);
	}
	{
		struct criterion c = {0};
		const char *claims[] = {"prop2.standard.confluent", "prop2.standard.star-closed",
		                        "prop2.standard.trace-self-adjoint", "prop2.twoparam.admissible",
		                        "prop2.twoparam.confluent", "prop2.twoparam.star-closed",
		                        "prop2.twoparam.trace-self-adjoint", NULL};
		need(&c, "spheres:prop2", none, claims);
		failures += report(3, "braided spheres from the standard and a two-parameter R-matrix", &c);
	}
	{
		struct criterion c = {0};
		need(&c, "spheres:prop3", none, NULL);
		failures += report(4, "central Casimir and the Podleś-patch homomorphism with s^2 = -t^2", &c);
	}
	{
		struct criterion c = {0};
		need(&c, "spheres:prop4", none, NULL);
		const struct option t2[] = {{"t", "2"}, {NULL, NULL}};
		need(&c, "spheres:prop4", t2, NULL);
		need(&c, "spheres:localization", none, NULL);
		failures += report(5, "time slice of B_q[SU2], its projector and the localization coefficient", &c);
	}
	{
		struct criterion c = {0};
		const char *claims[] = {"bqsu2.d-det", "bqsu2.ec-ec-delta", "bqsu2.d-squared", "bqsu2.leibniz", NULL};
		need(&c, "dga:bqsu2", none, claims);
		failures += report(6, "calculus on B_q[SU2]: d(det) = 0, e_c^2 δ = 0, d^2 = 0, Leibniz", &c);
	}
	{
		struct criterion c = {0};
		need(&c, "dga:eq9-crosscheck", none, NULL);
		const struct option hecke[] = {{"normalization", "hecke"}, {NULL, NULL}};
		need_failure(&c, "dga:eq9-crosscheck", hecke, "Hecke normalization");
		failures += report(7, "braided bimodule formula equals the hand calculus; Hecke normalization fails", &c);
	}
	{
		struct criterion c = {0};
		const char *claims[] = {"uqsu2.localization", "uqsu2.dK", NULL};
		need(&c, "dga:uqsu2", none, claims);
		failures += report(8, "localization into the U_q(su2) calculus and the dK K identity", &c);
	}
	{
		struct criterion c = {0};
		const char *claims[] = {"qfuzzy.d-trace", "qfuzzy.constraint-nonzero", NULL};
		need(&c, "dga:qfuzzy", none, claims);
		failures += report(9, "d Tr_q(u) = 0 reduces to the θ constraint, nonzero before the quotient", &c);
	}
	{
		struct criterion c = {0};
		const char *tm[] = {"transmute.reflection", NULL};
		const char *st[] = {"hopf.cqt-well-defined", NULL};
		const char *ca[] = {"calculus.eq9-cotwisted", "calculus.theta-inverse", "calculus.maurer-cartan-equation",
		                    NULL};
		need(&c, "hopf:transmutation", none, tm);
		need(&c, "hopf:structure", none, st);
		need(&c, "hopf:calculus", none, ca);
		failures += report(10, "transmutation, braiding functional, cotwist with Θ and Maurer-Cartan", &c);
	}
	{
		struct criterion c = {0};
		const char *pa[] = {"partials.extended-classical", "partials.reassemble", "partials.exponential", NULL};
		const char *la[] = {"laplacian.eigenvalue", "laplacian.classical-limit", NULL};
		const char *li[] = {"limit.form-table", "limit.calculus", "limit.dictionary", NULL};
		need(&c, "bicross:dga", none, NULL);
		need(&c, "bicross:partials", none, pa);
		need(&c, "bicross:laplacian", none, la);
		need(&c, "bicross:limit", none, li);
		failures += report(11, "bicrossproduct calculus, partials, plane-wave eigenvalue and the scaling limit", &c);
	}
	{
		struct criterion c = {0};
		const struct option deg5[] = {{"max-degree", "5"}, {NULL, NULL}};
		need(&c, "freealg:confluence", deg5, NULL);
		const struct option broken[] = {{"rmatrix", QCALC_TEST_DATA "/perturbed.rmat"}, {NULL, NULL}};
		need_failure(&c, "rmatrix:ybe", broken, "perturbed R-matrix entry");
		const struct option hecke[] = {{"normalization", "hecke"}, {NULL, NULL}};
		need_failure(&c, "dga:eq9-crosscheck", hecke, "wrong normalization");
		const struct option inverted[] = {{"bracket", "inverted"}, {NULL, NULL}};
		need_failure(&c, "dga:eq9-crosscheck", inverted, "wrong q-commutator convention");
		failures += report(12, "degree-5 confluence of shipped presentations; three perturbations rejected", &c);
	}
	return failures ? 1 : 0;
}
