#ifndef CANTORCOVER_H
#define CANTORCOVER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvc_status {
    CVC_OK = 0,
    CVC_INVALID_ARGUMENT = 1,
    CVC_NOT_CERTIFIED = 2,
    CVC_EXPANSION_STALLED = 3,
    CVC_INTERNAL_ERROR = 4
} cvc_status;

/* Opaque result: a finished report with text/json (and sometimes csv)
 * renderings plus a pass/fail verdict. */
typedef struct cvc_report cvc_report;

/* Message from the last failing call on the calling thread ("" if none). */
const char* cvc_last_error(void);

/* All rational parameters are strings parsed exactly: "p/q", an integer, or a
 * decimal/exponent literal ("0.43", "1e-9").  On CVC_OK, *out owns a report
 * the caller must free; on any error *out is NULL.
 *
 * width may be NULL for the default isolation width of 1/10^9. */

/* The named critical-value catalog, every root isolated to `width`. */
cvc_status cvc_thresholds(const char* width, cvc_report** out);

/* Critical exponent k (>= 2): both root brackets plus the exact side checks. */
cvc_status cvc_lambda_k(int k, const char* width, cvc_report** out);

/* kind: "st" | "fk" | "circle".  k is read only for "fk" (pass 0 otherwise).
 * Returns CVC_OK with a report whether or not the certificate passes; consult
 * cvc_report_verdict. */
cvc_status cvc_certify(const char* kind, const char* lambda, int k, cvc_report** out);

/* Union of the rank-`rank` pair images under x^k * y, with its holes. */
cvc_status cvc_gaps(const char* lambda, int k, int rank, cvc_report** out);

/* Binary witness tree for x*y = t at the given depth.  scan_limit <= 0 picks
 * the default (24 extra ranks per expansion). */
cvc_status cvc_witness(const char* lambda, const char* t, int depth, int scan_limit,
                       cvc_report** out);

/* Every basic interval of the given rank, exact endpoints. */
cvc_status cvc_enumerate(const char* lambda, int rank, cvc_report** out);

/* lemma: "2.2" | "2.3" | "3.1" (k read only for "3.1").  Decomposes the
 * addressed same-rank pair and evaluates the lemma's hypotheses and
 * conclusion exactly. */
cvc_status cvc_check_lemma(const char* lemma, const char* lambda, const char* addr_i,
                           const char* addr_j, int k, cvc_report** out);

/* Renderings are owned by the report and live until cvc_report_free.  csv is
 * NULL for commands without a tabular form. */
const char* cvc_report_text(const cvc_report* report);
const char* cvc_report_json(const cvc_report* report);
const char* cvc_report_csv(const cvc_report* report);

/* 0 when every checked statement held, 1 otherwise. */
int cvc_report_verdict(const cvc_report* report);

void cvc_report_free(cvc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CANTORCOVER_H */
