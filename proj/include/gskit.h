/* C interface to the Gaussian-state toolkit.
 *
 * All functions return gsk_status; GSK_OK means success. On failure,
 * gsk_last_error() returns a thread-local message and, for
 * GSK_ERR_UNPHYSICAL, gsk_last_error_detail() the offending minimum
 * eigenvalue of sigma + (i/2) Omega.
 *
 * Conventions: hbar = 1, quadrature ordering (x1, p1, x2, p2), vacuum
 * covariance I/2. Matrices cross the boundary as row-major double[16].
 * Entropic quantities are in nats.
 */
#ifndef GSKIT_H
#define GSKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GSK_OK = 0,
  GSK_ERR_SHAPE = 1,       /* malformed matrix / dimensions */
  GSK_ERR_UNPHYSICAL = 2,  /* Heisenberg constraint violated */
  GSK_ERR_PARSE = 3,       /* malformed text input */
  GSK_ERR_PARAM = 4,       /* parameter out of range */
  GSK_ERR_TOLERANCE = 5,   /* iterative procedure missed its tolerance */
  GSK_ERR_NUMERIC = 6,     /* internal numerical inconsistency */
  GSK_ERR_UNSUPPORTED = 7, /* operation undefined for this state */
  GSK_ERR_BUFFER = 8       /* output buffer too small */
} gsk_status;

/* Opaque validated two-mode state. */
typedef struct gsk_state gsk_state;

typedef struct {
  const char* kind; /* vacuum | thermal | tmsv | tms_thermal | standard_form */
  double nbar1, nbar2; /* mean photon numbers (thermal kinds) */
  double r;            /* squeezing (tmsv, tms_thermal) */
  double a, b, c1, c2; /* standard_form entries */
} gsk_state_spec;

typedef struct {
  /* standard form and invariants */
  double a, b, c1, c2;
  double det_sigma, delta, det_alpha, det_beta, det_gamma;
  /* measures */
  double mu, linear_entropy, von_neumann, mutual_information;
  double n_minus, n_plus, nt_minus, nt_plus;
  int separable;
  int has_eof; /* eof valid only when nonzero (symmetric states) */
  double eof;
  double log_negativity;
} gsk_report;

typedef struct {
  int two_mode;        /* 0: single-mode record, mi/negativity unused */
  double trace_deficit;
  double entropy_closed, entropy_fock;
  double purity_closed, purity_fock;
  double mi_closed, mi_fock;
  double negativity_fock;
  double nt_minus;
} gsk_verify_record;

const char* gsk_last_error(void);
double gsk_last_error_detail(void);

/* Constructors. `matrix` is row-major 4x4; text is the covariance-file
 * format produced by gsk_state_serialize. */
gsk_status gsk_state_from_matrix(const double matrix[16], gsk_state** out);
gsk_status gsk_state_from_text(const char* text, size_t len, gsk_state** out);
gsk_status gsk_state_make(const gsk_state_spec* spec, gsk_state** out);
void gsk_state_free(gsk_state* st);

gsk_status gsk_state_matrix(const gsk_state* st, double out[16]);
/* Writes the covariance file (label may be NULL) into buf. *len carries
 * the capacity in; on success it becomes the used size (excluding NUL),
 * on GSK_ERR_BUFFER the required capacity (including NUL). */
gsk_status gsk_state_serialize(const gsk_state* st, const char* label,
                               char* buf, size_t* len);

gsk_status gsk_analyze(const gsk_state* st, gsk_report* out);
/* Flat key/value report at 17 significant digits (lossless). */
gsk_status gsk_report_serialize(const gsk_report* rep, const char* label,
                                char* buf, size_t* len);

/* Fock-oracle verification of the closed forms, two-mode at the given
 * cutoff per mode. Runs the generator-convention self-test first. */
gsk_status gsk_verify_state(const gsk_state* st, int cutoff,
                            gsk_verify_record* out);
/* Single-mode route: kind is thermal or squeezed_thermal. */
gsk_status gsk_verify_single(const char* kind, double nbar, double r,
                             int cutoff, gsk_verify_record* out);

#ifdef __cplusplus
}
#endif

#endif /* GSKIT_H */
