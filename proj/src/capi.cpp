#include "gskit.h"

#include <cstring>
#include <string>

#include "gskit/covfile.hpp"
#include "gskit/errors.hpp"
#include "gskit/fock.hpp"
#include "gskit/gaussian.hpp"
#include "gskit/measures.hpp"
#include "gskit/states.hpp"

struct gsk_state {
  gskit::TwoModeCov cov;
};

namespace {

thread_local std::string g_error;
thread_local double g_error_detail = 0;

gsk_status to_status(gskit::ErrorCode code) {
  return static_cast<gsk_status>(static_cast<int>(code));
}

template <typename Fn>
gsk_status wrap(Fn&& fn) {
  try {
    g_error.clear();
    g_error_detail = 0;
    fn();
    return GSK_OK;
  } catch (const gskit::UnphysicalError& e) {
    g_error = e.what();
    g_error_detail = e.min_eigenvalue;
    return GSK_ERR_UNPHYSICAL;
  } catch (const gskit::Error& e) {
    g_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return GSK_ERR_NUMERIC;
  }
}

gsk_status copy_out(const std::string& text, char* buf, size_t* len) {
  if (!len) {
    g_error = "null length pointer";
    return GSK_ERR_PARAM;
  }
  const size_t need = text.size();
  if (!buf || *len < need + 1) {
    *len = need + 1;
    g_error = "buffer too small";
    return GSK_ERR_BUFFER;
  }
  std::memcpy(buf, text.data(), need);
  buf[need] = '\0';
  *len = need;
  return GSK_OK;
}

gskit::StateSpec to_spec(const gsk_state_spec& s) {
  gskit::StateSpec spec;
  spec.kind = gskit::state_kind_from_name(s.kind ? s.kind : "");
  spec.nbar1 = s.nbar1;
  spec.nbar2 = s.nbar2;
  spec.r = s.r;
  spec.a = s.a;
  spec.b = s.b;
  spec.c1 = s.c1;
  spec.c2 = s.c2;
  return spec;
}

void fill_report(const gskit::Report& r, gsk_report* out) {
  out->a = r.sf.a;
  out->b = r.sf.b;
  out->c1 = r.sf.c1;
  out->c2 = r.sf.c2;
  out->det_sigma = r.det_sigma;
  out->delta = r.delta;
  out->det_alpha = r.det_alpha;
  out->det_beta = r.det_beta;
  out->det_gamma = r.det_gamma;
  out->mu = r.measures.purity;
  out->linear_entropy = r.measures.linear_entropy;
  out->von_neumann = r.measures.von_neumann;
  out->mutual_information = r.measures.mutual_information;
  out->n_minus = r.measures.n_minus;
  out->n_plus = r.measures.n_plus;
  out->nt_minus = r.measures.nt_minus;
  out->nt_plus = r.measures.nt_plus;
  out->separable = r.measures.separable ? 1 : 0;
  out->has_eof = r.measures.eof ? 1 : 0;
  out->eof = r.measures.eof.value_or(0.0);
  out->log_negativity = r.measures.log_negativity;
}

// Closed-form vs Fock-oracle record for a validated two-mode state.
gsk_verify_record verify_two_mode(const gskit::TwoModeCov& cov, int cutoff) {
  using namespace gskit;
  convention_selftest(14);
  const Lemma1Factors f = lemma1_factor(cov);
  const FockDM dm = build_state(f, cutoff);

  gsk_verify_record rec{};
  rec.two_mode = 1;
  rec.trace_deficit = dm.trace_deficit;
  rec.entropy_closed = von_neumann_two(cov);
  rec.entropy_fock = entropy_fock(dm);
  rec.purity_closed = purity(cov);
  rec.purity_fock = purity_fock(dm);
  rec.mi_closed = mutual_information(cov);
  const FockDM r1 = partial_trace(dm, 1);
  const FockDM r2 = partial_trace(dm, 2);
  rec.mi_fock = entropy_fock(r1) + entropy_fock(r2) - rec.entropy_fock;
  rec.negativity_fock = negativity_fock(dm);
  rec.nt_minus = pt_spectrum(cov).n_minus;
  return rec;
}

}  // namespace

extern "C" {

const char* gsk_last_error(void) { return g_error.c_str(); }
double gsk_last_error_detail(void) { return g_error_detail; }

gsk_status gsk_state_from_matrix(const double matrix[16], gsk_state** out) {
  return wrap([&] {
    if (!matrix || !out) throw gskit::ParamError("null argument");
    gskit::RealMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = matrix[i * 4 + j];
    *out = new gsk_state{gskit::validate(m)};
  });
}

gsk_status gsk_state_from_text(const char* text, size_t len, gsk_state** out) {
  return wrap([&] {
    if (!text || !out) throw gskit::ParamError("null argument");
    const gskit::CovFile cf = gskit::parse_covfile(std::string(text, len));
    if (cf.matrix.rows() != 4)
      throw gskit::ShapeError("expected a two-mode (4x4) covariance file");
    *out = new gsk_state{gskit::validate(cf.matrix)};
  });
}

gsk_status gsk_state_make(const gsk_state_spec* spec, gsk_state** out) {
  return wrap([&] {
    if (!spec || !out) throw gskit::ParamError("null argument");
    *out = new gsk_state{gskit::make_state(to_spec(*spec))};
  });
}

void gsk_state_free(gsk_state* st) { delete st; }

gsk_status gsk_state_matrix(const gsk_state* st, double out[16]) {
  return wrap([&] {
    if (!st || !out) throw gskit::ParamError("null argument");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i * 4 + j] = st->cov(i, j);
  });
}

gsk_status gsk_state_serialize(const gsk_state* st, const char* label,
                               char* buf, size_t* len) {
  std::string text;
  const gsk_status rc = wrap([&] {
    if (!st) throw gskit::ParamError("null state");
    text = gskit::serialize_covfile(st->cov.m(), label ? label : "");
  });
  if (rc != GSK_OK) return rc;
  return copy_out(text, buf, len);
}

gsk_status gsk_analyze(const gsk_state* st, gsk_report* out) {
  return wrap([&] {
    if (!st || !out) throw gskit::ParamError("null argument");
    fill_report(gskit::build_report(st->cov), out);
  });
}

gsk_status gsk_report_serialize(const gsk_report* rep, const char* label,
                                char* buf, size_t* len) {
  std::string text;
  const gsk_status rc = wrap([&] {
    if (!rep) throw gskit::ParamError("null report");
    gskit::Report r{};
    r.label = label ? label : "";
    r.sf = {rep->a, rep->b, rep->c1, rep->c2};
    r.det_sigma = rep->det_sigma;
    r.delta = rep->delta;
    r.det_alpha = rep->det_alpha;
    r.det_beta = rep->det_beta;
    r.det_gamma = rep->det_gamma;
    r.measures.purity = rep->mu;
    r.measures.linear_entropy = rep->linear_entropy;
    r.measures.von_neumann = rep->von_neumann;
    r.measures.mutual_information = rep->mutual_information;
    r.measures.n_minus = rep->n_minus;
    r.measures.n_plus = rep->n_plus;
    r.measures.nt_minus = rep->nt_minus;
    r.measures.nt_plus = rep->nt_plus;
    r.measures.separable = rep->separable != 0;
    if (rep->has_eof) r.measures.eof = rep->eof;
    r.measures.log_negativity = rep->log_negativity;
    text = gskit::serialize_report(r);
  });
  if (rc != GSK_OK) return rc;
  return copy_out(text, buf, len);
}

gsk_status gsk_verify_state(const gsk_state* st, int cutoff,
                            gsk_verify_record* out) {
  return wrap([&] {
    if (!st || !out) throw gskit::ParamError("null argument");
    *out = verify_two_mode(st->cov, cutoff);
  });
}

gsk_status gsk_verify_single(const char* kind, double nbar, double r,
                             int cutoff, gsk_verify_record* out) {
  return wrap([&] {
    if (!kind || !out) throw gskit::ParamError("null argument");
    gskit::StateSpec spec;
    spec.kind = gskit::state_kind_from_name(kind);
    spec.nbar1 = nbar;
    spec.r = r;
    spec.single_mode = true;
    const gskit::RealMatrix sigma1 = gskit::make_single_mode(spec);

    gskit::FockDM dm = gskit::thermal_dm(nbar, cutoff);
    if (spec.kind == gskit::StateKind::squeezed_thermal) {
      const gskit::ComplexMatrix u = gskit::single_mode_unitary(
          gskit::squeeze2(r), cutoff);
      dm.rho = u * dm.rho * u.adjoint();
    }

    gsk_verify_record rec{};
    rec.two_mode = 0;
    rec.trace_deficit = dm.trace_deficit;
    rec.entropy_closed = gskit::von_neumann_single(sigma1);
    rec.entropy_fock = gskit::entropy_fock(dm);
    rec.purity_closed = gskit::purity_single(sigma1);
    rec.purity_fock = gskit::purity_fock(dm);
    *out = rec;
  });
}

}  // extern "C"
