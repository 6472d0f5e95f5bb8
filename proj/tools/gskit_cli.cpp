// Command-line surface over the shared-library C API. Everything here goes
// through gskit.h; no core headers.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gskit.h"

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Stable exit codes: 0 ok, 2 unphysical, 3 malformed input, 4 bad
// parameters, 5 verification tolerance breach, 1 anything else.
int exit_code_for(gsk_status rc) {
  switch (rc) {
    case GSK_OK: return 0;
    case GSK_ERR_UNPHYSICAL: return 2;
    case GSK_ERR_PARSE:
    case GSK_ERR_SHAPE: return 3;
    case GSK_ERR_PARAM: return 4;
    default: return 1;
  }
}

int fail(gsk_status rc) {
  std::cerr << "error: " << gsk_last_error() << "\n";
  if (rc == GSK_ERR_UNPHYSICAL)
    std::printf("min_eigenvalue = %.12g\n", gsk_last_error_detail());
  return exit_code_for(rc);
}

bool read_input(const std::string& path, std::string* out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    *out = ss.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

int load_state(const std::string& path, gsk_state** st) {
  std::string text;
  if (!read_input(path, &text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 3;
  }
  const gsk_status rc = gsk_state_from_text(text.c_str(), text.size(), st);
  return rc == GSK_OK ? 0 : fail(rc);
}

void print_report(const gsk_report& r, bool bits) {
  const double u = bits ? kLn2 : 1.0;
  std::printf("a = %.12g\n", r.a);
  std::printf("b = %.12g\n", r.b);
  std::printf("c1 = %.12g\n", r.c1);
  std::printf("c2 = %.12g\n", r.c2);
  std::printf("det_sigma = %.12g\n", r.det_sigma);
  std::printf("delta = %.12g\n", r.delta);
  std::printf("det_alpha = %.12g\n", r.det_alpha);
  std::printf("det_beta = %.12g\n", r.det_beta);
  std::printf("det_gamma = %.12g\n", r.det_gamma);
  std::printf("mu = %.12g\n", r.mu);
  std::printf("linear_entropy = %.12g\n", r.linear_entropy);
  std::printf("S_V = %.12g\n", r.von_neumann / u);
  std::printf("I = %.12g\n", r.mutual_information / u);
  std::printf("n_minus = %.12g\n", r.n_minus);
  std::printf("n_plus = %.12g\n", r.n_plus);
  std::printf("nt_minus = %.12g\n", r.nt_minus);
  std::printf("nt_plus = %.12g\n", r.nt_plus);
  std::printf("separable = %s\n", r.separable ? "true" : "false");
  if (r.has_eof) std::printf("eof = %.12g\n", r.eof / u);
  std::printf("log_negativity = %.12g\n", r.log_negativity / u);
}

struct SpecFlags {
  std::string kind = "vacuum";
  double nbar1 = 0, nbar2 = 0, r = 0;
  double a = 0.5, b = 0.5, c1 = 0, c2 = 0;

  gsk_state_spec to_spec() const {
    return {kind.c_str(), nbar1, nbar2, r, a, b, c1, c2};
  }
  void add_flags(CLI::App* cmd) {
    cmd->add_option("--kind", kind,
                    "vacuum|thermal|tmsv|tms_thermal|standard_form");
    cmd->add_option("--nbar1", nbar1, "mean photon number, mode 1");
    cmd->add_option("--nbar2", nbar2, "mean photon number, mode 2");
    cmd->add_option("--r", r, "squeezing parameter");
    cmd->add_option("--a", a, "standard-form a");
    cmd->add_option("--b", b, "standard-form b");
    cmd->add_option("--c1", c1, "standard-form c1");
    cmd->add_option("--c2", c2, "standard-form c2");
  }
  double* param_slot(const std::string& name) {
    if (name == "r") return &r;
    if (name == "nbar1") return &nbar1;
    if (name == "nbar2") return &nbar2;
    if (name == "c1") return &c1;
    if (name == "c2") return &c2;
    return nullptr;
  }
};

int run_analyze(const std::string& path, bool bits, bool exact) {
  gsk_state* st = nullptr;
  if (int ec = load_state(path, &st)) return ec;
  gsk_report rep{};
  const gsk_status rc = gsk_analyze(st, &rep);
  gsk_state_free(st);
  if (rc != GSK_OK) return fail(rc);
  if (exact) {
    std::vector<char> buf(4096);
    size_t len = buf.size();
    if (gsk_report_serialize(&rep, nullptr, buf.data(), &len) != GSK_OK)
      return 1;
    std::fwrite(buf.data(), 1, len, stdout);
  } else {
    print_report(rep, bits);
  }
  return 0;
}

int run_validate(const std::string& path) {
  gsk_state* st = nullptr;
  if (int ec = load_state(path, &st)) return ec;
  gsk_state_free(st);
  std::printf("valid\n");
  return 0;
}

int run_make(const SpecFlags& flags, const std::string& label) {
  gsk_state* st = nullptr;
  const gsk_state_spec spec = flags.to_spec();
  gsk_status rc = gsk_state_make(&spec, &st);
  if (rc != GSK_OK) return fail(rc);
  std::vector<char> buf(4096);
  size_t len = buf.size();
  rc = gsk_state_serialize(st, label.empty() ? nullptr : label.c_str(),
                           buf.data(), &len);
  gsk_state_free(st);
  if (rc != GSK_OK) return fail(rc);
  std::fwrite(buf.data(), 1, len, stdout);
  return 0;
}

int run_sweep(SpecFlags flags, const std::string& param,
              const std::string& range, const std::string& out_path,
              bool bits) {
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
      step <= 0) {
    std::cerr << "error: --range must be start:stop:step with step > 0\n";
    return 4;
  }
  double* slot = flags.param_slot(param);
  if (!slot) {
    std::cerr << "error: unknown sweep parameter '" << param << "'\n";
    return 4;
  }

  std::ostringstream csv;
  csv << "param,mu,S_V,I,n_minus,n_plus,nt_minus,eof,log_neg\n";
  const double u = bits ? kLn2 : 1.0;
  const int steps = int(std::floor((stop - start) / step + 1e-9));
  for (int k = 0; k <= steps; ++k) {
    *slot = start + k * step;
    gsk_state* st = nullptr;
    const gsk_state_spec spec = flags.to_spec();
    gsk_status rc = gsk_state_make(&spec, &st);
    if (rc != GSK_OK) return fail(rc);
    gsk_report rep{};
    rc = gsk_analyze(st, &rep);
    gsk_state_free(st);
    if (rc != GSK_OK) return fail(rc);
    char line[512];
    char eof_field[32] = "";
    if (rep.has_eof)
      std::snprintf(eof_field, sizeof eof_field, "%.12g", rep.eof / u);
    std::snprintf(line, sizeof line,
                  "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s,%.12g\n",
                  *slot, rep.mu, rep.von_neumann / u,
                  rep.mutual_information / u, rep.n_minus, rep.n_plus,
                  rep.nt_minus, eof_field, rep.log_negativity / u);
    csv << line;
  }

  if (out_path.empty() || out_path == "-") {
    std::fputs(csv.str().c_str(), stdout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    out << csv.str();
  }
  return 0;
}

int run_verify(const std::string& path, SpecFlags flags, bool have_kind,
               int cutoff, double tol_entropy, double tol_purity,
               double tol_mi) {
  gsk_verify_record rec{};
  gsk_status rc;
  if (!path.empty()) {
    gsk_state* st = nullptr;
    if (int ec = load_state(path, &st)) return ec;
    rc = gsk_verify_state(st, cutoff, &rec);
    gsk_state_free(st);
  } else if (have_kind &&
             (flags.kind == "thermal" || flags.kind == "squeezed_thermal")) {
    rc = gsk_verify_single(flags.kind.c_str(), flags.nbar1, flags.r, cutoff,
                           &rec);
  } else if (have_kind) {
    gsk_state* st = nullptr;
    const gsk_state_spec spec = flags.to_spec();
    rc = gsk_state_make(&spec, &st);
    if (rc != GSK_OK) return fail(rc);
    rc = gsk_verify_state(st, cutoff, &rec);
    gsk_state_free(st);
  } else {
    std::cerr << "error: verify needs a file or --kind\n";
    return 4;
  }
  if (rc != GSK_OK) return fail(rc);

  std::printf("cutoff = %d\n", cutoff);
  std::printf("trace_deficit = %.12g\n", rec.trace_deficit);
  const double entropy_gap = std::fabs(rec.entropy_closed - rec.entropy_fock);
  const double purity_gap = std::fabs(rec.purity_closed - rec.purity_fock);
  std::printf("entropy_closed = %.12g\n", rec.entropy_closed);
  std::printf("entropy_fock = %.12g\n", rec.entropy_fock);
  std::printf("entropy_gap = %.12g\n", entropy_gap);
  std::printf("purity_closed = %.12g\n", rec.purity_closed);
  std::printf("purity_fock = %.12g\n", rec.purity_fock);
  std::printf("purity_gap = %.12g\n", purity_gap);
  bool ok = entropy_gap <= tol_entropy && purity_gap <= tol_purity;
  if (rec.two_mode) {
    const double mi_gap = std::fabs(rec.mi_closed - rec.mi_fock);
    std::printf("mi_closed = %.12g\n", rec.mi_closed);
    std::printf("mi_fock = %.12g\n", rec.mi_fock);
    std::printf("mi_gap = %.12g\n", mi_gap);
    std::printf("negativity_fock = %.12g\n", rec.negativity_fock);
    std::printf("nt_minus = %.12g\n", rec.nt_minus);
    ok = ok && mi_gap <= tol_mi;
  }
  std::printf("verdict = %s\n", ok ? "pass" : "fail");
  return ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Gaussian state analyzer"};
  app.require_subcommand(1);
  bool bits = false;
  app.add_flag("--bits", bits, "entropic outputs in bits instead of nats");

  auto* analyze = app.add_subcommand("analyze", "full report for a state file");
  std::string analyze_path;
  bool exact = false;
  analyze->add_option("path", analyze_path, "covariance file or -")->required();
  analyze->add_flag("--exact", exact, "17-significant-digit serialization");

  auto* validate = app.add_subcommand("validate", "physicality check");
  std::string validate_path;
  validate->add_option("path", validate_path, "covariance file or -")
      ->required();

  auto* make = app.add_subcommand("make", "emit a covariance file");
  SpecFlags make_flags;
  std::string label;
  make_flags.add_flags(make);
  make->add_option("--label", label, "optional label");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  SpecFlags sweep_flags;
  std::string sweep_param = "r", sweep_range, sweep_out;
  sweep_flags.add_flags(sweep);
  sweep->add_option("--param", sweep_param, "swept parameter (default r)");
  sweep->add_option("--range", sweep_range, "start:stop:step")->required();
  sweep->add_option("--out", sweep_out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Fock-oracle cross-check");
  SpecFlags verify_flags;
  std::string verify_path;
  int cutoff = 24;
  double tol_entropy = 1e-3, tol_purity = 1e-3, tol_mi = 2e-3;
  verify->add_option("path", verify_path, "covariance file or -");
  verify_flags.add_flags(verify);
  verify->add_option("--cutoff", cutoff, "Fock cutoff per mode");
  verify->add_option("--tol-entropy", tol_entropy, "entropy gap tolerance");
  verify->add_option("--tol-purity", tol_purity, "purity gap tolerance");
  verify->add_option("--tol-mi", tol_mi, "mutual-information gap tolerance");

  CLI11_PARSE(app, argc, argv);

  if (*analyze) return run_analyze(analyze_path, bits, exact);
  if (*validate) return run_validate(validate_path);
  if (*make) return run_make(make_flags, label);
  if (*sweep)
    return run_sweep(sweep_flags, sweep_param, sweep_range, sweep_out, bits);
  if (*verify) {
    const bool have_kind = verify->count("--kind") > 0;
    if (verify->count("--tol-entropy") == 0 && have_kind &&
        (verify_flags.kind == "thermal" ||
         verify_flags.kind == "squeezed_thermal") &&
        verify_path.empty()) {
      tol_entropy = 1e-8;  // single-mode route is exact up to truncation
      tol_purity = 1e-8;
    }
    return run_verify(verify_path, verify_flags, have_kind, cutoff,
                      tol_entropy, tol_purity, tol_mi);
  }
  return 0;
}
