#include "gskit/covfile.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "gskit/errors.hpp"

namespace gskit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& where) {
  const char* c = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(c, &end);
  if (end == c || *end != '\0')
    throw ParseError("bad number '" + s + "' in " + where);
  return v;
}

std::vector<double> parse_row(const std::string& line, int expect,
                              const std::string& where) {
  std::istringstream in(line);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_double(tok, where));
  if (int(out.size()) != expect)
    throw ParseError(where + ": expected " + std::to_string(expect) +
                     " entries, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

CovFile parse_covfile(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CovFile out;
  bool saw_convention = false;
  int dim = 0;  // set by the ordering line, required before matrix rows
  int rows_read = -1;

  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (rows_read >= 0 && rows_read < dim) {
      const auto row = parse_row(line, dim,
                                 "matrix row " + std::to_string(rows_read + 1));
      for (int j = 0; j < dim; ++j) out.matrix(rows_read, j) = row[j];
      ++rows_read;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "convention") {
      if (value != "vacuum=1/2")
        throw ParseError("unsupported convention '" + value +
                         "' (only vacuum=1/2 is accepted)");
      saw_convention = true;
    } else if (key == "ordering") {
      if (value == "x1,p1,x2,p2") dim = 4;
      else if (value == "x1,p1") dim = 2;
      else throw ParseError("unsupported ordering '" + value + "'");
      out.matrix = RealMatrix(dim, dim);
    } else if (key == "label") {
      out.label = value;
    } else if (key == "matrix") {
      if (dim == 0) throw ParseError("matrix must come after ordering");
      if (!value.empty())
        throw ParseError("matrix rows belong on the following lines");
      rows_read = 0;
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }

  if (!saw_convention) throw ParseError("missing convention = vacuum=1/2");
  if (dim == 0) throw ParseError("missing ordering");
  if (rows_read != dim)
    throw ParseError("matrix incomplete: " +
                     std::to_string(std::max(rows_read, 0)) + " of " +
                     std::to_string(dim) + " rows");
  return out;
}

std::string serialize_covfile(const RealMatrix& m, const std::string& label) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4))
    throw ShapeError("covariance file requires a 2x2 or 4x4 matrix");
  std::ostringstream out;
  out << "convention = vacuum=1/2\n";
  out << "ordering = " << (m.rows() == 4 ? "x1,p1,x2,p2" : "x1,p1") << "\n";
  if (!label.empty()) out << "label = " << label << "\n";
  out << "matrix =\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << fmt17(m(i, j));
    out << "\n";
  }
  return out.str();
}

Report build_report(const TwoModeCov& sigma, const std::string& label) {
  Report r;
  r.label = label;
  r.sf = standard_form(sigma);
  const Blocks b = blocks(sigma);
  r.det_sigma = det(sigma.m());
  r.delta = delta_invariant(sigma);
  r.det_alpha = det(b.alpha);
  r.det_beta = det(b.beta);
  r.det_gamma = det(b.gamma);
  r.measures = measure_report(sigma);
  return r;
}

std::string serialize_report(const Report& r) {
  std::ostringstream out;
  if (!r.label.empty()) out << "label = " << r.label << "\n";
  const auto put = [&out](const char* key, double v) {
    out << key << " = " << fmt17(v) << "\n";
  };
  put("a", r.sf.a);
  put("b", r.sf.b);
  put("c1", r.sf.c1);
  put("c2", r.sf.c2);
  put("det_sigma", r.det_sigma);
  put("delta", r.delta);
  put("det_alpha", r.det_alpha);
  put("det_beta", r.det_beta);
  put("det_gamma", r.det_gamma);
  put("mu", r.measures.purity);
  put("linear_entropy", r.measures.linear_entropy);
  put("S_V", r.measures.von_neumann);
  put("I", r.measures.mutual_information);
  put("n_minus", r.measures.n_minus);
  put("n_plus", r.measures.n_plus);
  put("nt_minus", r.measures.nt_minus);
  put("nt_plus", r.measures.nt_plus);
  out << "separable = " << (r.measures.separable ? "true" : "false") << "\n";
  if (r.measures.eof) put("eof", *r.measures.eof);
  put("log_negativity", r.measures.log_negativity);
  return out.str();
}

Report parse_report(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::string> kv;
  Report r{};
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("report: expected 'key = value', got '" + line + "'");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  const auto get = [&kv](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw ParseError(std::string("report: missing key '") + key + "'");
    return parse_double(it->second, key);
  };
  if (kv.count("label")) r.label = kv["label"];
  r.sf = {get("a"), get("b"), get("c1"), get("c2")};
  r.det_sigma = get("det_sigma");
  r.delta = get("delta");
  r.det_alpha = get("det_alpha");
  r.det_beta = get("det_beta");
  r.det_gamma = get("det_gamma");
  r.measures.purity = get("mu");
  r.measures.linear_entropy = get("linear_entropy");
  r.measures.von_neumann = get("S_V");
  r.measures.mutual_information = get("I");
  r.measures.n_minus = get("n_minus");
  r.measures.n_plus = get("n_plus");
  r.measures.nt_minus = get("nt_minus");
  r.measures.nt_plus = get("nt_plus");
  const auto sep = kv.find("separable");
  if (sep == kv.end() || (sep->second != "true" && sep->second != "false"))
    throw ParseError("report: separable must be true or false");
  r.measures.separable = sep->second == "true";
  if (kv.count("eof")) r.measures.eof = get("eof");
  r.measures.log_negativity = get("log_negativity");
  return r;
}

}  // namespace gskit
