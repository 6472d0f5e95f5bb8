#include "gskit/states.hpp"

#include <cmath>

#include "gskit/errors.hpp"
#include "gskit/tolerances.hpp"

namespace gskit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

RealMatrix thermal4(double nu1, double nu2) {
  RealMatrix m(4, 4);
  m(0, 0) = m(1, 1) = nu1;
  m(2, 2) = m(3, 3) = nu2;
  return m;
}

// The entangling two-mode squeezer R(pi/4)^T S_tm(r) R(pi/4): x-sector
// [[cosh, sinh], [sinh, cosh]], p-sector with the sign of sinh flipped.
// Distinct from the local factor two_mode_squeeze(r) = S_loc(r, -r).
RealMatrix tms_entangling(double r) {
  const double ch = std::cosh(r), sh = std::sinh(r);
  RealMatrix s(4, 4);
  s(0, 0) = s(1, 1) = s(2, 2) = s(3, 3) = ch;
  s(0, 2) = s(2, 0) = sh;
  s(1, 3) = s(3, 1) = -sh;
  return s;
}

}  // namespace

StateKind state_kind_from_name(const std::string& name) {
  if (name == "vacuum") return StateKind::vacuum;
  if (name == "thermal") return StateKind::thermal;
  if (name == "squeezed_thermal") return StateKind::squeezed_thermal;
  if (name == "tmsv") return StateKind::tmsv;
  if (name == "tms_thermal") return StateKind::tms_thermal;
  if (name == "standard_form") return StateKind::standard_form;
  throw ParamError("unknown state kind '" + name + "'");
}

const char* state_kind_name(StateKind k) {
  switch (k) {
    case StateKind::vacuum: return "vacuum";
    case StateKind::thermal: return "thermal";
    case StateKind::squeezed_thermal: return "squeezed_thermal";
    case StateKind::tmsv: return "tmsv";
    case StateKind::tms_thermal: return "tms_thermal";
    case StateKind::standard_form: return "standard_form";
  }
  return "?";
}

TwoModeCov make_state(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::vacuum:
      return validate(RealMatrix::identity(4) * 0.5);
    case StateKind::thermal: {
      if (spec.nbar1 < 0 || spec.nbar2 < 0)
        throw ParamError("thermal: mean photon numbers must be >= 0");
      return validate(thermal4(spec.nbar1 + 0.5, spec.nbar2 + 0.5));
    }
    case StateKind::tmsv: {
      const RealMatrix s = tms_entangling(spec.r);
      return validate(s.transpose() * (RealMatrix::identity(4) * 0.5) * s);
    }
    case StateKind::tms_thermal: {
      if (spec.nbar1 < 0 || spec.nbar2 < 0)
        throw ParamError("tms_thermal: mean photon numbers must be >= 0");
      const RealMatrix s = tms_entangling(spec.r);
      const RealMatrix nu = thermal4(spec.nbar1 + 0.5, spec.nbar2 + 0.5);
      return validate(s.transpose() * nu * s);
    }
    case StateKind::standard_form: {
      if (spec.a <= 0 || spec.b <= 0)
        throw ParamError("standard_form: a and b must be positive");
      RealMatrix m(4, 4);
      m(0, 0) = m(1, 1) = spec.a;
      m(2, 2) = m(3, 3) = spec.b;
      m(0, 2) = m(2, 0) = spec.c1;
      m(1, 3) = m(3, 1) = spec.c2;
      return validate(m);  // throws UnphysicalError when out of range
    }
    default:
      throw ParamError("state kind is single-mode; use make_single_mode");
  }
}

RealMatrix make_single_mode(const StateSpec& spec) {
  if (spec.nbar1 < 0)
    throw ParamError("single-mode state: mean photon number must be >= 0");
  RealMatrix nu(2, 2);
  nu(0, 0) = nu(1, 1) = spec.nbar1 + 0.5;
  switch (spec.kind) {
    case StateKind::thermal:
      return nu;
    case StateKind::squeezed_thermal: {
      const RealMatrix s = squeeze2(spec.r);
      return s.transpose() * nu * s;
    }
    default:
      throw ParamError("state kind is two-mode; use make_state");
  }
}

RandomState random_valid(std::uint64_t seed, double max_thermal,
                         double max_squeeze) {
  if (max_thermal < 0 || max_squeeze < 0)
    throw ParamError("random_valid: bounds must be non-negative");
  SplitMix64 rng(seed);
  // Draw order is part of the corpus definition; do not reorder.
  double nb1 = rng.uniform(0, max_thermal);
  double nb2 = rng.uniform(0, max_thermal);
  if (nb1 > nb2) std::swap(nb1, nb2);
  Lemma1Factors f{};
  f.eta = rng.uniform(0, kTwoPi);
  f.xi = rng.uniform(0, kTwoPi);
  f.r = rng.uniform(-max_squeeze, max_squeeze);
  f.r1 = rng.uniform(-max_squeeze, max_squeeze);
  f.r2 = rng.uniform(-max_squeeze, max_squeeze);
  RealMatrix sl(4, 4);
  for (int mode = 0; mode < 2; ++mode) {
    const double ta = rng.uniform(0, kTwoPi);
    const double sq = rng.uniform(-max_squeeze, max_squeeze);
    const double tb = rng.uniform(0, kTwoPi);
    const RealMatrix s = rotation2(ta) * squeeze2(sq) * rotation2(tb);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sl(2 * mode + i, 2 * mode + j) = s(i, j);
  }
  f.s_l = {sl};
  f.nu1 = nb1 + 0.5;
  f.nu2 = nb2 + 0.5;

  const RealMatrix a = lemma1_compose(f);
  const RealMatrix nu = thermal4(f.nu1, f.nu2);
  RealMatrix sigma = a.transpose() * nu * a;
  for (int i = 0; i < 4; ++i)  // scrub round-off asymmetry
    for (int j = i + 1; j < 4; ++j) {
      const double v = 0.5 * (sigma(i, j) + sigma(j, i));
      sigma(i, j) = v;
      sigma(j, i) = v;
    }
  return {validate(sigma), f, nu};
}

std::vector<RandomState> verification_corpus(std::uint64_t base_seed,
                                             int count, double max_thermal,
                                             double max_squeeze,
                                             double margin) {
  // Both PPT verdicts must appear, so keep the two classes balanced:
  // at least a third of the corpus on each side of the boundary.
  const int quota = (count + 2) / 3;
  std::vector<RandomState> sep, ent;
  std::uint64_t seed = base_seed;
  while (int(sep.size() + ent.size()) < count) {
    RandomState st = random_valid(seed++, max_thermal, max_squeeze);
    const double nt = pt_spectrum(st.sigma).n_minus;
    if (std::abs(nt - 0.5) < margin) continue;  // boundary state, skip
    auto& side = nt > 0.5 ? sep : ent;
    auto& other = nt > 0.5 ? ent : sep;
    if (int(side.size()) >= count - quota &&
        int(other.size()) < quota)
      continue;  // hold the slot for the under-represented class
    side.push_back(std::move(st));
  }
  std::vector<RandomState> out;
  out.reserve(count);
  for (auto& st : sep) out.push_back(std::move(st));
  for (auto& st : ent) out.push_back(std::move(st));
  return out;
}

}  // namespace gskit
