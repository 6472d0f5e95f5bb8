#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gskit/gaussian.hpp"

// Constructors for canonical Gaussian states plus a deterministic random
// valid-state generator for property tests and verification corpora.

namespace gskit {

enum class StateKind {
  vacuum,           // two-mode vacuum I/2
  thermal,          // diag(nbar1+1/2, ..) x diag(nbar2+1/2, ..) or single mode
  squeezed_thermal, // single mode, S sq thermal S^T
  tmsv,             // two-mode squeezed vacuum
  tms_thermal,      // two-mode squeezed thermal
  standard_form,    // the (a, b, c1, c2) matrix verbatim
};

StateKind state_kind_from_name(const std::string& name);
const char* state_kind_name(StateKind k);

struct StateSpec {
  StateKind kind = StateKind::vacuum;
  double nbar1 = 0, nbar2 = 0;
  double r = 0;          // squeezing (tmsv, tms_thermal, squeezed_thermal)
  double a = 0.5, b = 0.5, c1 = 0, c2 = 0;
  bool single_mode = false;  // thermal with one mode only
};

// Two-mode constructor; throws ParamError/UnphysicalError for bad specs.
TwoModeCov make_state(const StateSpec& spec);

// Single-mode kinds (thermal with single_mode, squeezed_thermal): 2x2.
RealMatrix make_single_mode(const StateSpec& spec);

// SplitMix64: the documented generator behind every seeded corpus, chosen
// so corpora are reproducible across implementations. Uniform doubles are
// (x >> 11) * 2^-53 on successive outputs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t s_;
};

struct RandomState {
  TwoModeCov sigma;
  Lemma1Factors factors;  // generating decomposition, ground truth
  RealMatrix nu;          // sampled thermal diagonal, nu(0,0) <= nu(2,2)
};

// Samples the Lemma-1 decomposition: random thermal diagonal conjugated by
// random factors. Always produces a valid state.
RandomState random_valid(std::uint64_t seed, double max_thermal,
                         double max_squeeze);

// Deterministic mixed-state corpus for oracle verification: states drawn
// with SplitMix64 from base_seed, skipping any draw whose partial-transpose
// spectrum sits within `margin` of the separability boundary.
std::vector<RandomState> verification_corpus(std::uint64_t base_seed,
                                             int count, double max_thermal,
                                             double max_squeeze,
                                             double margin);

}  // namespace gskit
