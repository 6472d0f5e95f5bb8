#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "gskit/errors.hpp"
#include "gskit/fock.hpp"
#include "gskit/measures.hpp"
#include "gskit/states.hpp"

using namespace gskit;

namespace {

double max_abs(const ComplexMatrix& m) {
  double mx = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) mx = std::max(mx, std::abs(m(i, j)));
  return mx;
}

double unitarity_defect(const ComplexMatrix& u) {
  ComplexMatrix g = u.adjoint() * u;
  for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return max_abs(g);
}

TwoModeCov tmsv(double r) {
  StateSpec spec;
  spec.kind = StateKind::tmsv;
  spec.r = r;
  return make_state(spec);
}

}  // namespace

TEST_CASE("ladder operators") {
  const int n = 8;
  const LadderOps ops = ladder_ops(n);
  CHECK(ops.a.rows() == n + 1);

  // a|k> = sqrt(k)|k-1>
  for (int k = 1; k <= n; ++k)
    CHECK(std::abs(ops.a(k - 1, k) - std::sqrt(double(k))) < 1e-15);

  // [a, a^dag] = 1 away from the truncation edge
  const ComplexMatrix comm = ops.a * ops.adag - ops.adag * ops.a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double want = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(comm(i, j) - want) < 1e-14);
    }
  }
  CHECK((ops.number - ops.adag * ops.a).frobenius() < 1e-14);
}

TEST_CASE("thermal density matrix") {
  const FockDM vac = thermal_dm(0.0, 6);
  CHECK(std::abs(vac.rho(0, 0).real() - 1.0) < 1e-15);
  CHECK(vac.trace_deficit == 0.0);
  CHECK(purity_fock(vac) == doctest::Approx(1.0).epsilon(1e-14));

  const FockDM th = thermal_dm(1.0, 60);
  CHECK(th.trace_deficit < 1e-15);
  // diagonal, geometric populations
  CHECK(std::abs(th.rho(3, 3).real() - std::pow(0.5, 4)) < 1e-15);
  CHECK(std::abs(th.rho(0, 1)) == 0.0);
  CHECK(entropy_fock(th) == doctest::Approx(2 * std::log(2.0)).epsilon(1e-10));
  CHECK(purity_fock(th) == doctest::Approx(1.0 / 3).epsilon(1e-10));

  // hot state at a tiny cutoff: deficit too large
  CHECK_THROWS_AS(thermal_dm(5.0, 8), Error);
}

TEST_CASE("elementary unitaries are unitary") {
  CHECK(unitarity_defect(gaussian_unitary(UnitaryKind::phase, 0.7, 20)) <
        1e-13);
  CHECK(unitarity_defect(
            gaussian_unitary(UnitaryKind::single_squeeze, 0.6, 20)) < 1e-12);
  CHECK(unitarity_defect(
            gaussian_unitary(UnitaryKind::beamsplitter, 0.9, 10)) < 1e-12);
  CHECK(unitarity_defect(
            gaussian_unitary(UnitaryKind::two_mode_squeeze, 0.4, 10)) < 1e-12);
}

TEST_CASE("beamsplitter preserves total photon number") {
  const int n = 8, d = n + 1;
  const ComplexMatrix u = gaussian_unitary(UnitaryKind::beamsplitter, 0.8, n);
  for (int k1 = 0; k1 <= n; ++k1)
    for (int k2 = 0; k2 <= n; ++k2)
      for (int l1 = 0; l1 <= n; ++l1)
        for (int l2 = 0; l2 <= n; ++l2)
          if (k1 + k2 != l1 + l2)
            CHECK(std::abs(u(k1 * d + k2, l1 * d + l2)) < 1e-14);
}

TEST_CASE("convention selftest passes") {
  CHECK_NOTHROW(convention_selftest(14));
}

TEST_CASE("squeeze on vacuum matches the symplectic pushforward") {
  const double r = 0.4;
  const FockDM vac = thermal_dm(0.0, 30);
  const ComplexMatrix u =
      gaussian_unitary(UnitaryKind::single_squeeze, r, 30);
  FockDM sq = vac;
  sq.rho = u * vac.rho * u.adjoint();
  const RealMatrix cov = cov_from_fock(sq);
  CHECK(cov(0, 0) == doctest::Approx(std::exp(2 * r) / 2).epsilon(1e-10));
  CHECK(cov(1, 1) == doctest::Approx(std::exp(-2 * r) / 2).epsilon(1e-10));
  CHECK(std::abs(cov(0, 1)) < 1e-10);
}

TEST_CASE("single_mode_unitary matches an arbitrary 2x2 symplectic") {
  SplitMix64 rng(7);
  const int n = 30;
  for (int trial = 0; trial < 3; ++trial) {
    const RealMatrix s = rotation2(rng.uniform(0, 6.28)) *
                         squeeze2(rng.uniform(-0.5, 0.5)) *
                         rotation2(rng.uniform(0, 6.28));
    const ComplexMatrix u = single_mode_unitary(s, n);
    CHECK(unitarity_defect(u) < 1e-11);
    FockDM st = thermal_dm(0.3, n);
    st.rho = u * st.rho * u.adjoint();
    const RealMatrix want = s.transpose() *
                            (RealMatrix::identity(2) * 0.8) * s;
    CHECK((cov_from_fock(st) - want).max_abs() < 1e-5);
  }
}

TEST_CASE("partial trace of a product state is exact") {
  const FockDM t1 = thermal_dm(0.6, 22);
  const FockDM t2 = thermal_dm(1.1, 22);
  FockDM prod{22, 2, kron(t1.rho, t2.rho), 0.0};
  CHECK((partial_trace(prod, 1).rho - t1.rho * (1.0 - t2.trace_deficit))
            .frobenius() < 1e-13);
  CHECK((partial_trace(prod, 2).rho - t2.rho * (1.0 - t1.trace_deficit))
            .frobenius() < 1e-13);
  CHECK_THROWS_AS(partial_trace(t1, 1), ShapeError);
  CHECK_THROWS_AS(partial_trace(prod, 3), ParamError);
}

TEST_CASE("partial transpose reshuffle") {
  const FockDM t1 = thermal_dm(0.5, 14);
  const FockDM t2 = thermal_dm(0.2, 14);
  FockDM prod{14, 2, kron(t1.rho, t2.rho), 0.0};
  const ComplexMatrix pt = partial_transpose_fock(prod);
  // diagonal product state: invariant under transposition of either factor
  CHECK((pt - prod.rho).frobenius() < 1e-15);
  // a separable state has no negativity
  CHECK(negativity_fock(prod) < 1e-12);
}

TEST_CASE("TMSV in the Fock basis") {
  const double r = 0.5;
  const int n = 24;
  const Lemma1Factors f = lemma1_factor(tmsv(r));
  const FockDM dm = build_state(f, n);
  CHECK(dm.trace_deficit < 1e-10);

  // covariance round trip
  CHECK((cov_from_fock(dm) - tmsv(r).m()).max_abs() < 1e-6);

  // globally pure
  CHECK(purity_fock(dm) == doctest::Approx(1.0).epsilon(1e-8));

  // reduced state: thermal with nbar = sinh^2 r (geometric populations)
  const FockDM red = partial_trace(dm, 1);
  const double nbar = std::sinh(r) * std::sinh(r);
  for (int k = 0; k <= 6; ++k) {
    const double want = std::pow(nbar / (1 + nbar), k) / (1 + nbar);
    CHECK(red.rho(k, k).real() == doctest::Approx(want).epsilon(1e-7));
  }
  CHECK(entropy_fock(red) ==
        doctest::Approx(f_entropy(std::cosh(2 * r) / 2)).epsilon(1e-7));

  // || rho^T2 ||_1 = e^{2r} for the TMSV
  CHECK(negativity_fock(dm) ==
        doctest::Approx((std::exp(2 * r) - 1) / 2).epsilon(2e-4));
}

TEST_CASE("random state round trip through the Fock oracle") {
  const RandomState st = random_valid(17, 0.8, 0.4);
  const FockDM dm = build_state(st.factors, 24);
  CHECK((cov_from_fock(dm) - st.sigma.m()).max_abs() < 2e-2);
  CHECK(std::abs(entropy_fock(dm) - von_neumann_two(st.sigma)) < 1e-3);
  CHECK(std::abs(purity_fock(dm) - purity(st.sigma)) < 1e-3);
}

TEST_CASE("trace deficit shrinks with the cutoff") {
  const RandomState st = random_valid(23, 1.0, 0.5);
  double prev = 1.0;
  for (int n : {20, 24, 28}) {
    const FockDM dm = build_state(st.factors, n);
    CHECK(dm.trace_deficit <= prev + 1e-15);
    prev = dm.trace_deficit;
  }
}
