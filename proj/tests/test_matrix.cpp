#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "gskit/errors.hpp"
#include "gskit/matrix.hpp"

using namespace gskit;

namespace {

// Local deterministic generator; keeps kernel tests independent of the
// states module.
struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double sym() { return 2.0 * uniform() - 1.0; }
};

RealMatrix random_real(Rng& rng, int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.sym();
  return m;
}

ComplexMatrix random_hermitian(Rng& rng, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = rng.sym();
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = cplx(rng.sym(), rng.sym());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

ComplexMatrix random_antihermitian(Rng& rng, int n) {
  ComplexMatrix h = random_hermitian(rng, n);
  return h * cplx(0, 1);
}

}  // namespace

TEST_CASE("det basics") {
  CHECK(det(RealMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-14));
  RealMatrix vac = RealMatrix::identity(4) * 0.5;
  CHECK(det(vac) == doctest::Approx(1.0 / 16).epsilon(1e-14));

  // standard-form determinant (ab - c1^2)(ab - c2^2)
  RealMatrix sf(4, 4);
  sf(0, 0) = sf(1, 1) = 2.0;
  sf(2, 2) = sf(3, 3) = 1.0;
  sf(0, 2) = sf(2, 0) = 0.5;
  sf(1, 3) = sf(3, 1) = -0.3;
  CHECK(det(sf) == doctest::Approx((2 - 0.25) * (2 - 0.09)).epsilon(1e-14));
  CHECK(det(sf) == doctest::Approx(3.3425).epsilon(1e-14));

  CHECK_THROWS_AS(det(RealMatrix(3, 4)), ShapeError);
}

TEST_CASE("det is multiplicative") {
  Rng rng{11};
  for (int trial = 0; trial < 50; ++trial) {
    const RealMatrix a = random_real(rng, 4);
    const RealMatrix b = random_real(rng, 4);
    const double lhs = det(a * b);
    const double rhs = det(a) * det(b);
    CHECK(std::abs(lhs - rhs) <=
          1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("det n > 4 falls back to LU") {
  RealMatrix m(5, 5);
  for (int i = 0; i < 5; ++i) m(i, i) = i + 1.0;
  m(0, 4) = 2.0;  // upper entry, does not change the determinant
  CHECK(det(m) == doctest::Approx(120.0).epsilon(1e-12));
}

TEST_CASE("inverse round trip") {
  Rng rng{12};
  for (int trial = 0; trial < 20; ++trial) {
    RealMatrix a = random_real(rng, 4);
    for (int i = 0; i < 4; ++i) a(i, i) += 4.0;  // keep well-conditioned
    const RealMatrix r = a * inverse(a) - RealMatrix::identity(4);
    CHECK(r.max_abs() < 1e-12);
  }
}

TEST_CASE("hermitian_eig diagonal and 2x2 cases") {
  ComplexMatrix d(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const auto e = hermitian_eig(d, false);
  CHECK(e.values[0] == doctest::Approx(1));
  CHECK(e.values[1] == doctest::Approx(2));
  CHECK(e.values[2] == doctest::Approx(3));

  ComplexMatrix x(2, 2);
  x(0, 1) = 1;
  x(1, 0) = 1;
  const auto ex = hermitian_eig(x, false);
  CHECK(ex.values[0] == doctest::Approx(-1));
  CHECK(ex.values[1] == doctest::Approx(1));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx(1, 0);
  m(1, 0) = cplx(1, 1e-3);
  CHECK_THROWS_AS(hermitian_eig(m), Error);
}

TEST_CASE("hermitian_eig reconstruction at moderate size") {
  Rng rng{13};
  for (int n : {5, 40, 120}) {
    const ComplexMatrix m = random_hermitian(rng, n);
    const auto e = hermitian_eig(m);
    // V Lambda V^dag = m
    ComplexMatrix vl = e.vectors;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) vl(i, j) *= e.values[j];
    const ComplexMatrix rec = vl * e.vectors.adjoint();
    CHECK((rec - m).frobenius() < 1e-8 * std::max(1.0, m.frobenius()));
    for (int i = 1; i < n; ++i) CHECK(e.values[i - 1] <= e.values[i]);
  }
}

TEST_CASE("hermitian_eig residual per pair") {
  Rng rng{14};
  const int n = 60;
  const ComplexMatrix m = random_hermitian(rng, n);
  const auto e = hermitian_eig(m);
  const ComplexMatrix mv = m * e.vectors;
  const double scale = m.frobenius();
  for (int j = 0; j < n; ++j) {
    double res = 0;
    for (int i = 0; i < n; ++i)
      res += std::norm(mv(i, j) - e.values[j] * e.vectors(i, j));
    CHECK(std::sqrt(res) <= 1e-9 * scale);
  }
}

TEST_CASE("complex_eigvals") {
  CHECK_THROWS_AS(complex_eigvals(ComplexMatrix::identity(5)), Error);

  const auto id = complex_eigvals(ComplexMatrix::identity(4));
  for (const auto& v : id) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

  // i Omega (I/2): eigenvalues +-1/2 twice
  ComplexMatrix m(4, 4);
  const double w[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0},
                          {0, 0, 0, 1}, {0, 0, -1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = cplx(0, 0.5 * w[i][j]);
  auto eigs = complex_eigvals(m);
  int pos = 0, neg = 0;
  for (const auto& v : eigs) {
    CHECK(std::abs(std::abs(v) - 0.5) < 1e-12);
    (v.real() > 0 ? pos : neg)++;
  }
  CHECK(pos == 2);
  CHECK(neg == 2);
}

TEST_CASE("complex_eigvals matches trace and determinant") {
  Rng rng{15};
  for (int trial = 0; trial < 30; ++trial) {
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = cplx(rng.sym(), rng.sym());
    const auto eigs = complex_eigvals(m);
    cplx sum = 0, tr = 0;
    for (const auto& v : eigs) sum += v;
    for (int i = 0; i < 4; ++i) tr += m(i, i);
    CHECK(std::abs(sum - tr) < 1e-9);
  }
}

TEST_CASE("expm basics") {
  const ComplexMatrix z(3, 3);
  CHECK((expm(z) - ComplexMatrix::identity(3)).max_abs() < 1e-14);

  ComplexMatrix d(2, 2);
  d(0, 0) = std::log(2.0);
  d(1, 1) = std::log(3.0);
  const ComplexMatrix e = expm(d);
  CHECK(std::abs(e(0, 0) - cplx(2, 0)) < 1e-13);
  CHECK(std::abs(e(1, 1) - cplx(3, 0)) < 1e-13);
  CHECK(std::abs(e(0, 1)) < 1e-14);
}

TEST_CASE("expm of i pi n on cutoff-5 Fock space") {
  ComplexMatrix gen(6, 6);
  for (int k = 0; k < 6; ++k) gen(k, k) = cplx(0, 3.14159265358979323846 * k);
  const ComplexMatrix u = expm(gen);
  for (int k = 0; k < 6; ++k)
    CHECK(std::abs(u(k, k) - cplx(k % 2 ? -1.0 : 1.0, 0)) < 1e-12);
}

TEST_CASE("expm inverse identity for anti-Hermitian generators") {
  Rng rng{16};
  for (int n : {8, 60}) {
    const ComplexMatrix x = random_antihermitian(rng, n);
    ComplexMatrix neg = x * cplx(-1, 0);
    const ComplexMatrix r = expm(x) * expm(neg) - ComplexMatrix::identity(n);
    CHECK(r.frobenius() < 1e-8);
    // unitarity
    const ComplexMatrix u = expm(x);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(n)).frobenius() < 1e-8);
  }
}

TEST_CASE("expm rejects non-finite input") {
  ComplexMatrix m(2, 2);
  m(0, 0) = cplx(std::nan(""), 0);
  CHECK_THROWS_AS(expm(m), Error);
}

TEST_CASE("kron dimensions and values") {
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 1) = 3;
  b(0, 0) = 5;
  b(1, 0) = 7;
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 0) - cplx(5, 0)) < 1e-15);
  CHECK(std::abs(k(1, 2) - cplx(14, 0)) < 1e-15);
  CHECK(std::abs(k(3, 2) - cplx(21, 0)) < 1e-15);
}

TEST_CASE("solve") {
  Rng rng{17};
  ComplexMatrix a(4, 4), b(4, 2);
  for (int i = 0; i < 4; ++i) {
    a(i, i) = cplx(4 + rng.sym(), 0);
    for (int j = 0; j < 4; ++j)
      if (i != j) a(i, j) = cplx(rng.sym(), rng.sym());
    for (int j = 0; j < 2; ++j) b(i, j) = cplx(rng.sym(), rng.sym());
  }
  const ComplexMatrix x = solve(a, b);
  CHECK((a * x - b).max_abs() < 1e-12);
}
