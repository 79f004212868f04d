// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nhgap/errors.hpp"
#include "nhgap/lindblad.hpp"
#include "nhgap/oracle.hpp"

using namespace nhgap;

namespace {

// Row-major stacking: vec(rho)(i*d + j) = rho(i, j).
CVector vec_rm(const CMatrix& rho) {
  const long d = rho.rows();
  CVector v(d * d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) v(i * d + j) = rho(i, j);
  return v;
}

CMatrix random_density(long d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

LindbladSpec random_spec(long n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uc(0.1, 1.0);
  std::uniform_int_distribution<int> ul(0, 3);
  std::uniform_int_distribution<int> up(0, 3);
  const char* letters = "IXYZ";
  auto random_term = [&]() {
    PauliTerm t;
    for (long q = 0; q < n; ++q) t.word += letters[ul(rng)];
    t.phase = up(rng) % 2 == 0 ? 0 : 2;  // real phases keep H Hermitian
    return t;
  };
  LindbladSpec spec;
  spec.n = n;
  for (int k = 0; k < 2; ++k) spec.hamiltonian.emplace_back(uc(rng), random_term());
  for (int mu = 0; mu < 2; ++mu) {
    std::vector<std::pair<double, PauliTerm>> terms;
    for (int k = 0; k < 2; ++k) terms.emplace_back(uc(rng), random_term());
    spec.dissipators.push_back(terms);
  }
  return spec;
}

}  // namespace

TEST_CASE("dense Pauli words") {
  PauliTerm x{Complex(1, 0), "X", 0};
  CMatrix mx = dense_pauli(x);
  CHECK(mx(0, 1) == Complex(1, 0));
  CHECK(mx(1, 0) == Complex(1, 0));
  PauliTerm iy{Complex(1, 0), "Y", 1};  // i * Y is real
  CMatrix miy = dense_pauli(iy);
  CHECK(miy(0, 1) == Complex(1, 0));
  CHECK(miy(1, 0) == Complex(-1, 0));
  PauliTerm zz{Complex(1, 0), "ZZ", 0};
  CMatrix mzz = dense_pauli(zz);
  CHECK(mzz(0, 0) == Complex(1, 0));
  CHECK(mzz(3, 3) == Complex(1, 0));
  CHECK(mzz(1, 1) == Complex(-1, 0));
}

TEST_CASE("vectorization reproduces the superoperator action") {
  std::mt19937_64 rng(151);
  for (int t = 0; t < 5; ++t) {
    LindbladSpec spec = random_spec(2, rng);
    VectorizedLiouvillian v = vectorize(spec);
    REQUIRE(v.dense.has_value());
    for (int s = 0; s < 20; ++s) {
      CMatrix rho = random_density(4, rng);
      CVector lhs = *v.dense * vec_rm(rho);
      CVector rhs = vec_rm(apply_lindblad(spec, rho));
      CHECK((lhs - rhs).norm() < 1e-10);
    }
  }
}

TEST_CASE("term-list normalization stays within twice the channel weight") {
  std::mt19937_64 rng(157);
  for (int t = 0; t < 10; ++t) {
    LindbladSpec spec = random_spec(2, rng);
    VectorizedLiouvillian v = vectorize(spec);
    double sum = 0.0;
    for (const auto& [beta, term] : v.terms) {
      CHECK(beta > 0.0);
      sum += beta;
    }
    CHECK(v.c_tilde == doctest::Approx(sum).epsilon(1e-9));
    CHECK(v.c_tilde <= 2.0 * lcu_normalization(spec) + 1e-9);
  }
}

TEST_CASE("pure dephasing has the analytic generator") {
  LindbladSpec spec;
  spec.n = 1;
  spec.dissipators.push_back({{0.25, PauliTerm{Complex(1, 0), "Z", 0}}});
  VectorizedLiouvillian v = vectorize(spec);
  REQUIRE(v.dense.has_value());
  // L~ = eta (ZZ - II): eigenvalues {0, 0, -2 eta, -2 eta}.
  Spectrum s = eigensolve(*v.dense);
  int zeros = 0, gapped = 0;
  for (long j = 0; j < 4; ++j) {
    if (std::abs(s.eigenvalues(j)) < 1e-12) ++zeros;
    if (std::abs(s.eigenvalues(j) - Complex(-0.5, 0.0)) < 1e-12) ++gapped;
  }
  CHECK(zeros == 2);
  CHECK(gapped == 2);
  CHECK(v.c_tilde == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("liouvillian gap of dephasing and damping channels") {
  FqedConfig cfg;
  {
    LindbladSpec spec;
    spec.n = 1;
    spec.dissipators.push_back({{0.25, PauliTerm{Complex(1, 0), "Z", 0}}});
    GapReport rep = liouvillian_gap(spec, 0.05, cfg);
    CHECK(std::abs(rep.estimate.real() + 0.5) <= 0.05 + 1e-9);
  }
  {
    // Amplitude damping at rate eta: jump sqrt(eta) (X - iY)/2, written as
    // the two-term dissipator 0.25 eta (X + (-i)(iY)) ... encoded directly:
    const double eta = 0.2;
    LindbladSpec spec;
    spec.n = 1;
    spec.dissipators.push_back(
        {{eta / 4.0, PauliTerm{Complex(1, 0), "X", 0}},
         {eta / 4.0, PauliTerm{Complex(1, 0), "Y", 3}}});
    VectorizedLiouvillian v = vectorize(spec);
    REQUIRE(v.dense.has_value());
    // Dense-oracle gap: smallest nonzero |Re|.
    Spectrum s = eigensolve(*v.dense);
    double truth = 1e300;
    for (long j = 0; j < 4; ++j) {
      double re = std::abs(s.eigenvalues(j).real());
      if (re > 1e-9) truth = std::min(truth, re);
    }
    GapReport rep = liouvillian_gap(spec, 0.01, cfg);
    CHECK(std::abs(std::abs(rep.estimate.real()) - truth) <= 0.01 + 1e-9);
  }
}

TEST_CASE("purely Hamiltonian specs violate the gap promise") {
  LindbladSpec spec;
  spec.n = 1;
  spec.hamiltonian.emplace_back(0.5, PauliTerm{Complex(1, 0), "Z", 0});
  FqedConfig cfg;
  CHECK_THROWS_AS(liouvillian_gap(spec, 0.05, cfg), PromiseViolation);
}

TEST_CASE("spec parsing enforces the schema") {
  CHECK_THROWS_AS(parse_lindblad_spec("{"), SchemaError);
  CHECK_THROWS_AS(parse_lindblad_spec(R"({"n": 1})"), SchemaError);
  CHECK_THROWS_AS(
      parse_lindblad_spec(
          R"({"n": 1, "hamiltonian": [], "dissipators": [], "extra": 1})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_lindblad_spec(
          R"({"n": 1, "hamiltonian": [{"coeff": 1.0, "pauli": "Q", "phase": "+1"}], "dissipators": []})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_lindblad_spec(
          R"({"n": 1, "hamiltonian": [{"coeff": -1.0, "pauli": "Z", "phase": "+1"}], "dissipators": []})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_lindblad_spec(
          R"({"n": 1, "hamiltonian": [{"coeff": 1.0, "pauli": "Z", "phase": "2"}], "dissipators": []})"),
      SchemaError);
  LindbladSpec ok = parse_lindblad_spec(
      R"({"n": 2, "hamiltonian": [{"coeff": 0.5, "pauli": "ZI", "phase": "-1"}],
          "dissipators": [[{"coeff": 0.1, "pauli": "XY", "phase": "+i"}]]})");
  CHECK(ok.n == 2);
  CHECK(ok.hamiltonian.size() == 1);
  CHECK(ok.hamiltonian[0].second.phase == 2);
  CHECK(ok.dissipators.size() == 1);
  CHECK(ok.dissipators[0][0].second.phase == 1);
}
