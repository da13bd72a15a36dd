#include <catch2/catch_amalgamated.hpp>
#include <iostream>
#include <random>

#include "gapcert/oracle.hpp"

using namespace gapcert;

namespace {

PauliPoly minus_sum_z(int n) {
  PauliPoly H(n);
  for (int i = 1; i <= n; ++i) {
    PauliString s(n);
    s.set(i, Axis::Z);
    H.add_term(s, ExactComplex(-1));
  }
  return H;
}

PauliPoly random_local_hamiltonian(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-1024, 1024);
  PauliPoly H(n);
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= 3; ++a) {
      PauliString s(n);
      s.set(i, static_cast<Axis>(a));
      H.add_term(s, ExactComplex(Rational(num(rng), 1024)));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          PauliString s(n);
          s.set(i, static_cast<Axis>(a));
          s.set(j, static_cast<Axis>(b));
          H.add_term(s, ExactComplex(Rational(num(rng), 1024)));
        }
  return H;
}

ExactMatrix exact_commutator(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c;
  c.dim = a.dim;
  c.a.assign(a.a.size(), ExactComplex());
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero() && b.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.dim; ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
        c.at(i, j) -= b.at(i, k) * a.at(k, j);
      }
    }
  return c;
}

}  // namespace

TEST_CASE("spectrum of the 1-local example") {
  Spectrum s = spectrum(minus_sum_z(2));
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.eigenvalues[0] == Catch::Approx(-2.0).margin(1e-12));
  CHECK(s.eigenvalues[1] == Catch::Approx(0.0).margin(1e-12));
  CHECK(s.eigenvalues[2] == Catch::Approx(0.0).margin(1e-12));
  CHECK(s.eigenvalues[3] == Catch::Approx(2.0).margin(1e-12));
  CHECK(s.gap() == Catch::Approx(2.0).margin(1e-12));

  Spectrum s3 = spectrum(minus_sum_z(3));
  CHECK(s3.lambda1() == Catch::Approx(-3.0).margin(1e-12));
  CHECK(s3.lambda2() == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("spectrum of the identity is flat") {
  Spectrum s = spectrum(PauliPoly::identity(2));
  for (double e : s.eigenvalues) CHECK(e == Catch::Approx(1.0).margin(1e-12));
  CHECK(s.gap() == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("spectrum rejects non-Hermitian and oversized input") {
  PauliPoly bad(1);
  bad.add_term(PauliString(1, {{1, Axis::X}}), ExactComplex::i());
  CHECK_THROWS_AS(spectrum(bad), DomainError);
  CHECK_THROWS_AS(spectrum(PauliPoly::identity(7)), ResourceError);
}

TEST_CASE("antisymmetric action of the 1-local example") {
  Eigen::MatrixXcd A = antisym_action(minus_sum_z(2));
  REQUIRE(A.rows() == 6);
  auto ev = hermitian_eigenvalues(A);
  CHECK(ev.front() == Catch::Approx(-2.0).margin(1e-12));
}

TEST_CASE("antisymmetric dimensions and identity action") {
  CHECK(antisym_basis(3).size() == 28);
  Eigen::MatrixXcd I2 = antisym_action(PauliPoly::identity(2));
  CHECK((I2 - 2.0 * Eigen::MatrixXcd::Identity(6, 6)).norm() == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("min eigenvalue of the antisymmetric action is lambda1 + lambda2") {
  std::mt19937 rng(41);
  for (int n = 2; n <= 3; ++n) {
    for (int t = 0; t < 10; ++t) {
      PauliPoly H = random_local_hamiltonian(n, rng);
      Spectrum s = spectrum(H);
      auto ev = hermitian_eigenvalues(antisym_action(H));
      CHECK(ev.front() == Catch::Approx(s.lambda1() + s.lambda2()).margin(1e-9));
    }
  }
}

TEST_CASE("antisymmetric action is a Lie homomorphism, exactly") {
  // [rho(P), rho(Q)] == rho([P, Q]) for Pauli strings; this is the bridge
  // that lets relation exactness transfer to the representation.
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> ax(0, 3);
  for (int t = 0; t < 12; ++t) {
    int n = 2 + (t % 2);
    PauliString p(n), q(n);
    for (int i = 1; i <= n; ++i) {
      p.set(i, static_cast<Axis>(ax(rng)));
      q.set(i, static_cast<Axis>(ax(rng)));
    }
    ExactMatrix lhs = exact_commutator(antisym_action_exact(PauliPoly::single(p)),
                                       antisym_action_exact(PauliPoly::single(q)));
    ExactMatrix rhs = antisym_action_exact(commutator(PauliPoly::single(p), PauliPoly::single(q)));
    REQUIRE(lhs.dim == rhs.dim);
    for (std::size_t k = 0; k < lhs.a.size(); ++k) CHECK(lhs.a[k] == rhs.a[k]);
  }
}

TEST_CASE("constants table derivation") {
  ConstantsTable t = derive_constants();
  REQUIRE(t.entries.count("C4") == 1);
  const auto& c4 = t.entries.at("C4");
  CHECK(c4.value > 0);
  CHECK_FALSE(c4.procedure.empty());
  CHECK_FALSE(c4.input_hash.empty());
  std::cout << "derived C4 = " << c4.value << " (exact: " << c4.exact << ")\n";

  // bit-for-bit reproducible
  ConstantsTable t2 = derive_constants();
  CHECK(t2.entries.at("C4").value == c4.value);
  CHECK(t2.entries.at("C4").input_hash == c4.input_hash);
}

TEST_CASE("plethysm dimension counts") {
  for (int n = 1; n <= 5; ++n) {
    PlethysmReport rep = verify_plethysm(n);
    INFO("n = " << n);
    CHECK(rep.ok);
    CHECK(rep.antisym_count == rep.antisym_expected);
    CHECK(rep.sym_count == rep.sym_expected);
  }
  CHECK(verify_plethysm(2).antisym_count == 6);
  CHECK(verify_plethysm(1).antisym_count == 1);
  CHECK(verify_plethysm(3).antisym_count == 28);
  CHECK_THROWS_AS(verify_plethysm(6), ResourceError);
}

TEST_CASE("eigenvalue constraint on the representation") {
  for (int n = 1; n <= 4; ++n) {
    EigenvalueConstraintReport rep = verify_eigenvalue_constraint(n);
    INFO("n = " << n << " worst " << rep.worst_deviation << " " << rep.first_failure);
    CHECK(rep.ok);
  }
}

TEST_CASE("n=1 singlet is annihilated") {
  PauliPoly z1 = PauliPoly::single(PauliString(1, {{1, Axis::Z}}));
  ExactMatrix rho = antisym_action_exact(z1);
  REQUIRE(rho.dim == 1);
  CHECK(rho.at(0, 0).is_zero());
}
