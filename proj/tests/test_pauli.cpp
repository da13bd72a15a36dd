#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gapcert/pauli.hpp"

using namespace gapcert;

namespace {

PauliString random_string(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> ax(0, 3);
  PauliString s(n);
  for (int i = 1; i <= n; ++i) s.set(i, static_cast<Axis>(ax(rng)));
  return s;
}

PauliPoly random_poly(int n, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  PauliPoly p(n);
  for (int t = 0; t < terms; ++t) {
    ExactComplex c(Rational(num(rng), 4), Rational(num(rng), 4));
    p.add_term(random_string(n, rng), c);
  }
  return p;
}

bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    if (a.a[i] != b.a[i]) return false;
  return true;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c;
  c.dim = a.dim;
  c.a.assign(a.a.size(), ExactComplex());
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.dim; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace

TEST_CASE("single-site products") {
  PauliString x1(1, {{1, Axis::X}});
  PauliString y1(1, {{1, Axis::Y}});
  PauliString z1(1, {{1, Axis::Z}});

  auto [p, r] = mul_strings(x1, y1);
  CHECK(p == ExactComplex::i());
  CHECK(r == z1);

  auto [p2, r2] = mul_strings(z1, z1);
  CHECK(p2 == ExactComplex(1));
  CHECK(r2.is_identity());
}

TEST_CASE("disjoint supports multiply with phase 1") {
  PauliString x1(2, {{1, Axis::X}});
  PauliString y2(2, {{2, Axis::Y}});
  auto [p, r] = mul_strings(x1, y2);
  CHECK(p == ExactComplex(1));
  CHECK(r == PauliString(2, {{1, Axis::X}, {2, Axis::Y}}));
}

TEST_CASE("mismatched site counts are rejected") {
  CHECK_THROWS_AS(mul_strings(PauliString(1), PauliString(2)), DimensionError);
  CHECK_THROWS_AS(PauliPoly::identity(2) + PauliPoly::identity(3), DimensionError);
}

TEST_CASE("commutators") {
  auto X1 = PauliPoly::single(PauliString(1, {{1, Axis::X}}));
  auto Y1 = PauliPoly::single(PauliString(1, {{1, Axis::Y}}));
  PauliPoly expect = PauliPoly::single(PauliString(1, {{1, Axis::Z}}),
                                       ExactComplex(Rational(0), Rational(2)));
  CHECK(commutator(X1, Y1) == expect);

  auto XX = PauliPoly::single(PauliString(2, {{1, Axis::X}, {2, Axis::X}}));
  auto XY = PauliPoly::single(PauliString(2, {{1, Axis::X}, {2, Axis::Y}}));
  PauliPoly expect2 = PauliPoly::single(PauliString(2, {{2, Axis::Z}}),
                                        ExactComplex(Rational(0), Rational(2)));
  CHECK(commutator(XX, XY) == expect2);

  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    PauliPoly p = random_poly(3, 4, rng);
    CHECK(commutator(p, p).is_zero());
  }
}

TEST_CASE("jacobi identity holds exactly") {
  std::mt19937 rng(11);
  for (int t = 0; t < 8; ++t) {
    PauliPoly a = random_poly(3, 3, rng);
    PauliPoly b = random_poly(3, 3, rng);
    PauliPoly c = random_poly(3, 3, rng);
    PauliPoly j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                  commutator(c, commutator(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("adjoint properties") {
  std::mt19937 rng(13);
  for (int t = 0; t < 6; ++t) {
    PauliPoly p = random_poly(2, 4, rng);
    PauliPoly q = random_poly(2, 4, rng);
    CHECK(p.adjoint().adjoint() == p);
    CHECK((p * q).adjoint() == q.adjoint() * p.adjoint());
  }
}

TEST_CASE("mixed state moment") {
  CHECK(mixed_state_moment(PauliPoly::identity(2)) == ExactComplex(1));
  CHECK(mixed_state_moment(PauliPoly::single(PauliString(1, {{1, Axis::Z}}))).is_zero());

  PauliPoly p = PauliPoly::identity(2).scaled(ExactComplex(3));
  p.add_term(PauliString(2, {{1, Axis::X}, {2, Axis::Y}}),
             ExactComplex(Rational(0), Rational(2)));
  CHECK(mixed_state_moment(p) == ExactComplex(3));
}

TEST_CASE("moment of p* p is real and non-negative") {
  std::mt19937 rng(17);
  for (int t = 0; t < 8; ++t) {
    PauliPoly p = random_poly(2, 4, rng);
    ExactComplex m = mixed_state_moment(p * p.adjoint());
    CHECK(m.is_real());
    CHECK(m.re >= 0);
  }
}

TEST_CASE("matrices of small strings") {
  auto Z1 = to_matrix_exact(PauliPoly::single(PauliString(1, {{1, Axis::Z}})));
  CHECK(Z1.at(0, 0) == ExactComplex(1));
  CHECK(Z1.at(1, 1) == ExactComplex(-1));
  CHECK(Z1.at(0, 1).is_zero());

  auto I2 = to_matrix_exact(PauliPoly::identity(2));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(I2.at(r, c) == (r == c ? ExactComplex(1) : ExactComplex()));

  // X on site 1 with n=2 is X (x) I
  auto X1 = to_matrix_exact(PauliPoly::single(PauliString(2, {{1, Axis::X}})));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(X1.at(r, c) == ((r ^ 2) == c ? ExactComplex(1) : ExactComplex()));
}

TEST_CASE("to_matrix respects products exactly") {
  std::mt19937 rng(23);
  for (int t = 0; t < 6; ++t) {
    PauliString p = random_string(3, rng);
    PauliString q = random_string(3, rng);
    auto [phase, r] = mul_strings(p, q);
    ExactMatrix lhs = mat_mul(to_matrix_exact(PauliPoly::single(p)),
                              to_matrix_exact(PauliPoly::single(q)));
    ExactMatrix rhs = to_matrix_exact(PauliPoly::single(r, phase));
    CHECK(matrices_equal(lhs, rhs));
  }
}

TEST_CASE("to_matrix respects adjoints") {
  std::mt19937 rng(29);
  PauliPoly p = random_poly(2, 5, rng);
  ExactMatrix m = to_matrix_exact(p);
  ExactMatrix ma = to_matrix_exact(p.adjoint());
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) CHECK(ma.at(r, c) == m.at(c, r).conj());
}

TEST_CASE("site cap enforced") {
  CHECK_THROWS_AS(to_matrix_exact(PauliPoly::identity(7)), ResourceError);
}
