#include <random>

#include "colorlie/linalg.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace colorlie;

TEST_CASE("rank of small matrices") {
  QMatrix m(3, 3);
  m.at(0, 0) = Scalar(1);
  m.at(1, 1) = Scalar(2);
  m.at(2, 2) = Scalar::rational(1, 3);
  CHECK(rank_fraction_free(m) == 3);

  QMatrix z(4, 2);
  CHECK(rank_fraction_free(z) == 0);

  QMatrix r(2, 3);
  r.at(0, 0) = Scalar(1);
  r.at(0, 1) = Scalar(2);
  r.at(1, 0) = Scalar(2);
  r.at(1, 1) = Scalar(4);
  CHECK(rank_fraction_free(r) == 1);
}

TEST_CASE("rank agrees with naive elimination on random matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Scalar::rational(entry(rng), 1 + std::abs(entry(rng)));
    CHECK(rank_fraction_free(m) == oracles::naive_rank(m));
  }
}

TEST_CASE("rank over a cyclotomic field") {
  // rows (1, i) and (i, -1) are proportional over Q(zeta_4)
  QMatrix m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar::zeta(4);
  m.at(1, 0) = Scalar::zeta(4);
  m.at(1, 1) = Scalar(-1);
  CHECK(rank_fraction_free(m) == 1);
  CHECK(oracles::naive_rank(m) == 1);
}

TEST_CASE("kernel basis") {
  QMatrix m(1, 3);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(1);
  m.at(0, 2) = Scalar(1);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    Scalar sum(0);
    for (const auto& c : v) sum += c;
    CHECK(sum == Scalar(0));
  }
}

TEST_CASE("solve") {
  QMatrix m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(1);
  m.at(1, 1) = Scalar(-1);
  auto x = solve(m, {Scalar(3), Scalar(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(2));
  CHECK((*x)[1] == Scalar(1));

  QMatrix inc(2, 1);
  inc.at(0, 0) = Scalar(1);
  inc.at(1, 0) = Scalar(1);
  CHECK_FALSE(solve(inc, {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("kernel vectors annihilate the matrix on random input") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = Scalar(entry(rng));
    auto basis = kernel_basis(m);
    CHECK(basis.size() == 5 - rank_fraction_free(m));
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < 3; ++i) {
        Scalar dot(0);
        for (std::size_t j = 0; j < 5; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot == Scalar(0));
      }
    }
  }
}
