#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "wqsym/primitives.hpp"

using namespace wqsym;

namespace {

// Textbook Gauss-Jordan on a dense copy.
std::size_t dense_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             double density) {
  std::uniform_int_distribution<int> value(-4, 4);
  std::bernoulli_distribution keep(density);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng)) m.set(r, c, Rational(value(rng), 1 + rng() % 3));
    }
  }
  return m;
}

void check_kernel(const RationalMatrix& m) {
  const auto kernel = kernel_basis(m);
  CHECK(kernel.size() + rank(m) == m.cols());
  for (const auto& v : kernel) CHECK(multiply(m, v).empty());
  // kernel vectors are independent: each has a distinct free coordinate set to 1
  RationalMatrix k(m.cols(), kernel.size());
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    for (const auto& [i, x] : kernel[j]) k.set(i, j, x);
  }
  CHECK(rank(k) == kernel.size());
}

}  // namespace

TEST_CASE("matrix basics") {
  RationalMatrix m(2, 3);
  m.set(0, 1, 2);
  m.add(0, 1, -2);
  CHECK(m.nonzeros() == 0);
  m.set(1, 2, Rational(3, 4));
  CHECK(m.at(1, 2) == Rational(3, 4));
  CHECK(m.at(0, 0) == 0);
  CHECK_THROWS_AS(m.set(2, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
}

TEST_CASE("small ranks and kernels") {
  RationalMatrix d(1, 3);
  d.set(0, 1, 1);
  d.set(0, 2, 1);
  CHECK(rank(d) == 1);
  CHECK(kernel_basis(d).size() == 2);
  check_kernel(d);

  CHECK(rank(RationalMatrix::identity(5)) == 5);
  CHECK(kernel_basis(RationalMatrix::identity(5)).empty());
  CHECK(rank(RationalMatrix(4, 6)) == 0);
  CHECK(kernel_basis(RationalMatrix(4, 6)).size() == 6);
  CHECK(rank(RationalMatrix(0, 3)) == 0);
  CHECK(kernel_basis(RationalMatrix(0, 3)).size() == 3);
}

TEST_CASE("stack") {
  const RationalMatrix id = RationalMatrix::identity(3);
  CHECK(kernel_basis(stack(id, id)).empty());
  RationalMatrix d(1, 3);
  d.set(0, 0, 1);
  d.set(0, 1, -1);
  CHECK(kernel_basis(stack(RationalMatrix(2, 3), d)).size() == kernel_basis(d).size());
  CHECK_THROWS_AS(stack(RationalMatrix(1, 2), RationalMatrix(1, 3)), std::invalid_argument);

  const auto t3 = stack(coproduct_matrix(3, CoproductKind::kLeft),
                        coproduct_matrix(3, CoproductKind::kRight));
  CHECK(t3.cols() - rank(t3) == 4);
}

TEST_CASE("reduced coproduct matrix in degree 2") {
  const auto m = coproduct_matrix(2, CoproductKind::kReduced);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 3);
  CHECK(m.at(0, 0) == 0);  // 11
  CHECK(m.at(0, 1) == 1);  // 12
  CHECK(m.at(0, 2) == 1);  // 21
  CHECK(rank(m) == 1);
}

TEST_CASE("matrix of a map") {
  const BasisIndex<PackedWord> words(enumerate_packed(2));
  const auto id = matrix_of_map(words, words, [](const PackedWord& w) { return basis(w); });
  CHECK(id == RationalMatrix::identity(3));
  const auto zero = matrix_of_map(words, words, [](const PackedWord&) { return Element{}; });
  CHECK(zero == RationalMatrix(3, 3));
  CHECK_THROWS_AS(
      matrix_of_map(words, words, [](const PackedWord&) { return basis(PackedWord{1}); }),
      std::out_of_range);
  CHECK_THROWS_AS(BasisIndex<int>({1, 2, 1}), std::invalid_argument);
  CHECK(combination_of(words, {{0, 2}, {2, -1}}) ==
        2 * basis(parse_word("11")) - basis(parse_word("21")));
}

TEST_CASE("random matrices against a dense eliminator") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const double density = 0.05 + 0.1 * (trial % 6);
    RationalMatrix m = random_matrix(rng, 20, 30, density);
    if (trial % 4 == 0) {
      // force dependent rows
      for (const auto& [c, v] : m.row(0)) m.add(19, c, 3 * v);
      for (const auto& [c, v] : m.row(1)) m.add(19, c, -v);
    }
    CAPTURE(trial);
    CHECK(rank(m) == dense_rank(m));
    check_kernel(m);
  }
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix m = random_matrix(rng, 30, 20, 0.2);
    CHECK(rank(m) == dense_rank(m));
    check_kernel(m);
  }
}

TEST_CASE("coordinate format") {
  RationalMatrix m(2, 3);
  m.set(0, 2, Rational(-3, 4));
  m.set(1, 0, 5);
  std::stringstream s;
  write_coordinates(s, m);
  CHECK(s.str() == "2 3\n0 2 -3/4\n1 0 5/1\n");
  CHECK(read_coordinates(s) == m);

  std::istringstream bad("2 2\n0 0 1/0\n");
  CHECK_THROWS_AS(read_coordinates(bad), std::invalid_argument);
  std::istringstream junk("2 2\n0 0 x\n");
  CHECK_THROWS_AS(read_coordinates(junk), std::invalid_argument);
  std::istringstream outside("2 2\n5 0 1\n");
  CHECK_THROWS_AS(read_coordinates(outside), std::out_of_range);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_coordinates(empty), std::invalid_argument);
}
