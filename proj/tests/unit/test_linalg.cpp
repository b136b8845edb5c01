#include <doctest.h>

#include <random>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, unsigned density) {
  std::vector<Vector> dense(rows, Vector(cols));
  for (auto& r : dense) {
    for (auto& x : r) {
      if (rng() % density == 0) x = make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    }
  }
  return RatMatrix::from_dense(dense);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6", "4") == make_rational(3, 2));
  CHECK(parse_rational_text("-7/21") == make_rational(-1, 3));
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1", "0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational_text("1/2/3"), InputError);
}

TEST_CASE("sparse and dense elimination agree with the textbook oracle") {
  std::mt19937_64 rng(7);
  const EliminationOptions sparse{0};
  const EliminationOptions dense{1000};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const RatMatrix m = random_matrix(rows, cols, rng, 1 + trial % 4);
    const RrefResult a = rref(m, sparse), b = rref(m, dense);
    CHECK(a.reduced == b.reduced);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rank() == testing_support::dense_rank(m.to_dense()));
  }
}

TEST_CASE("kernel, solve and inverse") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix m = random_matrix(5 + rng() % 3, 6, rng, 2);
    const SubspaceBasis k = kernel_basis(m);
    CHECK(k.dim() + rank(m) == m.cols());
    for (const auto& v : k.vectors()) CHECK(is_zero(m.apply(v)));
    Vector x(m.cols());
    for (auto& c : x) c = static_cast<long>(rng() % 5) - 2;
    const auto sol = solve(m, m.apply(x));
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == m.apply(x));
  }
  const RatMatrix singular = RatMatrix::from_dense({{1, 2}, {2, 4}});
  CHECK_FALSE(inverse(singular).has_value());
  CHECK_FALSE(solve(singular, {1, 0}).has_value());
  const RatMatrix m = RatMatrix::from_dense({{2, 1}, {1, 1}});
  CHECK(*inverse(m) * m == RatMatrix::identity(2));
  CHECK(inverse(RatMatrix(0, 0))->rows() == 0);
}

TEST_CASE("subspaces compare by echelon form") {
  const auto a = SubspaceBasis::span(3, {{1, 1, 0}, {0, 1, 1}});
  const auto b = SubspaceBasis::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(a == b);
  CHECK(a.contains(Vector{1, 0, -1}));
  CHECK_FALSE(a.contains(Vector{1, 0, 0}));
  CHECK(a.complement_indices().size() == 1);
}

TEST_CASE("jordan type from ranks of powers") {
  // Blocks 3, 2, 1 conjugated by a unipotent change of basis.
  RatMatrix j(6, 6);
  j.set(1, 0, 1);
  j.set(2, 1, 1);
  j.set(4, 3, 1);
  RatMatrix p = RatMatrix::identity(6);
  p.set(0, 5, 2);
  p.set(3, 1, -1);
  p.set(4, 2, 3);
  const RatMatrix m = *inverse(p) * j * p;
  CHECK(is_nilpotent_matrix(m));
  CHECK(nilpotent_jordan_blocks(m) == std::vector<std::size_t>{3, 2, 1});
  CHECK_FALSE(is_nilpotent_matrix(RatMatrix::identity(2)));
  CHECK_THROWS_AS(nilpotent_jordan_blocks(RatMatrix::identity(2)), MathError);
  CHECK(nilpotent_jordan_blocks(RatMatrix(3, 3)) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("flatten is row-major") {
  const RatMatrix m = RatMatrix::from_dense({{1, 2}, {3, 4}});
  CHECK(m.flatten() == Vector{1, 2, 3, 4});
  CHECK(RatMatrix::unflatten(2, 2, m.flatten()) == m);
}
