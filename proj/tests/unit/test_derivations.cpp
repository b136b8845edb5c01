#include <doctest.h>

#include "leibniz/derivations.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/family_checks.hpp"
#include "support.hpp"

using namespace leibniz;

TEST_CASE("derivation space matches the brute-force oracle") {
  for (const auto& [name, L] : testing_support::small_corpus()) {
    if (L.dim() > 10) continue;
    CAPTURE(name);
    const DerivationSpace der = derivation_space(L);
    CHECK(der.dim() == testing_support::brute_force_derivation_dim(L));
    for (const auto& d : der.basis) CHECK(is_derivation(L, d));
  }
}

TEST_CASE("right multiplications are derivations") {
  for (const auto& [name, L] : testing_support::small_corpus()) {
    CAPTURE(name);
    const DerivationSpace der = derivation_space(L);
    const SubspaceBasis inner = inner_derivations(L);
    CHECK(der.flat.contains(inner));
    for (std::size_t i = 0; i < L.dim(); ++i) {
      CHECK(is_derivation(L, right_mult_matrix(L, unit_vector(L.dim(), i))));
    }
  }
}

TEST_CASE("derivations of small algebras") {
  // Abelian: every endomorphism.
  const LeibnizAlgebra ab({"a", "b"}, {});
  CHECK(derivation_space(ab).dim() == 4);
  CHECK(inner_derivations(ab).dim() == 0);
  CHECK_THROWS_AS(is_derivation(ab, RatMatrix(3, 3)), InputError);
  // Complete algebras have only inner derivations.
  const LeibnizAlgebra R = build_R_particular(2, 1);
  CHECK(derivation_space(R).dim() == inner_derivations(R).dim());
}

TEST_CASE("nil-independence search") {
  std::vector<RatMatrix> diag = {RatMatrix::from_dense({{1, 0}, {0, 0}}),
                                 RatMatrix::from_dense({{0, 0}, {0, 1}})};
  CHECK(check_nil_independent(diag).independent_probable);
  // diag(1,1) - identity is nilpotent.
  std::vector<RatMatrix> dependent = {RatMatrix::from_dense({{1, 0}, {0, 1}}),
                                      RatMatrix::from_dense({{1, 1}, {0, 1}})};
  const auto v = check_nil_independent(dependent);
  CHECK_FALSE(v.independent_probable);
  CHECK(is_nilpotent_matrix(v.witness[0] * dependent[0] + v.witness[1] * dependent[1]));
  std::vector<RatMatrix> nil = {RatMatrix::from_dense({{0, 1}, {0, 0}})};
  CHECK(check_nil_independent(nil).stage == "single");
  CHECK_THROWS_AS(check_nil_independent(std::vector<RatMatrix>{}), InputError);
}

TEST_CASE("characteristic sequence of model algebras") {
  CHECK(characteristic_sequence(build_n_c(parse_char_seq("3,2"))).parts ==
        std::vector<std::size_t>{3, 2, 1});
  CHECK(characteristic_sequence(build_n_c(parse_char_seq("2,2,1"))).parts ==
        std::vector<std::size_t>{2, 2, 1, 1});
  CHECK(characteristic_sequence(LeibnizAlgebra()).parts.empty());
  // R_x is not nilpotent on a solvable non-nilpotent algebra.
  CHECK_THROWS_AS(characteristic_sequence(build_r_c(parse_char_seq("2"))), MathError);
  const auto cs = characteristic_sequence(build_n_c(parse_char_seq("3,2")), 10, 5);
  CHECK_FALSE(square(build_n_c(parse_char_seq("3,2"))).contains(cs.witness));
}

TEST_CASE("two-block derivations satisfy the printed restrictions") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {3, 1}}) {
    const ShapeReport r = check_derivation_shape({n1, n2, 2, 3, 5, 7});
    CAPTURE(n1);
    CAPTURE(n2);
    CHECK(r.ok());
    CHECK(r.h_weight_failures == 0);
  }
}

TEST_CASE("nil directions exist when all parameters vanish") {
  const NilDirectionsReport r = check_nil_directions({2, 2, 0, 0, 0, 0});
  CHECK(r.ok());
  // With n1 > n2 the cross entry is forced to zero and no fourth direction exists.
  CHECK_FALSE(check_nil_directions({3, 2, 0, 0, 0, 0}).exists[3]);
}
