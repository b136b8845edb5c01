#include <doctest.h>

#include "leibniz/algebra.hpp"
#include "leibniz/constructions.hpp"
#include "leibniz/errors.hpp"
#include "support.hpp"

using namespace leibniz;

TEST_CASE("identity defects of a hand-checked table") {
  // Only [e2, e1] = e1. By hand, the single failing triple is (e2, e2, e1)
  // with defect [e2,[e2,e1]] = e1.
  const LeibnizAlgebra L({"e1", "e2"}, {{1, 0, {{0, 1}}}}, LeibnizAlgebra::Verify::kNone);
  const IdentityReport r = check_identity(L);
  REQUIRE(r.failures == 1);
  CHECK(r.defects[0].i == 1);
  CHECK(r.defects[0].j == 1);
  CHECK(r.defects[0].k == 0);
  CHECK(r.defects[0].defect == Vector{1, 0});
  CHECK_THROWS_AS(LeibnizAlgebra({"e1", "e2"}, {{1, 0, {{0, 1}}}}), MathError);
  // Made antisymmetric it is the two-dimensional nonabelian Lie algebra.
  const LeibnizAlgebra lie({"e1", "e2"}, {{1, 0, {{0, 1}}}, {0, 1, {{0, -1}}}});
  CHECK(is_lie(lie));
  CHECK(is_solvable_algebra(lie));
  CHECK_FALSE(is_nilpotent_algebra(lie));
}

TEST_CASE("only [e1,e2] = e1 satisfies the identity") {
  // Every term needs [., e1] != 0 or a square of e1, and the two surviving
  // terms at (e1, e2, e2) cancel.
  const LeibnizAlgebra L({"e1", "e2"}, {{0, 1, {{0, 1}}}}, LeibnizAlgebra::Verify::kNone);
  CHECK(check_identity(L).ok());
  CHECK_FALSE(is_lie(L));
}

TEST_CASE("defect report cap") {
  // [e1,e1] = e1: the only triple gives e1 - e1 + e1 = e1.
  const LeibnizAlgebra L({"e1"}, {{0, 0, {{0, 1}}}}, LeibnizAlgebra::Verify::kNone);
  CHECK(check_identity(L).defects.at(0).defect == Vector{1});
  CHECK(check_identity(L, 0).defects.empty());
  CHECK(check_identity(L, 0).failures == 1);
}

TEST_CASE("constructor rejects malformed tables") {
  CHECK_THROWS_AS(LeibnizAlgebra({"a"}, {{0, 1, {{0, 1}}}}), InputError);
  CHECK_THROWS_AS(LeibnizAlgebra({"a"}, {{0, 0, {}}, {0, 0, {}}}), InputError);
  CHECK(LeibnizAlgebra().dim() == 0);
  CHECK(check_identity(LeibnizAlgebra()).ok());
}

TEST_CASE("squares and symmetrizations lie in the right annihilator") {
  for (const auto& [name, L] : testing_support::small_corpus()) {
    CAPTURE(name);
    const SubspaceBasis ann = right_annihilator(L);
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = 0; j < L.dim(); ++j) {
        const Vector x = unit_vector(L.dim(), i), y = unit_vector(L.dim(), j);
        Vector sym = L.bracket(x, y);
        const Vector other = L.bracket(y, x);
        for (std::size_t t = 0; t < sym.size(); ++t) sym[t] += other[t];
        CHECK(ann.contains(sym));
        Vector s = x;
        for (std::size_t t = 0; t < s.size(); ++t) s[t] += y[t];
        CHECK(ann.contains(L.bracket(s, s)));
      }
    }
  }
}

TEST_CASE("sl2 is neither solvable nor has a nilpotent square") {
  // [e,f] = h, [h,e] = 2e, [h,f] = -2f, antisymmetric.
  const LeibnizAlgebra sl2({"e", "f", "h"}, {{0, 1, {{2, 1}}},
                                             {1, 0, {{2, -1}}},
                                             {2, 0, {{0, 2}}},
                                             {0, 2, {{0, -2}}},
                                             {2, 1, {{1, -2}}},
                                             {1, 2, {{1, 2}}}});
  CHECK(is_lie(sl2));
  CHECK_FALSE(is_solvable_algebra(sl2));
  CHECK(square(sl2).dim() == 3);
  CHECK_FALSE(is_nilpotent_algebra(subalgebra(sl2, square(sl2))));
  CHECK(center(sl2).dim() == 0);
}

TEST_CASE("series of the model nilpotent algebra") {
  const LeibnizAlgebra n = build_n_c(parse_char_seq("3,2"));
  // dim 6; L^2 is spanned by the non-head chain elements.
  const SeriesReport lcs = lower_central_series(n);
  CHECK(lcs.dims == std::vector<std::size_t>{6, 3, 1, 0});
  CHECK(lcs.terminated);
  CHECK(is_nilpotent_algebra(n));
  CHECK(derived_series(n).dims == std::vector<std::size_t>{6, 3, 0});
  CHECK(center(n).dim() == 2);
}

TEST_CASE("quotient of the solvable extension by h is the Lie model") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 2}}) {
    const LeibnizAlgebra R = build_R_particular(n1, n2);
    const std::size_t h = R.index_of("h");
    const SubspaceBasis I = SubspaceBasis::span(R.dim(), {unit_vector(R.dim(), h)});
    CHECK_FALSE(ideal_violation(R, I).has_value());
    const Quotient q = quotient_by_ideal(R, I);
    CHECK(q.algebra.same_structure(build_r_c(CharSeqSpec({n1, n2}))));
    // The projection is a morphism on basis pairs.
    for (std::size_t i = 0; i < R.dim(); ++i) {
      for (std::size_t j = 0; j < R.dim(); ++j) {
        const Vector pi = q.projection.column(i), pj = q.projection.column(j);
        CHECK(q.projection.apply(to_dense(R.product(i, j), R.dim())) == q.algebra.bracket(pi, pj));
      }
    }
  }
}

TEST_CASE("non-ideals are rejected") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  const SubspaceBasis e1 = SubspaceBasis::span(R.dim(), {unit_vector(R.dim(), 0)});
  CHECK(ideal_violation(R, e1).has_value());
  CHECK_THROWS_AS(quotient_by_ideal(R, e1), MathError);
}

TEST_CASE("change of basis preserves structure invariants") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  RatMatrix P = RatMatrix::identity(R.dim());
  P.set(0, 1, 3);
  P.set(4, 0, -1);
  const LeibnizAlgebra S = change_basis(R, P);
  CHECK(check_identity(S).ok());
  CHECK(center(S).dim() == center(R).dim());
  CHECK(right_annihilator(S).dim() == right_annihilator(R).dim());
  CHECK(lower_central_series(S).dims == lower_central_series(R).dims);
  CHECK_THROWS_AS(change_basis(R, RatMatrix(R.dim(), R.dim())), MathError);
}
