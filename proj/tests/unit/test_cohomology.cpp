#include <doctest.h>

#include <random>

#include "leibniz/cohomology.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/errors.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

// The degree-two cocycle condition written out term by term:
// [x,phi(y,z)] - [phi(x,y),z] + [phi(x,z),y] + phi(x,[y,z]) - phi([x,y],z) + phi([x,z],y).
Vector cocycle_condition(const LeibnizAlgebra& L, const Cochain& phi, std::size_t x, std::size_t y,
                         std::size_t z) {
  const std::size_t n = L.dim();
  auto value = [&](const Vector& a, const Vector& b) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a[i]) || is_zero(b[j])) continue;
        const std::size_t args[2] = {i, j};
        const Vector v = to_dense(phi.value(args), n);
        for (std::size_t t = 0; t < n; ++t) out[t] += a[i] * b[j] * v[t];
      }
    }
    return out;
  };
  const Vector X = unit_vector(n, x), Y = unit_vector(n, y), Z = unit_vector(n, z);
  Vector total(n);
  auto acc = [&](const Vector& v, int sign) {
    for (std::size_t t = 0; t < n; ++t) total[t] += sign * v[t];
  };
  acc(L.bracket(X, value(Y, Z)), 1);
  acc(L.bracket(value(X, Y), Z), -1);
  acc(L.bracket(value(X, Z), Y), 1);
  acc(value(X, L.bracket(Y, Z)), 1);
  acc(value(L.bracket(X, Y), Z), -1);
  acc(value(L.bracket(X, Z), Y), 1);
  return total;
}

LeibnizAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return LeibnizAlgebra(labels, {});
}

}  // namespace

TEST_CASE("adjoint module") {
  const LeibnizAlgebra n = build_n_c(parse_char_seq("2,1"));
  const LeibnizModule M = adjoint_module(n);
  // left action of e1 sends e2 to -e3
  CHECK(M.left(0).column(1) == Vector{0, 0, -1, 0});
  CHECK(check_module_axioms(M).ok());
  CHECK(check_module_axioms(adjoint_module(build_R_particular(2, 1))).ok());
  const LeibnizModule Z = adjoint_module(abelian(2));
  CHECK(Z.left(0).is_zero());
  CHECK(Z.right(1).is_zero());
}

TEST_CASE("module axioms fail exactly when the identity fails") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  std::mt19937_64 rng(3);
  std::size_t broken = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto products = R.products();
    auto& p = products[rng() % products.size()];
    p.value.front().value += static_cast<long>(1 + rng() % 3);
    const LeibnizAlgebra mutated(R.labels(), products, LeibnizAlgebra::Verify::kNone);
    const bool identity = check_identity(mutated).ok();
    CHECK(identity == check_module_axioms(adjoint_module(mutated)).ok());
    if (!identity) ++broken;
  }
  CHECK(broken > 0);
}

TEST_CASE("coboundary in low degrees") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  const LeibnizModule M = adjoint_module(R);
  // d0(h) = 0 since no product [., h] is nonzero.
  Cochain h(0, R.dim(), R.dim());
  const std::size_t none[1] = {};
  h.add(std::span<const std::size_t>(none, 0), R.index_of("h"), 1);
  CHECK(coboundary(M, h).is_zero());
  // d1 of a right multiplication vanishes.
  for (std::size_t x = 0; x < R.dim(); ++x) {
    const Cochain d = Cochain::from_vector(1, R.dim(), R.dim(),
                                           right_mult_matrix(R, unit_vector(R.dim(), x)).transpose().flatten());
    CHECK(coboundary(M, d).is_zero());
  }
  // phi(e1, e1) = h is a cocycle and a coboundary.
  Cochain phi(2, R.dim(), R.dim());
  const std::size_t args[2] = {0, 0};
  phi.add(args, R.index_of("h"), 1);
  CHECK(coboundary(M, phi).is_zero());
  const auto w = coboundary_witness(M, phi);
  REQUIRE(w.has_value());
  CHECK(coboundary(M, *w) == phi);
}

TEST_CASE("coboundary matrix agrees with direct evaluation") {
  std::mt19937_64 rng(19);
  for (const auto& [name, L] : testing_support::small_corpus()) {
    if (L.dim() > 8) continue;
    CAPTURE(name);
    const LeibnizModule M = adjoint_module(L);
    for (std::size_t n = 0; n <= 1; ++n) {
      const RatMatrix d = coboundary_matrix(M, n);
      CHECK(d.rows() == d.cols() * L.dim());
      const Cochain phi = testing_support::random_cochain(n, L.dim(), rng);
      CHECK(coboundary(M, phi).to_vector() == d.apply(phi.to_vector()));
    }
  }
}

TEST_CASE("degree-two cocycles match the term-by-term condition") {
  std::mt19937_64 rng(23);
  const LeibnizAlgebra R = build_R_particular(2, 1);
  const LeibnizModule M = adjoint_module(R);
  const SubspaceBasis cocycles = kernel_basis(coboundary_matrix(M, 2));
  for (int trial = 0; trial < 12; ++trial) {
    Cochain phi = testing_support::random_cochain(2, R.dim(), rng);
    if (trial % 2 == 0) {
      // Half the samples are cocycles: random combinations of a kernel basis.
      Vector v(phi.size());
      for (const auto& b : cocycles.vectors()) {
        const Rational c = static_cast<long>(rng() % 5) - 2;
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * b[t];
      }
      phi = Cochain::from_vector(2, R.dim(), R.dim(), v);
    }
    const Cochain d = coboundary(M, phi);
    bool all_zero = true;
    for (std::size_t x = 0; x < R.dim(); ++x) {
      for (std::size_t y = 0; y < R.dim(); ++y) {
        for (std::size_t z = 0; z < R.dim(); ++z) {
          const std::size_t args[3] = {x, y, z};
          const Vector direct = cocycle_condition(R, phi, x, y, z);
          CHECK(to_dense(d.value(args), R.dim()) == direct);
          all_zero = all_zero && is_zero(direct);
        }
      }
    }
    CHECK(all_zero == d.is_zero());
    if (trial % 2 == 0) CHECK(all_zero);
  }
}

TEST_CASE("cohomology of abelian algebras") {
  // With zero bracket every coboundary vanishes, so HL^n = CL^n.
  const auto one = cohomology_report(adjoint_module(abelian(1)), 1);
  CHECK(one.dim_HL == 1);
  const auto two = cohomology_report(adjoint_module(abelian(2)), 2);
  CHECK(two.dim_HL == 8);
  CHECK_FALSE(is_cohomologically_rigid(abelian(2)).rigid);
  CHECK_FALSE(is_complete(abelian(1)).complete);
  CHECK(is_complete(abelian(1)).center_dim == 1);
  const auto zero = cohomology_report(adjoint_module(LeibnizAlgebra()), 0);
  CHECK(zero.dim_CL == 0);
  CHECK(zero.dim_HL == 0);
}

TEST_CASE("reports with bases") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  CohomologyOptions o;
  o.with_bases = true;
  const auto r = cohomology_report(adjoint_module(R), 1, o);
  REQUIRE(r.cocycles.has_value());
  REQUIRE(r.coboundaries.has_value());
  CHECK(r.cocycles->dim() == r.dim_ZL);
  CHECK(r.cocycles->contains(*r.coboundaries));
  const auto h0 = cohomology_report(adjoint_module(R), 0, o);
  CHECK(h0.dim_BL == 0);
  CHECK(h0.dim_ZL == h0.dim_HL);
}

TEST_CASE("non-cocycles have no witness") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  const LeibnizModule M = adjoint_module(R);
  Cochain phi(2, R.dim(), R.dim());
  const std::size_t args[2] = {R.index_of("x1"), R.index_of("e2")};
  phi.add(args, R.index_of("e2"), 1);
  REQUIRE_FALSE(coboundary(M, phi).is_zero());
  CHECK_FALSE(coboundary_witness(M, phi).has_value());
  CHECK_THROWS_AS(coboundary_witness(M, Cochain(0, R.dim(), R.dim())), InputError);
}

TEST_CASE("guards") {
  const LeibnizAlgebra R = build_R_particular(2, 1);
  const LeibnizModule M = adjoint_module(R);
  CHECK(coboundary_matrix(M, 2).rows() == 4096);
  CHECK(coboundary_matrix(M, 2).cols() == 512);
  CHECK(coboundary_cells(8, 8, 2) == 4096ull * 512ull);
  CohomologyOptions tight;
  tight.max_cells = 1000;
  try {
    coboundary_matrix(M, 1, tight);
    FAIL("expected a guard error");
  } catch (const GuardError& e) {
    CHECK(e.estimated_cells() == 512ull * 64ull);
  }
  CohomologyOptions capped;
  capped.max_degree = 1;
  CHECK_THROWS_AS(coboundary_matrix(M, 2, capped), GuardError);
  CHECK_THROWS_AS(coboundary(M, Cochain(2, R.dim(), R.dim()), capped), GuardError);
}

TEST_CASE("cochain indexing") {
  Cochain c(2, 3, 2);
  const std::size_t args[2] = {2, 1};
  CHECK(c.tuple_index(args) == 7);
  CHECK(c.tuple_args(7) == std::vector<std::size_t>{2, 1});
  c.add(args, 1, 5);
  CHECK(c.to_vector()[7 * 2 + 1] == 5);
  const std::size_t bad[2] = {3, 0};
  CHECK_THROWS_AS(c.tuple_index(bad), InputError);
  CHECK_THROWS_AS(c.add(args, 2, 1), InputError);
}
