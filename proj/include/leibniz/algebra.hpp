#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// One nonzero structure-constant row: [e_i, e_j] = sum_k value[k] e_k.
struct BasisProduct {
  std::size_t i;
  std::size_t j;
  SparseVector value;

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

class Element;

/// Finite-dimensional algebra over Q given by structure constants in a named
/// basis. Immutable; copies share the underlying table.
class LeibnizAlgebra {
 public:
  enum class Verify { kIdentity, kNone };

  /// The zero-dimensional algebra.
  LeibnizAlgebra();

  /// Throws InputError on bad indices, duplicate pairs or label count
  /// mismatches, and MathError when `verify` is kIdentity and the right
  /// Leibniz identity fails.
  LeibnizAlgebra(std::vector<std::string> labels, std::vector<BasisProduct> products,
                 Verify verify = Verify::kIdentity);

  std::size_t dim() const;
  const std::vector<std::string>& labels() const;
  /// Index of a basis label; throws InputError if unknown.
  std::size_t index_of(const std::string& label) const;

  /// [e_i, e_j]
  const SparseVector& product(std::size_t i, std::size_t j) const;
  /// Nonzero products ordered by (i, j).
  const std::vector<BasisProduct>& products() const;

  Vector bracket(const Vector& x, const Vector& y) const;

  Element element(Vector coords) const;
  Element basis_element(std::size_t i) const;

  /// Same dimension and structure constants (labels ignored).
  bool same_structure(const LeibnizAlgebra& other) const;

  /// Same labels and structure constants.
  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  friend class Element;
};

class Element {
 public:
  Element(LeibnizAlgebra algebra, Vector coords);

  const LeibnizAlgebra& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }

  bool is_zero() const { return leibniz::is_zero(coords_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Rational& s, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  LeibnizAlgebra algebra_;
  Vector coords_;
};

/// [x, y]; throws InputError when x and y live in different algebras.
Element multiply(const Element& x, const Element& y);

struct IdentityDefect {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  /// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
  Vector defect;
};

struct IdentityReport {
  std::vector<IdentityDefect> defects;  // sorted by (i, j, k), at most the cap
  std::size_t failures = 0;             // total failing triples
  bool ok() const { return failures == 0; }
};

inline constexpr std::size_t kDefaultDefectCap = 50;

IdentityReport check_identity(const LeibnizAlgebra& L, std::size_t cap = kDefaultDefectCap);

/// [e_i, e_j] = -[e_j, e_i] for all pairs.
bool is_lie(const LeibnizAlgebra& L);

/// Matrix of y -> [y, x] (columns are images of basis vectors).
RatMatrix right_mult_matrix(const LeibnizAlgebra& L, const Vector& x);
/// Matrix of y -> [x, y].
RatMatrix left_mult_matrix(const LeibnizAlgebra& L, const Vector& x);

/// span{[a, b] : a in A, b in B}
SubspaceBasis product_space(const LeibnizAlgebra& L, const SubspaceBasis& A, const SubspaceBasis& B);

/// L^2 = [L, L]
SubspaceBasis square(const LeibnizAlgebra& L);

enum class SeriesKind { kLowerCentral, kDerived };

struct SeriesReport {
  SeriesKind kind;
  std::vector<std::size_t> dims;
  bool terminated = false;
};

SeriesReport lower_central_series(const LeibnizAlgebra& L);
SeriesReport derived_series(const LeibnizAlgebra& L);
bool is_nilpotent_algebra(const LeibnizAlgebra& L);
bool is_solvable_algebra(const LeibnizAlgebra& L);

SubspaceBasis right_annihilator(const LeibnizAlgebra& L);
SubspaceBasis center(const LeibnizAlgebra& L);

/// Description of a product leaving the subspace, or nullopt for a two-sided ideal.
std::optional<std::string> ideal_violation(const LeibnizAlgebra& L, const SubspaceBasis& I);

/// Restriction of the bracket to a subalgebra, in the subspace's echelon basis.
/// Throws MathError if the subspace is not closed.
LeibnizAlgebra subalgebra(const LeibnizAlgebra& L, const SubspaceBasis& S);

struct Quotient {
  LeibnizAlgebra algebra;
  /// dim(L/I) x dim(L); maps L onto the complement basis.
  RatMatrix projection;
};

/// L/I on the standard complement of I's pivot columns. Throws MathError
/// naming a violating product when I is not a two-sided ideal.
Quotient quotient_by_ideal(const LeibnizAlgebra& L, const SubspaceBasis& I);

/// Structure constants in the basis given by the columns of `basis`
/// (old coordinates). Throws MathError if the columns are dependent.
LeibnizAlgebra change_basis(const LeibnizAlgebra& L, const RatMatrix& basis,
                            std::vector<std::string> labels = {},
                            LeibnizAlgebra::Verify verify = LeibnizAlgebra::Verify::kIdentity);

}  // namespace leibniz
