#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

struct SparseEntry {
  std::size_t index;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);

/// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVector& v);

struct EliminationOptions {
  /// Matrices with at most this many columns are eliminated with dense rows.
  std::size_t dense_threshold = 64;
};

/// Sparse rational matrix stored by rows.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_dense(const std::vector<Vector>& rows);
  /// Rows given as sparse vectors; entries are canonicalized.
  static RatMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  /// Matrix whose j-th column is columns[j].
  static RatMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);

  const SparseVector& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<SparseVector>& row_data() const { return rows_; }

  std::size_t nonzeros() const;
  bool is_zero() const;

  RatMatrix transpose() const;
  std::vector<Vector> to_dense() const;
  Vector column(std::size_t c) const;

  Vector apply(const Vector& v) const;
  SparseVector apply(const SparseVector& v) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  /// Row-major flattening: entry (r, c) lands at r * cols + c.
  Vector flatten() const;
  static RatMatrix unflatten(std::size_t rows, std::size_t cols, const Vector& v);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

/// Linearly independent vectors of a common ambient space, kept in reduced row
/// echelon form so that equal subspaces compare equal.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  /// Echelonizes an arbitrary spanning set.
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors,
                            const EliminationOptions& opts = {});
  static SubspaceBasis span_sparse(std::size_t ambient_dim, std::vector<SparseVector> vectors,
                                   const EliminationOptions& opts = {});
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;

  /// v minus its components along the basis, which zeroes every pivot coordinate.
  Vector reduce(const Vector& v) const;
  /// Coordinates of v in this basis; nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Standard basis indices complementary to the pivots.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const RatMatrix& m, const EliminationOptions& opts = {});
std::size_t rank(const RatMatrix& m, const EliminationOptions& opts = {});
std::size_t rank_of_rows(std::size_t cols, std::span<const SparseVector> rows,
                         const EliminationOptions& opts = {});

SubspaceBasis kernel_basis(const RatMatrix& m, const EliminationOptions& opts = {});
/// Span of the rows.
SubspaceBasis row_space(const RatMatrix& m, const EliminationOptions& opts = {});
/// Span of the columns.
SubspaceBasis column_space(const RatMatrix& m, const EliminationOptions& opts = {});

/// A particular solution of m x = b with free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const RatMatrix& m, const Vector& b,
                            const EliminationOptions& opts = {});

RatMatrix power(const RatMatrix& m, std::size_t k);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// True iff m^n = 0 for n = dim. Throws InputError on non-square input.
bool is_nilpotent_matrix(const RatMatrix& m);

/// Jordan block sizes of a nilpotent matrix, largest first. Throws MathError if
/// m is not nilpotent.
std::vector<std::size_t> nilpotent_jordan_blocks(const RatMatrix& m);

}  // namespace leibniz
