#include "leibniz/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "leibniz/errors.hpp"

namespace leibniz {

// ---------------------------------------------------------------------------
// Sparse vector helpers
// ---------------------------------------------------------------------------

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) out.push_back({i, v[i]});
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->index < iy->index) {
      out.push_back({ix->index, a * ix->value});
      ++ix;
    } else {
      Rational s = iy->value + a * ix->value;
      if (!is_zero(s)) out.push_back({iy->index, std::move(s)});
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

void canonicalize(SparseVector& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      if (!out.empty() && is_zero(out.back().value)) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && is_zero(out.back().value)) out.pop_back();
  v = std::move(out);
}

// ---------------------------------------------------------------------------
// Echelon forms
// ---------------------------------------------------------------------------

namespace {

// Incremental row echelon form with unit leading coefficients. Rows are only
// reduced against earlier pivots (semi-echelon) until finish() is called.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : pivot_row_(cols, npos) {}

  bool insert(SparseVector v) {
    while (!v.empty()) {
      const std::size_t lead = v.front().index;
      const std::size_t p = pivot_row_[lead];
      if (p == npos) break;
      const Rational factor = -v.front().value;
      axpy(v, factor, rows_[p]);
    }
    if (v.empty()) return false;
    const Rational inv = 1 / v.front().value;
    for (auto& e : v) e.value *= inv;
    pivot_row_[v.front().index] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Fully reduced rows sorted by pivot column.
  std::vector<SparseVector> finish() && {
    std::sort(rows_.begin(), rows_.end(),
              [](const SparseVector& a, const SparseVector& b) {
                return a.front().index < b.front().index;
              });
    std::fill(pivot_row_.begin(), pivot_row_.end(), npos);
    for (std::size_t r = 0; r < rows_.size(); ++r) pivot_row_[rows_[r].front().index] = r;
    for (std::size_t r = rows_.size(); r-- > 0;) {
      std::vector<std::pair<std::size_t, Rational>> hits;
      for (std::size_t t = 1; t < rows_[r].size(); ++t) {
        const std::size_t q = pivot_row_[rows_[r][t].index];
        if (q != npos) hits.emplace_back(q, rows_[r][t].value);
      }
      for (const auto& [q, coef] : hits) axpy(rows_[r], -coef, rows_[q]);
    }
    return std::move(rows_);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_row_;
};

class DenseEchelon {
 public:
  explicit DenseEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  bool insert(const SparseVector& sv) {
    Vector v = to_dense(sv, cols_);
    std::size_t lead = npos;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_zero(v[c])) continue;
      const std::size_t p = pivot_row_[c];
      if (p == npos) {
        lead = c;
        break;
      }
      const Rational factor = v[c];
      const Vector& row = rows_[p];
      for (std::size_t t = c; t < cols_; ++t) {
        if (!is_zero(row[t])) v[t] -= factor * row[t];
      }
    }
    if (lead == npos) return false;
    const Rational inv = 1 / v[lead];
    for (std::size_t t = lead; t < cols_; ++t) v[t] *= inv;
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<SparseVector> finish() && {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
    for (std::size_t i = order.size(); i-- > 0;) {
      Vector& row = rows_[order[i]];
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const std::size_t c = leads_[order[j]];
        if (is_zero(row[c])) continue;
        const Rational factor = row[c];
        const Vector& other = rows_[order[j]];
        for (std::size_t t = c; t < cols_; ++t) {
          if (!is_zero(other[t])) row[t] -= factor * other[t];
        }
      }
    }
    std::vector<SparseVector> out;
    out.reserve(order.size());
    for (std::size_t idx : order) out.push_back(to_sparse(rows_[idx]));
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> leads_;
  std::vector<std::size_t> pivot_row_;
};

// Shorter rows first keeps fill-in low; the reduced form does not depend on
// the insertion order.
std::vector<std::size_t> insertion_order(std::span<const SparseVector> rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].size() < rows[b].size();
  });
  return order;
}

std::vector<SparseVector> reduced_rows(std::size_t cols, std::span<const SparseVector> rows,
                                       const EliminationOptions& opts) {
  const auto order = insertion_order(rows);
  if (cols <= opts.dense_threshold) {
    DenseEchelon ech(cols);
    for (std::size_t i : order) {
      if (!rows[i].empty()) ech.insert(rows[i]);
    }
    return std::move(ech).finish();
  }
  SparseEchelon ech(cols);
  for (std::size_t i : order) {
    if (!rows[i].empty()) ech.insert(rows[i]);
  }
  return std::move(ech).finish();
}

}  // namespace

// ---------------------------------------------------------------------------
// RatMatrix
// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Rational(1)});
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged dense matrix");
    m.rows_[r] = to_sparse(rows[r]);
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  RatMatrix m(0, cols);
  m.rows_ = std::move(rows);
  for (auto& row : m.rows_) {
    canonicalize(row);
    if (!row.empty() && row.back().index >= cols) throw InputError("column index out of range");
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (!leibniz::is_zero(columns[c][r])) m.rows_[r].push_back({c, columns[c][r]});
    }
  }
  return m;
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols_) throw std::out_of_range("RatMatrix::at");
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != row.end() && it->index == c) return it->value;
  return Rational(0);
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows() || c >= cols_) throw std::out_of_range("RatMatrix::set");
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != row.end() && it->index == c) {
    if (leibniz::is_zero(v)) {
      row.erase(it);
    } else {
      it->value = v;
    }
  } else if (!leibniz::is_zero(v)) {
    row.insert(it, {c, v});
  }
}

void RatMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  set(r, c, at(r, c) + v);
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool RatMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) t.rows_[e.index].push_back({r, e.value});
  }
  return t;
}

std::vector<Vector> RatMatrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows());
  for (const auto& row : rows_) out.push_back(leibniz::to_dense(row, cols_));
  return out;
}

Vector RatMatrix::column(std::size_t c) const {
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

Vector RatMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) out[r] += e.value * v[e.index];
  }
  return out;
}

SparseVector RatMatrix::apply(const SparseVector& v) const {
  return to_sparse(apply(leibniz::to_dense(v, cols_)));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product size mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector acc;
    for (const auto& e : a.rows_[r]) axpy(acc, e.value, b.rows_[e.index]);
    out.rows_[r] = std::move(acc);
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum size mismatch");
  RatMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) axpy(out.rows_[r], Rational(1), b.rows_[r]);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  return a + Rational(-1) * b;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  if (is_zero(s)) return out;
  out.rows_ = m.rows_;
  for (auto& row : out.rows_) {
    for (auto& e : row) e.value *= s;
  }
  return out;
}

Vector RatMatrix::flatten() const {
  Vector out(rows() * cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) out[r * cols_ + e.index] = e.value;
  }
  return out;
}

RatMatrix RatMatrix::unflatten(std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw InputError("flattened size mismatch");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!leibniz::is_zero(v[r * cols + c])) m.rows_[r].push_back({c, v[r * cols + c]});
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& vectors,
                                  const EliminationOptions& opts) {
  std::vector<SparseVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("vector length does not match ambient dimension");
    rows.push_back(to_sparse(v));
  }
  return span_sparse(ambient_dim, std::move(rows), opts);
}

SubspaceBasis SubspaceBasis::span_sparse(std::size_t ambient_dim, std::vector<SparseVector> vectors,
                                         const EliminationOptions& opts) {
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().index >= ambient_dim) throw InputError("index out of ambient range");
  }
  SubspaceBasis b(ambient_dim);
  for (auto& row : reduced_rows(ambient_dim, vectors, opts)) {
    b.pivots_.push_back(row.front().index);
    b.vectors_.push_back(to_dense(row, ambient_dim));
  }
  return b;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  SubspaceBasis b(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    b.vectors_.push_back(unit_vector(ambient_dim, i));
    b.pivots_.push_back(i);
  }
  return b;
}

Vector SubspaceBasis::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw InputError("vector length does not match ambient dimension");
  Vector out = v;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const Rational c = out[pivots_[i]];
    if (is_zero(c)) continue;
    for (std::size_t t = 0; t < ambient_dim_; ++t) {
      if (!is_zero(vectors_[i][t])) out[t] -= c * vectors_[i][t];
    }
  }
  return out;
}

bool SubspaceBasis::contains(const Vector& v) const { return leibniz::is_zero(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [&](const Vector& v) { return contains(v); });
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

std::vector<std::size_t> SubspaceBasis::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (p < pivots_.size() && pivots_[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination front ends
// ---------------------------------------------------------------------------

RrefResult rref(const RatMatrix& m, const EliminationOptions& opts) {
  auto rows = reduced_rows(m.cols(), m.row_data(), opts);
  RrefResult out;
  for (const auto& r : rows) out.pivots.push_back(r.front().index);
  rows.resize(m.rows());
  out.reduced = RatMatrix::from_rows(m.cols(), std::move(rows));
  return out;
}

std::size_t rank_of_rows(std::size_t cols, std::span<const SparseVector> rows,
                         const EliminationOptions& opts) {
  const auto order = insertion_order(rows);
  if (cols <= opts.dense_threshold) {
    DenseEchelon ech(cols);
    for (std::size_t i : order) {
      if (!rows[i].empty()) ech.insert(rows[i]);
    }
    return ech.rank();
  }
  SparseEchelon ech(cols);
  for (std::size_t i : order) {
    if (!rows[i].empty()) ech.insert(rows[i]);
  }
  return ech.rank();
}

std::size_t rank(const RatMatrix& m, const EliminationOptions& opts) {
  return rank_of_rows(m.cols(), m.row_data(), opts);
}

SubspaceBasis kernel_basis(const RatMatrix& m, const EliminationOptions& opts) {
  const auto rows = reduced_rows(m.cols(), m.row_data(), opts);
  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& r : rows) is_pivot[r.front().index] = 1;
  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (const auto& r : rows) {
      for (const auto& e : r) {
        if (e.index == f) {
          v.push_back({r.front().index, -e.value});
          break;
        }
        if (e.index > f) break;
      }
    }
    v.push_back({f, Rational(1)});
    canonicalize(v);
    kernel.push_back(std::move(v));
  }
  return SubspaceBasis::span_sparse(m.cols(), std::move(kernel), opts);
}

SubspaceBasis row_space(const RatMatrix& m, const EliminationOptions& opts) {
  return SubspaceBasis::span_sparse(m.cols(), m.row_data(), opts);
}

SubspaceBasis column_space(const RatMatrix& m, const EliminationOptions& opts) {
  return row_space(m.transpose(), opts);
}

std::optional<Vector> solve(const RatMatrix& m, const Vector& b, const EliminationOptions& opts) {
  if (b.size() != m.rows()) throw InputError("right-hand side length does not match row count");
  std::vector<SparseVector> aug = m.row_data();
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (!is_zero(b[r])) aug[r].push_back({m.cols(), b[r]});
  }
  const auto rows = reduced_rows(m.cols() + 1, aug, opts);
  Vector x(m.cols());
  for (const auto& r : rows) {
    const std::size_t p = r.front().index;
    if (p == m.cols()) return std::nullopt;
    if (r.back().index == m.cols()) x[p] = r.back().value;
  }
  return x;
}

RatMatrix power(const RatMatrix& m, std::size_t k) {
  if (!m.is_square()) throw InputError("power of a non-square matrix");
  RatMatrix out = RatMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RatMatrix(0, 0);
  std::vector<SparseVector> aug = m.row_data();
  for (std::size_t r = 0; r < n; ++r) aug[r].push_back({n + r, Rational(1)});
  const auto rows = reduced_rows(2 * n, aug, {});
  if (rows.size() < n || rows[n - 1].front().index != n - 1) return std::nullopt;
  std::vector<SparseVector> inv;
  inv.reserve(n);
  for (const auto& r : rows) {
    SparseVector tail;
    for (const auto& e : r) {
      if (e.index >= n) tail.push_back({e.index - n, e.value});
    }
    inv.push_back(std::move(tail));
  }
  return RatMatrix::from_rows(n, std::move(inv));
}

namespace {

// rank(m^0), rank(m^1), ... until the rank stops changing.
std::vector<std::size_t> power_ranks(const RatMatrix& m) {
  std::vector<std::size_t> ranks{m.rows()};
  RatMatrix p = RatMatrix::identity(m.rows());
  while (ranks.back() > 0) {
    p = p * m;
    const std::size_t r = rank(p);
    if (r == ranks.back()) break;
    ranks.push_back(r);
  }
  return ranks;
}

}  // namespace

bool is_nilpotent_matrix(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("nilpotency test needs a square matrix");
  return power_ranks(m).back() == 0;
}

std::vector<std::size_t> nilpotent_jordan_blocks(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("Jordan blocks need a square matrix");
  const auto ranks = power_ranks(m);
  if (ranks.back() != 0) throw MathError("matrix is not nilpotent");
  // at_least[s] = number of blocks of size >= s
  std::vector<std::size_t> blocks;
  for (std::size_t s = ranks.size() - 1; s >= 1; --s) {
    const std::size_t at_least = ranks[s - 1] - ranks[s];
    const std::size_t longer = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
    for (std::size_t i = 0; i < at_least - longer; ++i) blocks.push_back(s);
  }
  return blocks;
}

}  // namespace leibniz
