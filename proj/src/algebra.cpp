#include "leibniz/algebra.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

struct LeibnizAlgebra::Impl {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVector> table;  // dim * dim, row-major in (i, j)
  std::vector<BasisProduct> products;
};

namespace {

const SparseVector kEmpty;

std::string triple_name(const LeibnizAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const auto& lab = L.labels();
  return "(" + lab[i] + ", " + lab[j] + ", " + lab[k] + ")";
}

// Sparse form of [v, e_k] for a sparse v.
SparseVector bracket_right_basis(const LeibnizAlgebra& L, const SparseVector& v, std::size_t k) {
  SparseVector out;
  for (const auto& e : v) axpy(out, e.value, L.product(e.index, k));
  return out;
}

SparseVector bracket_left_basis(const LeibnizAlgebra& L, std::size_t i, const SparseVector& v) {
  SparseVector out;
  for (const auto& e : v) axpy(out, e.value, L.product(i, e.index));
  return out;
}

}  // namespace

LeibnizAlgebra::LeibnizAlgebra() : impl_(std::make_shared<Impl>()) {}

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> labels, std::vector<BasisProduct> products,
                               Verify verify) {
  auto impl = std::make_shared<Impl>();
  impl->dim = labels.size();
  impl->labels = std::move(labels);
  impl->table.assign(impl->dim * impl->dim, {});
  std::vector<char> seen(impl->dim * impl->dim, 0);
  for (auto& p : products) {
    if (p.i >= impl->dim || p.j >= impl->dim) throw InputError("product index out of range");
    const std::size_t slot = p.i * impl->dim + p.j;
    if (seen[slot]) {
      throw InputError("duplicate product entry for (" + std::to_string(p.i) + ", " +
                       std::to_string(p.j) + ")");
    }
    seen[slot] = 1;
    canonicalize(p.value);
    if (!p.value.empty() && p.value.back().index >= impl->dim) {
      throw InputError("product coordinate out of range");
    }
    impl->table[slot] = p.value;
  }
  for (std::size_t i = 0; i < impl->dim; ++i) {
    for (std::size_t j = 0; j < impl->dim; ++j) {
      const auto& v = impl->table[i * impl->dim + j];
      if (!v.empty()) impl->products.push_back({i, j, v});
    }
  }
  impl_ = std::move(impl);
  if (verify == Verify::kIdentity) {
    const auto report = check_identity(*this, 1);
    if (!report.ok()) {
      const auto& d = report.defects.front();
      throw MathError("Leibniz identity fails at " + triple_name(*this, d.i, d.j, d.k));
    }
  }
}

std::size_t LeibnizAlgebra::dim() const { return impl_->dim; }

const std::vector<std::string>& LeibnizAlgebra::labels() const { return impl_->labels; }

std::size_t LeibnizAlgebra::index_of(const std::string& label) const {
  auto it = std::find(impl_->labels.begin(), impl_->labels.end(), label);
  if (it == impl_->labels.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - impl_->labels.begin());
}

const SparseVector& LeibnizAlgebra::product(std::size_t i, std::size_t j) const {
  if (i >= impl_->dim || j >= impl_->dim) return kEmpty;
  return impl_->table[i * impl_->dim + j];
}

const std::vector<BasisProduct>& LeibnizAlgebra::products() const { return impl_->products; }

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw InputError("bracket operand has wrong length");
  Vector out(dim());
  for (const auto& p : impl_->products) {
    if (is_zero(x[p.i]) || is_zero(y[p.j])) continue;
    const Rational c = x[p.i] * y[p.j];
    for (const auto& e : p.value) out[e.index] += c * e.value;
  }
  return out;
}

Element LeibnizAlgebra::element(Vector coords) const { return Element(*this, std::move(coords)); }

Element LeibnizAlgebra::basis_element(std::size_t i) const {
  return Element(*this, unit_vector(dim(), i));
}

bool LeibnizAlgebra::same_structure(const LeibnizAlgebra& other) const {
  return dim() == other.dim() && impl_->table == other.impl_->table;
}

bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (a.impl_ == b.impl_) return true;
  return a.same_structure(b) && a.labels() == b.labels();
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

Element::Element(LeibnizAlgebra algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) throw InputError("element has wrong number of coordinates");
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) throw InputError("elements belong to different algebras");
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  Vector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords_[i];
  return Element(a.algebra_, std::move(v));
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  Vector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords_[i];
  return Element(a.algebra_, std::move(v));
}

Element operator*(const Rational& s, const Element& a) {
  Vector v = a.coords_;
  for (auto& x : v) x *= s;
  return Element(a.algebra_, std::move(v));
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

Element multiply(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(x.algebra(), x.algebra().bracket(x.coords(), y.coords()));
}

// ---------------------------------------------------------------------------
// Identity and symmetry
// ---------------------------------------------------------------------------

IdentityReport check_identity(const LeibnizAlgebra& L, std::size_t cap) {
  IdentityReport report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
        SparseVector d = bracket_left_basis(L, i, L.product(j, k));
        axpy(d, Rational(-1), bracket_right_basis(L, L.product(i, j), k));
        axpy(d, Rational(1), bracket_right_basis(L, L.product(i, k), j));
        if (d.empty()) continue;
        ++report.failures;
        if (report.defects.size() < cap) report.defects.push_back({i, j, k, to_dense(d, n)});
      }
    }
  }
  return report;
}

bool is_lie(const LeibnizAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i; j < L.dim(); ++j) {
      SparseVector s = L.product(i, j);
      axpy(s, Rational(1), L.product(j, i));
      if (!s.empty()) return false;
    }
  }
  return true;
}

RatMatrix right_mult_matrix(const LeibnizAlgebra& L, const Vector& x) {
  std::vector<Vector> cols;
  cols.reserve(L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(L.bracket(unit_vector(L.dim(), j), x));
  return RatMatrix::from_columns(L.dim(), cols);
}

RatMatrix left_mult_matrix(const LeibnizAlgebra& L, const Vector& x) {
  std::vector<Vector> cols;
  cols.reserve(L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(L.bracket(x, unit_vector(L.dim(), j)));
  return RatMatrix::from_columns(L.dim(), cols);
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

SubspaceBasis product_space(const LeibnizAlgebra& L, const SubspaceBasis& A, const SubspaceBasis& B) {
  std::vector<Vector> gens;
  for (const auto& a : A.vectors()) {
    for (const auto& b : B.vectors()) gens.push_back(L.bracket(a, b));
  }
  return SubspaceBasis::span(L.dim(), gens);
}

SubspaceBasis square(const LeibnizAlgebra& L) {
  std::vector<SparseVector> gens;
  for (const auto& p : L.products()) gens.push_back(p.value);
  return SubspaceBasis::span_sparse(L.dim(), std::move(gens));
}

namespace {

template <typename Step>
SeriesReport run_series(const LeibnizAlgebra& L, SeriesKind kind, Step step) {
  SeriesReport report{kind, {}, false};
  SubspaceBasis current = SubspaceBasis::whole(L.dim());
  report.dims.push_back(current.dim());
  while (current.dim() > 0) {
    SubspaceBasis next = step(current);
    if (next.dim() == current.dim()) break;
    report.dims.push_back(next.dim());
    current = std::move(next);
  }
  report.terminated = report.dims.back() == 0;
  return report;
}

}  // namespace

SeriesReport lower_central_series(const LeibnizAlgebra& L) {
  const SubspaceBasis whole = SubspaceBasis::whole(L.dim());
  return run_series(L, SeriesKind::kLowerCentral,
                    [&](const SubspaceBasis& cur) { return product_space(L, cur, whole); });
}

SeriesReport derived_series(const LeibnizAlgebra& L) {
  return run_series(L, SeriesKind::kDerived,
                    [&](const SubspaceBasis& cur) { return product_space(L, cur, cur); });
}

bool is_nilpotent_algebra(const LeibnizAlgebra& L) { return lower_central_series(L).terminated; }

bool is_solvable_algebra(const LeibnizAlgebra& L) { return derived_series(L).terminated; }

// ---------------------------------------------------------------------------
// Annihilators, ideals, quotients
// ---------------------------------------------------------------------------

namespace {

RatMatrix stack(const std::vector<RatMatrix>& blocks, std::size_t cols) {
  std::vector<SparseVector> rows;
  for (const auto& b : blocks) {
    for (const auto& r : b.row_data()) rows.push_back(r);
  }
  return RatMatrix::from_rows(cols, std::move(rows));
}

}  // namespace

SubspaceBasis right_annihilator(const LeibnizAlgebra& L) {
  std::vector<RatMatrix> blocks;
  for (std::size_t i = 0; i < L.dim(); ++i) blocks.push_back(left_mult_matrix(L, unit_vector(L.dim(), i)));
  return kernel_basis(stack(blocks, L.dim()));
}

SubspaceBasis center(const LeibnizAlgebra& L) {
  std::vector<RatMatrix> blocks;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    blocks.push_back(left_mult_matrix(L, unit_vector(L.dim(), i)));
    blocks.push_back(right_mult_matrix(L, unit_vector(L.dim(), i)));
  }
  return kernel_basis(stack(blocks, L.dim()));
}

std::optional<std::string> ideal_violation(const LeibnizAlgebra& L, const SubspaceBasis& I) {
  if (I.ambient_dim() != L.dim()) return "subspace lives in a space of the wrong dimension";
  for (std::size_t a = 0; a < I.dim(); ++a) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector ej = unit_vector(L.dim(), j);
      if (!I.contains(L.bracket(I.vectors()[a], ej))) {
        return "[v" + std::to_string(a + 1) + ", " + L.labels()[j] + "] leaves the subspace";
      }
      if (!I.contains(L.bracket(ej, I.vectors()[a]))) {
        return "[" + L.labels()[j] + ", v" + std::to_string(a + 1) + "] leaves the subspace";
      }
    }
  }
  return std::nullopt;
}

LeibnizAlgebra subalgebra(const LeibnizAlgebra& L, const SubspaceBasis& S) {
  const auto& basis = S.vectors();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < basis.size(); ++a) labels.push_back("v" + std::to_string(a + 1));
  std::vector<BasisProduct> products;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto coords = S.coordinates(L.bracket(basis[a], basis[b]));
      if (!coords) throw MathError("subspace is not closed under the bracket");
      SparseVector v = to_sparse(*coords);
      if (!v.empty()) products.push_back({a, b, std::move(v)});
    }
  }
  return LeibnizAlgebra(std::move(labels), std::move(products), LeibnizAlgebra::Verify::kNone);
}

Quotient quotient_by_ideal(const LeibnizAlgebra& L, const SubspaceBasis& I) {
  if (auto why = ideal_violation(L, I)) throw MathError("not a two-sided ideal: " + *why);
  const auto keep = I.complement_indices();
  RatMatrix projection(keep.size(), L.dim());
  // Reducing e_j modulo I zeroes the pivot coordinates; what remains sits on
  // the complement indices.
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Vector r = I.reduce(unit_vector(L.dim(), j));
    for (std::size_t q = 0; q < keep.size(); ++q) projection.set(q, j, r[keep[q]]);
  }
  std::vector<std::string> labels;
  for (std::size_t k : keep) labels.push_back(L.labels()[k]);
  std::vector<BasisProduct> products;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      SparseVector v = projection.apply(L.product(keep[a], keep[b]));
      if (!v.empty()) products.push_back({a, b, std::move(v)});
    }
  }
  return {LeibnizAlgebra(std::move(labels), std::move(products), LeibnizAlgebra::Verify::kNone),
          std::move(projection)};
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& L, const RatMatrix& basis,
                            std::vector<std::string> labels, LeibnizAlgebra::Verify verify) {
  if (basis.rows() != L.dim() || basis.cols() != L.dim()) throw InputError("basis matrix has wrong size");
  const auto inv = inverse(basis);
  if (!inv) throw MathError("basis vectors are linearly dependent");
  if (labels.empty()) labels = L.labels();
  if (labels.size() != L.dim()) throw InputError("label count does not match dimension");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(basis.column(j));
  std::vector<BasisProduct> products;
  for (std::size_t a = 0; a < L.dim(); ++a) {
    for (std::size_t b = 0; b < L.dim(); ++b) {
      SparseVector v = to_sparse(inv->apply(L.bracket(cols[a], cols[b])));
      if (!v.empty()) products.push_back({a, b, std::move(v)});
    }
  }
  return LeibnizAlgebra(std::move(labels), std::move(products), verify);
}

}  // namespace leibniz
