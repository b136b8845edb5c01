#include "leibniz/cohomology.hpp"

#include <functional>
#include <limits>

#include "leibniz/constructions.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

LeibnizModule::LeibnizModule(LeibnizAlgebra algebra, std::size_t dim, std::vector<RatMatrix> left,
                             std::vector<RatMatrix> right)
    : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != algebra_.dim() || right_.size() != algebra_.dim()) {
    throw InputError("module needs one left and one right action per basis element");
  }
  for (std::size_t x = 0; x < algebra_.dim(); ++x) {
    for (const RatMatrix* m : {&left_[x], &right_[x]}) {
      if (m->rows() != dim_ || m->cols() != dim_) throw InputError("action matrix has wrong size");
    }
  }
}

LeibnizModule adjoint_module(const LeibnizAlgebra& L) {
  std::vector<RatMatrix> left, right;
  for (std::size_t x = 0; x < L.dim(); ++x) {
    left.push_back(left_mult_matrix(L, unit_vector(L.dim(), x)));
    right.push_back(right_mult_matrix(L, unit_vector(L.dim(), x)));
  }
  return LeibnizModule(L, L.dim(), std::move(left), std::move(right));
}

namespace {

RatMatrix action_of(const std::vector<const RatMatrix*>& basis_actions, const SparseVector& v,
                    std::size_t dim) {
  RatMatrix acc(dim, dim);
  for (const auto& e : v) acc = acc + e.value * *basis_actions[e.index];
  return acc;
}

}  // namespace

ModuleAxiomReport check_module_axioms(const LeibnizModule& M) {
  const auto& L = M.algebra();
  std::vector<const RatMatrix*> lefts, rights;
  for (std::size_t x = 0; x < L.dim(); ++x) {
    lefts.push_back(&M.left(x));
    rights.push_back(&M.right(x));
  }
  ModuleAxiomReport report;
  auto fail = [&](const char* which, std::size_t x, std::size_t y) {
    if (!report.first_failure) {
      report.first_failure = std::string(which) + " at (" + L.labels()[x] + ", " + L.labels()[y] + ")";
    }
    ++report.failures;
  };
  for (std::size_t x = 0; x < L.dim(); ++x) {
    for (std::size_t y = 0; y < L.dim(); ++y) {
      const RatMatrix lxy = action_of(lefts, L.product(x, y), M.dim());
      const RatMatrix rxy = action_of(rights, L.product(x, y), M.dim());
      const auto &lx = M.left(x), &ly = M.left(y), &rx = M.right(x), &ry = M.right(y);
      // [m,[x,y]] = [[m,x],y] - [[m,y],x]
      if (!(rxy == ry * rx - rx * ry)) fail("[m,[x,y]]", x, y);
      // [x,[m,y]] = [[x,m],y] - [[x,y],m]
      if (!(lx * ry == ry * lx - lxy)) fail("[x,[m,y]]", x, y);
      // [x,[y,m]] = [[x,y],m] - [[x,m],y]
      if (!(lx * ly == lxy - ry * lx)) fail("[x,[y,m]]", x, y);
    }
  }
  return report;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

Cochain::Cochain(std::size_t degree, std::size_t dim_L, std::size_t dim_M)
    : degree_(degree), dim_L_(dim_L), dim_M_(dim_M) {
  const std::uint64_t tuples = saturating_pow(dim_L, degree);
  if (tuples > (std::uint64_t{1} << 32)) {
    throw GuardError("cochain space too large", saturating_mul(tuples, dim_M));
  }
  values_.resize(tuples);
}

Cochain Cochain::from_vector(std::size_t degree, std::size_t dim_L, std::size_t dim_M,
                             const Vector& coeffs) {
  Cochain c(degree, dim_L, dim_M);
  if (coeffs.size() != c.size()) throw InputError("cochain coefficient vector has wrong length");
  for (std::size_t t = 0; t < c.values_.size(); ++t) {
    for (std::size_t s = 0; s < dim_M; ++s) {
      const Rational& v = coeffs[t * dim_M + s];
      if (!leibniz::is_zero(v)) c.values_[t].push_back({s, v});
    }
  }
  return c;
}

std::size_t Cochain::tuple_index(std::span<const std::size_t> args) const {
  if (args.size() != degree_) throw InputError("wrong number of cochain arguments");
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= dim_L_) throw InputError("cochain argument out of range");
    idx = idx * dim_L_ + a;
  }
  return idx;
}

std::vector<std::size_t> Cochain::tuple_args(std::size_t index) const {
  std::vector<std::size_t> args(degree_);
  for (std::size_t k = degree_; k-- > 0;) {
    args[k] = index % dim_L_;
    index /= dim_L_;
  }
  return args;
}

void Cochain::add(std::span<const std::size_t> args, std::size_t target, const Rational& c) {
  if (target >= dim_M_) throw InputError("cochain target out of range");
  auto& v = values_[tuple_index(args)];
  v.push_back({target, c});
  canonicalize(v);
}

void Cochain::set_value(std::size_t tuple, SparseVector v) {
  canonicalize(v);
  for (const auto& e : v) {
    if (e.index >= dim_M_) throw InputError("cochain target out of range");
  }
  values_.at(tuple) = std::move(v);
}

Vector Cochain::to_vector() const {
  Vector out(size());
  for (std::size_t t = 0; t < values_.size(); ++t) {
    for (const auto& e : values_[t]) out[t * dim_M_ + e.index] = e.value;
  }
  return out;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_) {
    if (!v.empty()) return false;
  }
  return true;
}

std::uint64_t coboundary_cells(std::size_t dim_L, std::size_t dim_M, std::size_t n) {
  const std::uint64_t rows = saturating_mul(saturating_pow(dim_L, n + 1), dim_M);
  const std::uint64_t cols = saturating_mul(saturating_pow(dim_L, n), dim_M);
  return saturating_mul(rows, cols);
}

namespace {

void check_guards(const LeibnizModule& M, std::size_t n, const CohomologyOptions& opts) {
  const std::uint64_t cells = coboundary_cells(M.algebra().dim(), M.dim(), n);
  if (n > opts.max_degree) {
    throw GuardError("coboundary degree " + std::to_string(n) + " exceeds the cap " +
                         std::to_string(opts.max_degree),
                     cells);
  }
  if (cells > opts.max_cells) {
    throw GuardError("coboundary matrix of degree " + std::to_string(n) + " exceeds the cell guard",
                     cells);
  }
}

// Walks the three sums of d^n for one output tuple X and reports each term as
// (sign or structure constant, matrix or nullptr, argument tuple of phi).
// `emit(coeff, action, tuple)` adds coeff * action(phi(tuple)), with a null
// action meaning the identity.
template <class Emit>
void expand_coboundary(const LeibnizModule& M, std::size_t n, const std::vector<std::size_t>& X,
                       std::vector<std::size_t>& scratch, Emit&& emit) {
  const auto& L = M.algebra();
  const std::size_t d = L.dim();
  auto index_skipping = [&](std::size_t skip) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < X.size(); ++k) {
      if (k != skip) idx = idx * d + scratch[k];
    }
    return idx;
  };
  scratch = X;
  // [x_1, phi(x_2..x_{n+1})]
  emit(Rational(1), &M.left(X[0]), index_skipping(0));
  // sum_{i=2}^{n+1} (-1)^i [phi(.., ^x_i, ..), x_i]; i is 1-based here
  for (std::size_t i = 2; i <= n + 1; ++i) {
    emit(Rational(i % 2 == 0 ? 1 : -1), &M.right(X[i - 1]), index_skipping(i - 1));
  }
  // sum_{i<j} (-1)^{j+1} phi(.., [x_i,x_j] at i, .., ^x_j, ..)
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      const Rational sign((j + 1) % 2 == 0 ? 1 : -1);
      for (const auto& g : L.product(X[i - 1], X[j - 1])) {
        scratch[i - 1] = g.index;
        emit(sign * g.value, nullptr, index_skipping(j - 1));
      }
      scratch[i - 1] = X[i - 1];
    }
  }
}

}  // namespace

Cochain coboundary(const LeibnizModule& M, const Cochain& phi, const CohomologyOptions& opts) {
  const std::size_t n = phi.degree();
  const std::size_t d = M.algebra().dim();
  if (phi.dim_L() != d || phi.dim_M() != M.dim()) throw InputError("cochain does not match module");
  if (n > opts.max_degree) {
    throw GuardError("coboundary degree exceeds the cap", coboundary_cells(d, M.dim(), n));
  }
  Cochain out(n + 1, d, M.dim());
  std::vector<std::size_t> scratch;
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto X = out.tuple_args(t);
    SparseVector acc;
    expand_coboundary(M, n, X, scratch, [&](const Rational& c, const RatMatrix* action, std::size_t src) {
      const SparseVector& v = phi.value(src);
      if (v.empty()) return;
      if (action) {
        axpy(acc, c, action->apply(v));
      } else {
        axpy(acc, c, v);
      }
    });
    out.set_value(t, std::move(acc));
  }
  return out;
}

RatMatrix coboundary_matrix(const LeibnizModule& M, std::size_t n, const CohomologyOptions& opts) {
  check_guards(M, n, opts);
  const std::size_t d = M.algebra().dim();
  const std::size_t m = M.dim();
  const Cochain shape_out(n + 1, d, m);
  const std::size_t cols = static_cast<std::size_t>(saturating_pow(d, n)) * m;
  std::vector<SparseVector> rows(shape_out.size());
  std::vector<std::size_t> scratch;
  for (std::size_t t = 0; t < shape_out.tuple_count(); ++t) {
    const auto X = shape_out.tuple_args(t);
    // Row (X, s) collects coefficient of phi(src)_u as (action)_{s,u}.
    expand_coboundary(M, n, X, scratch, [&](const Rational& c, const RatMatrix* action, std::size_t src) {
      for (std::size_t s = 0; s < m; ++s) {
        auto& row = rows[t * m + s];
        if (action) {
          for (const auto& e : action->row(s)) row.push_back({src * m + e.index, c * e.value});
        } else {
          row.push_back({src * m + s, c});
        }
      }
    });
  }
  for (auto& r : rows) canonicalize(r);
  return RatMatrix::from_rows(cols, std::move(rows));
}

CohomologyReport cohomology_report(const LeibnizModule& M, std::size_t n,
                                   const CohomologyOptions& opts) {
  CohomologyReport report;
  report.degree = n;
  const std::size_t d = M.algebra().dim();
  report.dim_CL = static_cast<std::size_t>(saturating_pow(d, n)) * M.dim();
  const RatMatrix dn = coboundary_matrix(M, n, opts);
  if (opts.with_bases) {
    report.cocycles = kernel_basis(dn);
    report.dim_ZL = report.cocycles->dim();
  } else {
    report.dim_ZL = report.dim_CL - rank_of_rows(dn.cols(), dn.row_data());
  }
  if (n == 0) {
    if (opts.with_bases) report.coboundaries = SubspaceBasis::span(report.dim_CL, {});
  } else {
    const RatMatrix prev = coboundary_matrix(M, n - 1, opts);
    if (opts.with_bases) {
      report.coboundaries = column_space(prev);
      report.dim_BL = report.coboundaries->dim();
    } else {
      report.dim_BL = rank_of_rows(prev.cols(), prev.row_data());
    }
  }
  if (report.dim_BL > report.dim_ZL) throw MathError("coboundaries exceed cocycles, d o d != 0");
  report.dim_HL = report.dim_ZL - report.dim_BL;
  return report;
}

std::optional<Cochain> coboundary_witness(const LeibnizModule& M, const Cochain& phi,
                                          const CohomologyOptions& opts) {
  if (phi.degree() == 0) throw InputError("degree-0 cochains have no preimage");
  const RatMatrix prev = coboundary_matrix(M, phi.degree() - 1, opts);
  auto sol = solve(prev, phi.to_vector());
  if (!sol) return std::nullopt;
  return Cochain::from_vector(phi.degree() - 1, phi.dim_L(), phi.dim_M(), *sol);
}

CompletenessEvidence is_complete(const LeibnizAlgebra& L, const CohomologyOptions& opts) {
  CompletenessEvidence ev;
  ev.center_dim = center(L).dim();
  ev.h1 = cohomology_report(adjoint_module(L), 1, opts);
  ev.complete = ev.center_dim == 0 && ev.h1.dim_HL == 0;
  return ev;
}

RigidityEvidence is_cohomologically_rigid(const LeibnizAlgebra& L, const CohomologyOptions& opts) {
  RigidityEvidence ev;
  ev.h2 = cohomology_report(adjoint_module(L), 2, opts);
  ev.rigid = ev.h2.dim_HL == 0;
  return ev;
}

std::string to_string(CocycleStatus s) {
  switch (s) {
    case CocycleStatus::kPass: return "pass";
    case CocycleStatus::kNotCocycle: return "not-cocycle";
    case CocycleStatus::kNotCoboundary: return "not-coboundary";
    case CocycleStatus::kAmbiguous: return "ambiguous";
  }
  return "?";
}

bool CocycleListReport::ok() const {
  for (const auto& item : items) {
    if (item.status != CocycleStatus::kPass && item.status != CocycleStatus::kAmbiguous) return false;
  }
  return dim_ZL2 == dim_BL2;
}

namespace {

// Writes phi(a, b) += c * target, where every name is a basis label such as
// "e3". Labels outside the basis (past the end of a chain) contribute nothing.
class ListedCochain {
 public:
  explicit ListedCochain(const LeibnizAlgebra& R) : R_(R), phi_(2, R.dim(), R.dim()) {}

  ListedCochain& put(const std::string& a, const std::string& b, const Rational& c,
                     const std::string& target) {
    auto ia = find(a), ib = find(b), it = find(target);
    if (ia && ib && it && !is_zero(c)) {
      const std::size_t args[2] = {*ia, *ib};
      phi_.add(args, *it, c);
    }
    return *this;
  }
  const Cochain& cochain() const { return phi_; }

 private:
  std::optional<std::size_t> find(const std::string& label) const {
    const auto& labels = R_.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return i;
    }
    return std::nullopt;
  }

  const LeibnizAlgebra& R_;
  Cochain phi_;
};

std::string lbl(char c, long i) { return std::string(1, c) + std::to_string(i); }

}  // namespace

CocycleListReport verify_cocycle_list(std::size_t n1, std::size_t n2, const CohomologyOptions& opts) {
  const LeibnizAlgebra R = build_R_particular(n1, n2);
  const LeibnizModule M = adjoint_module(R);
  CohomologyOptions o = opts;
  o.with_bases = false;
  const RatMatrix d1 = coboundary_matrix(M, 1, o);
  const RatMatrix d2 = coboundary_matrix(M, 2, o);

  CocycleListReport report;
  report.n1 = n1;
  report.n2 = n2;
  report.dim_ZL2 = d2.cols() - rank_of_rows(d2.cols(), d2.row_data());
  report.dim_BL2 = rank_of_rows(d1.cols(), d1.row_data());

  std::vector<SparseVector> spanning;
  auto classify = [&](const Cochain& phi, std::string& note) {
    const Vector v = phi.to_vector();
    spanning.push_back(to_sparse(v));
    if (!d2.apply(to_sparse(v)).empty()) return CocycleStatus::kNotCocycle;
    if (!solve(d1, v)) return CocycleStatus::kNotCoboundary;
    note.clear();
    return CocycleStatus::kPass;
  };
  auto check = [&](const std::string& name, const ListedCochain& c) {
    CocycleItem item{name, CocycleStatus::kPass, ""};
    item.status = classify(c.cochain(), item.note);
    report.items.push_back(item);
  };
  auto ambiguous = [&](const std::string& name, const ListedCochain& c, const std::string& why) {
    std::string ignored;
    const CocycleStatus reading = classify(c.cochain(), ignored);
    spanning.pop_back();  // kept out of the span count
    report.items.push_back({name, CocycleStatus::kAmbiguous, why + "; reading checked: " + to_string(reading)});
  };
  const long N1 = static_cast<long>(n1), N2 = static_cast<long>(n2);
  const Rational half = make_rational(1, 2);

  check("cochain1", ListedCochain(R).put("e1", "e1", 1, "h"));
  check("cochain2", ListedCochain(R).put("x1", "e1", 1, "h").put("e1", "x1", 1, "h"));
  check("cochain3", ListedCochain(R).put("x1", "x1", 1, "h"));
  check("cochain4", ListedCochain(R).put("x3", "x1", 1, "h"));
  ambiguous("cochain5",
            ListedCochain(R).put("f1", "x1", -2, "h").put("f1", "x3", 1, "h").put("x3", "f1", -1, "h"),
            "definition refers to cochain11(x3,f1); read as cochain5(x3,f1) = -h");
  check("cochain6",
        ListedCochain(R).put("x2", "e2", 1, "h").put("e2", "x2", -1, "h").put("e2", "x1", 1, "h"));
  ambiguous("cochain7",
            ListedCochain(R).put("f1", "x3", 1, "h").put("x3", "f1", -1, "h").put("f1", "x1", -2, "h"),
            "coincides with the reading of cochain5");
  {
    ListedCochain c(R);
    c.put("e1", "e1", half, "x3").put("h", "x1", 1, "x3");
    for (long i = 1; i <= N2; ++i) c.put("h", lbl('f', i), half, lbl('f', i)).put(lbl('f', i), "h", -half, lbl('f', i));
    check("cochain8", c);
  }
  {
    ListedCochain c(R);
    c.put("e1", "e1", half, "x2").put("h", "x1", 1, "x2");
    for (long i = 2; i <= N1 + 1; ++i) c.put("h", lbl('e', i), half, lbl('e', i)).put(lbl('e', i), "h", -half, lbl('e', i));
    check("cochain9", c);
  }
  {
    ListedCochain c(R);
    c.put("h", "h", -1, "h").put("h", "x1", 1, "x1").put("e1", "e1", half, "x1");
    c.put("h", "e1", half, "e1").put("e1", "h", -half, "e1");
    for (long i = 3; i <= N1 + 1; ++i) {
      const Rational w = make_rational(i - 2, 2);
      c.put("h", lbl('e', i), w, lbl('e', i)).put(lbl('e', i), "h", -w, lbl('e', i));
    }
    // The printed weight is (i-1)/2 with i unbound in this line; read as (j-1)/2.
    for (long j = 2; j <= N2; ++j) {
      const Rational w = make_rational(j - 1, 2);
      c.put("h", lbl('f', j), w, lbl('f', j)).put(lbl('f', j), "h", -w, lbl('f', j));
    }
    check("cochain10", c);
  }
  {
    ListedCochain c(R);
    c.put("e1", "e1", 1, "e1").put("e1", "h", 1, "h").put("h", "e1", -1, "h");
    c.put("h", "x1", 1, "e1").put("x1", "h", 1, "e1");
    for (long i = 2; i <= N1; ++i) c.put("h", lbl('e', i), 1, lbl('e', i + 1)).put(lbl('e', i), "h", -1, lbl('e', i + 1));
    for (long j = 1; j <= N2 - 1; ++j) c.put("h", lbl('f', j), 1, lbl('f', j + 1)).put(lbl('f', j), "h", -1, lbl('f', j + 1));
    check("cochain11", c);
  }
  for (long j = 2; j <= N1 + 1; ++j) {
    ListedCochain c(R);
    c.put("e1", "e1", 1, lbl('e', j)).put("e1", "h", 1, lbl('e', j + 1)).put("h", "e1", -1, lbl('e', j + 1));
    c.put("x1", "h", j - 2, lbl('e', j)).put("h", "x1", -(j - 4), lbl('e', j));
    c.put("x2", "h", 1, lbl('e', j)).put("h", "x2", -1, lbl('e', j));
    check("cochain12_" + std::to_string(j), c);
  }
  for (long j = 1; j <= N2; ++j) {
    ListedCochain c(R);
    c.put("e1", "e1", 1, lbl('f', j)).put("e1", "h", 1, lbl('f', j + 1)).put("h", "e1", -1, lbl('f', j + 1));
    c.put("x1", "h", j - 1, lbl('f', j)).put("h", "x1", 3 - j, lbl('f', j));
    c.put("x3", "h", 1, lbl('f', j)).put("h", "x3", -1, lbl('f', j));
    check("cochain13_" + std::to_string(j), c);
  }
  for (long j = 3; j <= N1; ++j) {
    ListedCochain c(R);
    c.put("e1", lbl('e', j), 1, "h").put(lbl('e', j), "e1", -1, "h");
    c.put("x1", lbl('e', j + 1), j - 1, "h").put(lbl('e', j + 1), "x1", 3 - j, "h");
    c.put("x2", lbl('e', j + 1), 1, "h").put(lbl('e', j + 1), "x2", -1, "h");
    check("cochain14_" + std::to_string(j), c);
  }
  for (long j = 1; j <= N2 - 1; ++j) {
    ListedCochain c(R);
    c.put("e1", lbl('f', j), 1, "h").put(lbl('f', j), "e1", -1, "h");
    c.put("x1", lbl('f', j + 1), j, "h").put(lbl('f', j + 1), "x1", j, "h");
    c.put("x3", lbl('f', j + 1), 1, "h").put(lbl('f', j + 1), "x3", -1, "h");
    check("cochain15_" + std::to_string(j), c);
  }

  // Cocycles of R/<h>, extended by zero to every argument or value involving h.
  const std::size_t h = R.index_of("h");
  const Quotient q = quotient_by_ideal(R, SubspaceBasis::span(R.dim(), {unit_vector(R.dim(), h)}));
  std::vector<std::size_t> lift;  // quotient index -> R index
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (i != h) lift.push_back(i);
  }
  const LeibnizModule QM = adjoint_module(q.algebra);
  const SubspaceBasis lie_cocycles = kernel_basis(coboundary_matrix(QM, 2, o));
  report.lie_cocycles_total = lie_cocycles.dim();
  const std::size_t dq = q.algebra.dim();
  for (const auto& v : lie_cocycles.vectors()) {
    Cochain phi(2, R.dim(), R.dim());
    for (std::size_t a = 0; a < dq; ++a) {
      for (std::size_t b = 0; b < dq; ++b) {
        for (std::size_t t = 0; t < dq; ++t) {
          const Rational& c = v[(a * dq + b) * dq + t];
          if (is_zero(c)) continue;
          const std::size_t args[2] = {lift[a], lift[b]};
          phi.add(args, lift[t], c);
        }
      }
    }
    const SparseVector sv = to_sparse(phi.to_vector());
    spanning.push_back(sv);
    if (d2.apply(sv).empty()) ++report.lie_cocycles_passing;
  }
  report.listed_span_dim = rank_of_rows(d2.cols(), spanning);
  return report;
}

}  // namespace leibniz
