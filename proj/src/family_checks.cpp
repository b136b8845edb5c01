#include "leibniz/family_checks.hpp"

#include <optional>
#include <random>

namespace leibniz {

namespace {

struct Positions {
  std::size_t e1, e2, f1, h;
};

Positions positions(const TwoBlockParams& p) { return {0, 1, p.n1 + 1, p.n1 + p.n2 + 1}; }

LeibnizAlgebra build(const TwoBlockParams& p) {
  return build_L_particular(p.n1, p.n2, p.e2_square, p.f1_square, p.e1_e2, p.e1_f1);
}

}  // namespace

DerivationEntries derivation_entries(const TwoBlockParams& p, const RatMatrix& d) {
  const auto [e1, e2, f1, h] = positions(p);
  // Column y holds d(y); entry (x, y) is the coefficient of x.
  return {d.at(e1, e1), d.at(e2, e1), d.at(e2, e2), d.at(f1, e1),
          d.at(f1, f1), d.at(f1, e2), d.at(e2, f1), d.at(h, h)};
}

std::array<Rational, 5> shape_residuals(const TwoBlockParams& p, const DerivationEntries& x) {
  const Rational &a1 = p.e2_square, &a2 = p.f1_square, &b1 = p.e1_e2, &b2 = p.e1_f1;
  const Rational weight = 2 * x.e1_in_e1 + x.e2_in_e1 * b1 + x.f1_in_e1 * b2;
  return {
      a1 * x.e2_in_f1 + a2 * x.f1_in_e2,
      -2 * x.e2_in_e1 * a1 + x.e1_in_e1 * b1 + x.e2_in_e1 * b1 * b1 + x.f1_in_e1 * b1 * b2 -
          x.e2_in_e2 * b1 - x.f1_in_e2 * b2,
      -2 * x.f1_in_e1 * a2 + x.e1_in_e1 * b2 + x.e2_in_e1 * b1 * b2 + x.f1_in_e1 * b2 * b2 -
          x.e2_in_f1 * b1 - x.f1_in_f1 * b2,
      a1 * (weight - 2 * x.e2_in_e2),
      a2 * (weight - 2 * x.f1_in_f1),
  };
}

ShapeReport check_derivation_shape(const TwoBlockParams& p) {
  const LeibnizAlgebra L = build(p);
  const auto pos = positions(p);
  const DerivationSpace der = derivation_space(L);
  ShapeReport report;
  report.derivations = der.dim();
  auto note = [&](const std::string& what) {
    if (report.first_failure.empty()) report.first_failure = what;
  };
  for (std::size_t b = 0; b < der.dim(); ++b) {
    const RatMatrix& d = der.basis[b];
    const DerivationEntries x = derivation_entries(p, d);
    const auto res = shape_residuals(p, x);
    for (std::size_t r = 0; r < res.size(); ++r) {
      if (!is_zero(res[r])) {
        ++report.restriction_failures;
        note("restriction " + std::to_string(r + 1) + " on basis derivation " + std::to_string(b));
      }
    }
    if (x.h_in_h != 2 * x.e1_in_e1 + x.e2_in_e1 * p.e1_e2 + x.f1_in_e1 * p.e1_f1) {
      ++report.h_weight_failures;
    }
    if (p.n1 > p.n2) {
      // The coefficient of e_{i+s-1} in d(f_i) vanishes for 2 <= s <= n1 - n2 + 1.
      for (std::size_t i = 1; i <= p.n2; ++i) {
        for (std::size_t s = 2; s <= p.n1 - p.n2 + 1; ++s) {
          const std::size_t target = i + s - 1;  // 1-based e index
          if (target > p.n1 + 1) continue;
          if (!is_zero(d.at(target - 1, pos.f1 + i - 1))) {
            ++report.chain_offset_failures;
            note("e" + std::to_string(target) + " in d(f" + std::to_string(i) + ")");
          }
        }
      }
    }
  }
  return report;
}

bool NilDirectionsReport::ok() const {
  for (bool e : exists) {
    if (!e) return false;
  }
  return independent && zero_diagonal_non_nilpotent == 0;
}

namespace {

// Derivations expressed through the flattened basis of Der. Each prescribed
// entry is a linear functional on basis coefficients.
class DerivationSlice {
 public:
  DerivationSlice(const DerivationSpace& der, std::size_t n) : der_(der), n_(n) {}

  // Entry (x, y) of the derivation, i.e. coefficient of x in d(y).
  std::size_t entry(std::size_t x, std::size_t y) const { return x * n_ + y; }

  std::optional<RatMatrix> find(const std::vector<std::pair<std::size_t, Rational>>& fixed) const {
    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& [idx, value] : fixed) {
      Vector row;
      for (const auto& b : der_.flat.vectors()) row.push_back(b[idx]);
      rows.push_back(std::move(row));
      rhs.push_back(value);
    }
    auto sol = solve(RatMatrix::from_dense(rows), rhs);
    if (!sol) return std::nullopt;
    return combine(*sol);
  }

  // Basis of the coefficient vectors satisfying the homogeneous constraints.
  SubspaceBasis kernel(const std::vector<std::size_t>& zero_entries) const {
    std::vector<Vector> rows;
    for (std::size_t idx : zero_entries) {
      Vector row;
      for (const auto& b : der_.flat.vectors()) row.push_back(b[idx]);
      rows.push_back(std::move(row));
    }
    if (rows.empty()) return SubspaceBasis::whole(der_.dim());
    return kernel_basis(RatMatrix::from_dense(rows));
  }

  RatMatrix combine(const Vector& coeffs) const {
    RatMatrix acc(n_, n_);
    for (std::size_t k = 0; k < der_.dim(); ++k) {
      if (!is_zero(coeffs[k])) acc = acc + coeffs[k] * der_.basis[k];
    }
    return acc;
  }

 private:
  const DerivationSpace& der_;
  std::size_t n_;
};

}  // namespace

NilDirectionsReport check_nil_directions(const TwoBlockParams& p, const NilIndependenceOptions& opts,
                                         std::size_t samples) {
  const LeibnizAlgebra L = build(p);
  const auto [e1, e2, f1, h] = positions(p);
  (void)h;
  const DerivationSpace der = derivation_space(L);
  const DerivationSlice slice(der, L.dim());
  NilDirectionsReport report;
  report.der_dim = der.dim();

  const std::size_t w_e1 = slice.entry(e1, e1), w_e2 = slice.entry(e2, e2), w_f1 = slice.entry(f1, f1);
  const std::size_t cross_a = slice.entry(f1, e2), cross_b = slice.entry(e2, f1);

  std::vector<RatMatrix> directions;
  const std::array<std::array<long, 3>, 3> weights{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (std::size_t k = 0; k < 3; ++k) {
    std::optional<RatMatrix> d;
    for (std::size_t cross : {cross_a, cross_b}) {
      d = slice.find({{w_e1, weights[k][0]}, {w_e2, weights[k][1]}, {w_f1, weights[k][2]}, {cross, 0}});
      if (d) break;
    }
    report.exists[k] = d.has_value();
    if (d) directions.push_back(*d);
  }
  {
    std::optional<RatMatrix> d = slice.find({{w_e1, 0}, {w_e2, 0}, {w_f1, 0}, {cross_a, 1}, {cross_b, 1}});
    if (!d) d = slice.find({{w_e1, 0}, {w_e2, 0}, {w_f1, 0}, {cross_a, 1}});
    if (!d) d = slice.find({{w_e1, 0}, {w_e2, 0}, {w_f1, 0}, {cross_b, 1}});
    if (d && !is_zero(d->at(f1, e2) * d->at(e2, f1))) {
      report.exists[3] = true;
      directions.push_back(*d);
    }
  }
  if (report.exists[0] && report.exists[1] && report.exists[2] && report.exists[3]) {
    report.independent = check_nil_independent(directions, opts).independent_probable;
  }

  // Zero diagonal weights and a vanishing cross product: one of the two cross
  // entries is zero.
  std::mt19937_64 rng(opts.seed);
  for (std::size_t cross : {cross_a, cross_b}) {
    const SubspaceBasis k = slice.kernel({w_e1, w_e2, w_f1, cross});
    for (std::size_t s = 0; s < samples / 2 && k.dim() > 0; ++s) {
      Vector coeffs(der.dim());
      for (const auto& v : k.vectors()) {
        const Rational c = static_cast<long>(rng() % 7) - 3;
        for (std::size_t t = 0; t < coeffs.size(); ++t) coeffs[t] += c * v[t];
      }
      ++report.zero_diagonal_samples;
      if (!is_nilpotent_matrix(slice.combine(coeffs))) ++report.zero_diagonal_non_nilpotent;
    }
  }
  return report;
}

}  // namespace leibniz
