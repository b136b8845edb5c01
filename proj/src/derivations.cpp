#include "leibniz/derivations.hpp"

#include <random>

#include "leibniz/errors.hpp"

namespace leibniz {

DerivationSpace derivation_space(const LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  // Unknown D[t][j] (coefficient of e_t in d(e_j)) sits at column t * n + j.
  auto col = [n](std::size_t t, std::size_t j) { return t * n + j; };
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // d([e_i,e_j]) - [d(e_i), e_j] - [e_i, d(e_j)] = 0, one row per coordinate s
      std::vector<SparseVector> by_s(n);
      for (const auto& g : L.product(i, j)) {
        for (std::size_t s = 0; s < n; ++s) by_s[s].push_back({col(s, g.index), g.value});
      }
      for (std::size_t t = 0; t < n; ++t) {
        for (const auto& g : L.product(t, j)) by_s[g.index].push_back({col(t, i), -g.value});
        for (const auto& g : L.product(i, t)) by_s[g.index].push_back({col(t, j), -g.value});
      }
      for (auto& r : by_s) {
        canonicalize(r);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
  }
  DerivationSpace out;
  out.flat = kernel_basis(RatMatrix::from_rows(n * n, std::move(rows)));
  for (const auto& v : out.flat.vectors()) out.basis.push_back(RatMatrix::unflatten(n, n, v));
  return out;
}

SubspaceBasis inner_derivations(const LeibnizAlgebra& L) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    gens.push_back(right_mult_matrix(L, unit_vector(L.dim(), i)).flatten());
  }
  return SubspaceBasis::span(L.dim() * L.dim(), gens);
}

bool is_derivation(const LeibnizAlgebra& L, const RatMatrix& m) {
  const std::size_t n = L.dim();
  if (m.rows() != n || m.cols() != n) throw InputError("derivation matrix has wrong size");
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(m.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = m.apply(to_dense(L.product(i, j), n));
      const Vector a = L.bracket(images[i], unit_vector(n, j));
      const Vector b = L.bracket(unit_vector(n, i), images[j]);
      for (std::size_t s = 0; s < n; ++s) lhs[s] -= a[s] + b[s];
      if (!is_zero(lhs)) return false;
    }
  }
  return true;
}

namespace {

RatMatrix combine(std::span<const RatMatrix> set, const std::vector<Rational>& coeffs) {
  RatMatrix acc(set.front().rows(), set.front().cols());
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!is_zero(coeffs[i])) acc = acc + coeffs[i] * set[i];
  }
  return acc;
}

bool all_zero(const std::vector<Rational>& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return is_zero(r); });
}

}  // namespace

NilIndependenceVerdict check_nil_independent(std::span<const RatMatrix> set,
                                             const NilIndependenceOptions& opts) {
  if (set.empty()) throw InputError("nil-independence needs at least one matrix");
  for (const auto& m : set) {
    if (!m.is_square() || m.rows() != set.front().rows()) {
      throw InputError("nil-independence needs square matrices of one size");
    }
  }
  const std::size_t k = set.size();
  NilIndependenceVerdict verdict;

  auto test = [&](const std::vector<Rational>& coeffs, const char* stage) {
    if (all_zero(coeffs)) return false;
    ++verdict.combinations_tested;
    if (!is_nilpotent_matrix(combine(set, coeffs))) return false;
    verdict.independent_probable = false;
    verdict.witness = coeffs;
    verdict.stage = stage;
    return true;
  };

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> c(k);
    c[i] = 1;
    if (test(c, "single")) return verdict;
  }

  std::size_t patterns = 1;
  for (std::size_t i = 0; i < k && patterns <= opts.pattern_limit; ++i) patterns *= 3;
  if (patterns <= opts.pattern_limit) {
    for (std::size_t code = 0; code < patterns; ++code) {
      std::vector<Rational> c(k);
      std::size_t rest = code;
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = static_cast<long>(rest % 3) - 1;
        rest /= 3;
      }
      if (test(c, "pattern")) return verdict;
    }
  }

  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    std::vector<Rational> c(k);
    const bool integral = t < opts.trials / 2;
    for (auto& x : c) {
      if (integral) {
        x = static_cast<long>(rng() % 7) - 3;
      } else {
        x = make_rational(static_cast<std::int64_t>(rng() % 19) - 9,
                          static_cast<std::int64_t>(rng() % 9) + 1);
      }
    }
    if (test(c, "random")) return verdict;
  }
  return verdict;
}

CharSequence characteristic_sequence(const LeibnizAlgebra& L, std::size_t samples,
                                     std::uint64_t seed) {
  const std::size_t n = L.dim();
  CharSequence best;
  if (n == 0) return best;
  const SubspaceBasis l2 = square(L);
  if (l2.dim() == n) throw MathError("L^2 = L, no element outside L^2");

  bool have = false;
  auto consider = [&](const Vector& x) {
    if (l2.contains(x)) return;
    auto blocks = nilpotent_jordan_blocks(right_mult_matrix(L, x));
    if (!have || best.parts < blocks) {
      best.parts = std::move(blocks);
      best.witness = x;
      have = true;
    }
  };

  for (std::size_t c : l2.complement_indices()) consider(unit_vector(n, c));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    for (auto& v : x) v = static_cast<long>(rng() % 5) - 2;
    consider(x);
  }
  return best;
}

}  // namespace leibniz
