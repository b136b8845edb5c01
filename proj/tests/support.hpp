#pragma once

// Helpers shared by the unit and acceptance tests. The dense elimination here
// is deliberately separate from the library so it can serve as an oracle.

#include <random>
#include <string>
#include <vector>

#include "leibniz/cohomology.hpp"
#include "leibniz/constructions.hpp"

namespace testing_support {

using leibniz::Rational;
using leibniz::Vector;

// Textbook Gaussian elimination on a dense copy.
inline std::size_t dense_rank(std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Oracle for dim Der: the residual map d -> (d[x,y] - [dx,y] - [x,dy]) over
// all basis pairs, evaluated with generic brackets on each matrix unit and
// reduced by textbook elimination.
inline std::size_t brute_force_derivation_dim(const leibniz::LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> columns;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      leibniz::RatMatrix unit(n, n);
      unit.set(t, j, 1);
      Vector residual;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const Vector x = leibniz::unit_vector(n, a), y = leibniz::unit_vector(n, b);
          Vector r = unit.apply(L.bracket(x, y));
          const Vector p = L.bracket(unit.apply(x), y), q = L.bracket(x, unit.apply(y));
          for (std::size_t s = 0; s < n; ++s) residual.push_back(r[s] - p[s] - q[s]);
        }
      }
      columns.push_back(residual);
    }
  }
  return n * n - dense_rank(columns);
}

struct CorpusEntry {
  std::string name;
  leibniz::LeibnizAlgebra algebra;
};

inline const std::vector<std::string>& corpus_specs() {
  static const std::vector<std::string> specs = {"2,1", "2,2", "3,1", "3,2", "3,2,1"};
  return specs;
}

// Model algebras, their solvable extensions, and one member of the nilpotent
// family with mixed parameters, for every corpus spec.
inline std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& s : corpus_specs()) {
    const auto spec = leibniz::parse_char_seq(s);
    out.push_back({"n_c(" + s + ")", leibniz::build_n_c(spec)});
    out.push_back({"r_c(" + s + ")", leibniz::build_r_c(spec)});
    std::vector<Rational> alphas, betas;
    for (std::size_t b = 0; b < spec.blocks(); ++b) {
      alphas.push_back(static_cast<long>(b % 3) - 1);
      betas.push_back(static_cast<long>(b + 1));
    }
    out.push_back({"L(" + s + ")", leibniz::build_L_general({spec, alphas, betas})});
    out.push_back({"R(" + s + ")", leibniz::build_R_general(spec)});
  }
  return out;
}

inline leibniz::Cochain random_cochain(std::size_t degree, std::size_t dim, std::mt19937_64& rng) {
  leibniz::Cochain phi(degree, dim, dim);
  for (std::size_t t = 0; t < phi.tuple_count(); ++t) {
    leibniz::SparseVector v;
    for (std::size_t s = 0; s < dim; ++s) {
      if (rng() % 3 == 0) v.push_back({s, Rational(static_cast<long>(rng() % 7) - 3)});
    }
    phi.set_value(t, std::move(v));
  }
  return phi;
}

}  // namespace testing_support
