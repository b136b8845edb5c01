#include "leibniz/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

CharSeqSpec::CharSeqSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("characteristic sequence needs at least one block");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InputError("block sizes must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("block sizes must be nonincreasing");
  }
}

std::size_t CharSeqSpec::total() const {
  std::size_t s = 0;
  for (auto p : parts_) s += p;
  return s;
}

std::string CharSeqSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

CharSeqSpec parse_char_seq(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos) {
      throw InputError("malformed sequence '" + text + "'");
    }
    parts.push_back(std::stoul(item));
  }
  return CharSeqSpec(std::move(parts));
}

namespace {

class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  // [e_i, e_j] += c e_k
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (is_zero(c)) return;
    table_[{i, j}].push_back({k, c});
  }

  // [e_i, e_j] = -[e_j, e_i] = c e_k
  void anti(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    add(i, j, k, c);
    add(j, i, k, -c);
  }

  LeibnizAlgebra build() && {
    std::vector<BasisProduct> products;
    for (auto& [key, v] : table_) {
      canonicalize(v);
      if (!v.empty()) products.push_back({key.first, key.second, std::move(v)});
    }
    return LeibnizAlgebra(std::move(labels_), std::move(products));
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> table_;
};

// 0-based positions of the chain elements in the canonical basis: e1 is 0,
// block b occupies heads[b] .. heads[b] + n_b - 1.
std::vector<std::size_t> block_heads(const CharSeqSpec& spec) {
  std::vector<std::size_t> heads;
  std::size_t next = 1;
  for (auto n : spec.parts()) {
    heads.push_back(next);
    next += n;
  }
  return heads;
}

std::vector<std::string> e_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= count; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

void require_long_first_block(const CharSeqSpec& spec) {
  if (spec.parts().front() < 2) throw InputError("this family needs n1 >= 2");
}

// [y, e1] = -[e1, y] = next(y) along every chain.
void add_chains(TableBuilder& t, const CharSeqSpec& spec) {
  const auto heads = block_heads(spec);
  for (std::size_t b = 0; b < heads.size(); ++b) {
    for (std::size_t p = 0; p + 1 < spec.parts()[b]; ++p) t.anti(heads[b] + p, 0, heads[b] + p + 1, 1);
  }
}

// Toral part: x1 has weight 1 on e1 and weight p on the p-th element of each
// chain; x_{b+2} acts as the identity on block b.
void add_torus(TableBuilder& t, const CharSeqSpec& spec, std::size_t x_first) {
  const auto heads = block_heads(spec);
  t.anti(0, x_first, 0, 1);
  for (std::size_t b = 0; b < heads.size(); ++b) {
    for (std::size_t p = 0; p < spec.parts()[b]; ++p) {
      const std::size_t y = heads[b] + p;
      t.anti(y, x_first, y, static_cast<long>(p));
      t.anti(y, x_first + 1 + b, y, 1);
    }
  }
}

}  // namespace

LeibnizAlgebra build_n_c(const CharSeqSpec& spec) {
  TableBuilder t(e_labels(1 + spec.total()));
  add_chains(t, spec);
  return std::move(t).build();
}

LeibnizAlgebra build_r_c(const CharSeqSpec& spec) {
  const std::size_t n = 1 + spec.total();
  auto labels = e_labels(n);
  for (std::size_t s = 1; s <= spec.blocks() + 1; ++s) labels.push_back("x" + std::to_string(s));
  TableBuilder t(std::move(labels));
  add_chains(t, spec);
  add_torus(t, spec, n);
  return std::move(t).build();
}

namespace {

// Shared by the normalized and raw families: everything except [e1,e1].
void add_L_body(TableBuilder& t, const CharSeqSpec& spec, std::size_t h,
                const std::vector<Rational>& head_squares, const std::vector<Rational>& betas) {
  const auto heads = block_heads(spec);
  for (std::size_t b = 0; b < heads.size(); ++b) {
    const std::size_t n = spec.parts()[b];
    for (std::size_t p = 0; p + 1 < n; ++p) {
      t.add(heads[b] + p, 0, heads[b] + p + 1, 1);
      if (p >= 1) t.add(0, heads[b] + p, heads[b] + p + 1, -1);
    }
    t.add(heads[b], heads[b], h, head_squares[b]);
    // A single-element block has no successor, so only the h term survives.
    if (n >= 2) t.add(0, heads[b], heads[b] + 1, -1);
    t.add(0, heads[b], h, betas[b]);
  }
}

}  // namespace

LeibnizAlgebra build_L_general(const LFamilyParams& params) {
  const auto& spec = params.spec;
  require_long_first_block(spec);
  if (params.alphas.size() != spec.blocks() || params.betas.size() != spec.blocks()) {
    throw InputError("expected " + std::to_string(spec.blocks()) + " alphas and betas");
  }
  const std::size_t h = 1 + spec.total();
  auto labels = e_labels(h);
  labels.push_back("h");
  TableBuilder t(std::move(labels));
  t.add(0, 0, h, 1);
  add_L_body(t, spec, h, params.alphas, params.betas);
  return std::move(t).build();
}

LeibnizAlgebra build_L_prenormalized(const RawLFamilyParams& params) {
  const auto& spec = params.spec;
  require_long_first_block(spec);
  if (params.alphas.size() != spec.blocks() + 1 || params.betas.size() != spec.blocks()) {
    throw InputError("expected " + std::to_string(spec.blocks() + 1) + " alphas and " +
                     std::to_string(spec.blocks()) + " betas");
  }
  const std::size_t h = 1 + spec.total();
  auto labels = e_labels(h);
  labels.push_back("h");
  TableBuilder t(std::move(labels));
  t.add(0, 0, h, params.alphas[0]);
  add_L_body(t, spec, h, std::vector<Rational>(params.alphas.begin() + 1, params.alphas.end()),
             params.betas);
  return std::move(t).build();
}

namespace {

void require_two_blocks(std::size_t n1, std::size_t n2) {
  if (n2 < 1 || n1 < n2 || n1 < 2) throw InputError("need n1 >= n2 >= 1 and n1 >= 2");
}

std::vector<std::string> ef_labels(std::size_t n1, std::size_t n2) {
  auto labels = e_labels(n1 + 1);
  for (std::size_t i = 1; i <= n2; ++i) labels.push_back("f" + std::to_string(i));
  return labels;
}

}  // namespace

LeibnizAlgebra build_L_particular(std::size_t n1, std::size_t n2, const Rational& a2,
                                  const Rational& a3, const Rational& b1, const Rational& b2) {
  require_two_blocks(n1, n2);
  auto e = [](std::size_t i) { return i - 1; };
  auto f = [n1](std::size_t i) { return n1 + i; };
  const std::size_t h = n1 + n2 + 1;
  auto labels = ef_labels(n1, n2);
  labels.push_back("h");
  TableBuilder t(std::move(labels));
  for (std::size_t i = 2; i <= n1; ++i) t.add(e(i), e(1), e(i + 1), 1);
  for (std::size_t i = 3; i <= n1; ++i) t.add(e(1), e(i), e(i + 1), -1);
  for (std::size_t i = 1; i + 1 <= n2; ++i) t.add(f(i), e(1), f(i + 1), 1);
  for (std::size_t i = 2; i + 1 <= n2; ++i) t.add(e(1), f(i), f(i + 1), -1);
  t.add(e(1), e(1), h, 1);
  t.add(e(2), e(2), h, a2);
  t.add(f(1), f(1), h, a3);
  t.add(e(1), e(2), e(3), -1);
  t.add(e(1), e(2), h, b1);
  if (n2 >= 2) t.add(e(1), f(1), f(2), -1);
  t.add(e(1), f(1), h, b2);
  return std::move(t).build();
}

LeibnizAlgebra build_R_particular(std::size_t n1, std::size_t n2) {
  require_two_blocks(n1, n2);
  auto e = [](std::size_t i) { return i - 1; };
  auto f = [n1](std::size_t i) { return n1 + i; };
  const std::size_t h = n1 + n2 + 1;
  auto x = [h](std::size_t i) { return h + i; };
  auto labels = ef_labels(n1, n2);
  for (const char* s : {"h", "x1", "x2", "x3"}) labels.emplace_back(s);
  TableBuilder t(std::move(labels));
  t.add(e(1), e(1), h, 1);
  t.add(h, x(1), h, 2);
  for (std::size_t i = 2; i <= n1; ++i) t.anti(e(i), e(1), e(i + 1), 1);
  for (std::size_t i = 1; i + 1 <= n2; ++i) t.anti(f(i), e(1), f(i + 1), 1);
  t.anti(e(1), x(1), e(1), 1);
  for (std::size_t i = 3; i <= n1 + 1; ++i) t.anti(e(i), x(1), e(i), static_cast<long>(i) - 2);
  for (std::size_t i = 2; i <= n2; ++i) t.anti(f(i), x(1), f(i), static_cast<long>(i) - 1);
  for (std::size_t i = 2; i <= n1 + 1; ++i) t.anti(e(i), x(2), e(i), 1);
  for (std::size_t i = 1; i <= n2; ++i) t.anti(f(i), x(3), f(i), 1);
  return std::move(t).build();
}

LeibnizAlgebra build_R_general(const CharSeqSpec& spec) {
  require_long_first_block(spec);
  const std::size_t h = 1 + spec.total();
  auto labels = e_labels(h);
  labels.push_back("h");
  for (std::size_t s = 1; s <= spec.blocks() + 1; ++s) labels.push_back("x" + std::to_string(s));
  TableBuilder t(std::move(labels));
  t.add(0, 0, h, 1);
  t.add(h, h + 1, h, 2);
  add_chains(t, spec);
  add_torus(t, spec, h + 1);
  return std::move(t).build();
}

// ---------------------------------------------------------------------------
// Normalization of [e1, e1]
// ---------------------------------------------------------------------------

namespace {

// Coefficient vectors over {0, 1, -1, 2}, fewest nonzero entries first.
std::vector<std::vector<int>> normalization_candidates(std::size_t len) {
  static constexpr int kValues[] = {0, 1, -1, 2};
  std::vector<std::vector<int>> all;
  std::vector<int> cur(len, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      all.push_back(cur);
      return;
    }
    for (int v : kValues) {
      cur[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    auto nz = [](const std::vector<int>& v) {
      return std::count_if(v.begin(), v.end(), [](int c) { return c != 0; });
    };
    return nz(a) < nz(b);
  });
  return all;
}

}  // namespace

Normalization normalize_alpha1(const RawLFamilyParams& params) {
  const LeibnizAlgebra raw = build_L_prenormalized(params);
  const auto& spec = params.spec;
  const std::size_t n = raw.dim();
  const std::size_t h = n - 1;
  const auto heads = block_heads(spec);

  const bool all_zero =
      std::all_of(params.alphas.begin(), params.alphas.end(), [](const Rational& r) { return is_zero(r); }) &&
      std::all_of(params.betas.begin(), params.betas.end(), [](const Rational& r) { return is_zero(r); });
  if (all_zero) throw MathError("family degenerates; no normalization exists");

  Normalization out;
  out.a1 = 1;
  out.b.assign(heads.size() - 1, Rational(0));

  if (!is_zero(params.alphas[0])) {
    out.coefficient = params.alphas[0];
  } else {
    // e1' = e1 + a2 e2 + sum b_i head_i; search small integer coefficients
    // until [e1', e1'] has a nonzero h-component.
    bool found = false;
    for (const auto& cand : normalization_candidates(heads.size())) {
      Vector e1p = unit_vector(n, 0);
      for (std::size_t b = 0; b < heads.size(); ++b) e1p[heads[b]] += cand[b];
      const Vector sq = raw.bracket(e1p, e1p);
      if (is_zero(sq[h])) continue;
      out.a2 = cand[0];
      for (std::size_t b = 1; b < heads.size(); ++b) out.b[b - 1] = cand[b];
      out.coefficient = sq[h];
      found = true;
      break;
    }
    if (!found) throw MathError("no normalizing change of basis among the searched coefficients");
  }

  std::vector<Vector> cols(n, Vector(n));
  Vector e1p = unit_vector(n, 0);
  e1p[heads[0]] += out.a2;
  for (std::size_t b = 1; b < heads.size(); ++b) e1p[heads[b]] += out.b[b - 1];
  cols[0] = e1p;
  for (std::size_t b = 0; b < heads.size(); ++b) {
    cols[heads[b]] = unit_vector(n, heads[b]);
    for (std::size_t p = 0; p + 1 < spec.parts()[b]; ++p) {
      cols[heads[b] + p + 1] = raw.bracket(cols[heads[b] + p], e1p);
    }
  }
  cols[h] = Vector(n);
  cols[h][h] = out.coefficient;
  out.basis_change = RatMatrix::from_columns(n, cols);
  out.algebra = change_basis(raw, out.basis_change, raw.labels());
  return out;
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

std::vector<CharSeqSpec> enumerate_partitions(std::size_t n) {
  if (n < 1) throw InputError("partitions need n >= 1");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  // Parts chosen in nonincreasing order; visiting the smallest first part
  // first yields lexicographic order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = 1; p <= std::min(left, max_part); ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  std::vector<CharSeqSpec> specs;
  specs.reserve(out.size());
  for (auto& parts : out) specs.emplace_back(std::move(parts));
  return specs;
}

std::uint64_t partition_count(std::size_t n) {
  if (n < 1) throw InputError("partitions need n >= 1");
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

double partition_asymptotic(std::size_t n) {
  if (n < 1) throw InputError("partitions need n >= 1");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace leibniz
