#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Nonincreasing positive block sizes (n_1 >= ... >= n_k >= 1), k >= 1.
class CharSeqSpec {
 public:
  /// Throws InputError when the sequence is empty, increasing somewhere or has a zero part.
  explicit CharSeqSpec(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t blocks() const { return parts_.size(); }
  std::size_t total() const;
  std::string to_string() const;

  friend bool operator==(const CharSeqSpec&, const CharSeqSpec&) = default;
  friend auto operator<=>(const CharSeqSpec&, const CharSeqSpec&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// Parses "3,2,1".
CharSeqSpec parse_char_seq(const std::string& text);

/// Parameters of the nilpotent family with [e1,e1] = h.
/// alphas[b] is the coefficient of h in the square of the first element of
/// block b; betas[b] is the h-coefficient of [e1, first element of block b].
struct LFamilyParams {
  CharSeqSpec spec;
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
};

/// Parameters before [e1,e1] is normalized: alphas has k+1 entries with
/// alphas[0] the coefficient of [e1,e1]; betas has k entries.
struct RawLFamilyParams {
  CharSeqSpec spec;
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
};

/// Model filiform-type nilpotent Lie algebra: e1, then the chains of each block.
LeibnizAlgebra build_n_c(const CharSeqSpec& spec);

/// Solvable Lie algebra extending build_n_c(spec) by k+1 toral elements x1..x_{k+1}.
LeibnizAlgebra build_r_c(const CharSeqSpec& spec);

/// Nilpotent Leibniz family with [e1,e1] = h. Requires n_1 >= 2.
LeibnizAlgebra build_L_general(const LFamilyParams& params);

/// Two-block member with basis e1..e_{n1+1}, f1..f_{n2}, h.
LeibnizAlgebra build_L_particular(std::size_t n1, std::size_t n2, const Rational& a2,
                                  const Rational& a3, const Rational& b1, const Rational& b2);

/// The family before normalization, where [e1,e1] may vanish. Only meant as
/// input to normalize_alpha1; the CLI exposes it behind --prenormalized.
LeibnizAlgebra build_L_prenormalized(const RawLFamilyParams& params);

/// Solvable extension with basis e.., f.., h, x1, x2, x3. Requires n1 >= n2 >= 1, n1 >= 2.
LeibnizAlgebra build_R_particular(std::size_t n1, std::size_t n2);

/// Solvable extension with basis e1..e_N, h, x1..x_{k+1}. Requires n_1 >= 2.
LeibnizAlgebra build_R_general(const CharSeqSpec& spec);

struct Normalization {
  Rational a1;              // coefficient of e1 in e1'
  Rational a2;              // coefficient of e2 in e1'
  std::vector<Rational> b;  // coefficients of the later block heads in e1'
  /// h-coefficient of [e1', e1'] before h is rescaled.
  Rational coefficient;
  /// Columns are the new basis vectors in old coordinates.
  RatMatrix basis_change;
  /// The family in the new basis, where [e1', e1'] = h'.
  LeibnizAlgebra algebra;
};

/// Moves a pre-normalized family member to a basis with [e1', e1'] = h'.
/// Throws MathError when every parameter is zero.
Normalization normalize_alpha1(const RawLFamilyParams& params);

/// Partitions of n in lexicographic order, parts nonincreasing.
std::vector<CharSeqSpec> enumerate_partitions(std::size_t n);
std::uint64_t partition_count(std::size_t n);
/// exp(pi sqrt(2n/3)) / (4 n sqrt 3)
double partition_asymptotic(std::size_t n);

}  // namespace leibniz
