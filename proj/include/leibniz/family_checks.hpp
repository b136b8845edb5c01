#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "leibniz/constructions.hpp"
#include "leibniz/derivations.hpp"

namespace leibniz {

/// Parameters of build_L_particular: h-coefficients of [e2,e2], [f1,f1],
/// [e1,e2] and [e1,f1].
struct TwoBlockParams {
  std::size_t n1 = 2;
  std::size_t n2 = 1;
  Rational e2_square;
  Rational f1_square;
  Rational e1_e2;
  Rational e1_f1;
};

/// Entries of a derivation d of the two-block family that govern its shape.
/// "x_in_y" is the coefficient of x in d(y).
struct DerivationEntries {
  Rational e1_in_e1;
  Rational e2_in_e1;
  Rational e2_in_e2;
  Rational f1_in_e1;
  Rational f1_in_f1;
  Rational f1_in_e2;
  Rational e2_in_f1;
  Rational h_in_h;
};

DerivationEntries derivation_entries(const TwoBlockParams& p, const RatMatrix& d);

/// Residuals of the five linear restrictions every derivation satisfies.
std::array<Rational, 5> shape_residuals(const TwoBlockParams& p, const DerivationEntries& x);

struct ShapeReport {
  std::size_t derivations = 0;
  std::size_t restriction_failures = 0;
  /// Coefficients of e_j in d(f_i) that must vanish when n1 > n2.
  std::size_t chain_offset_failures = 0;
  /// d(h) must be (2 e1_in_e1 + e2_in_e1 * e1_e2 + f1_in_e1 * e1_f1) h.
  std::size_t h_weight_failures = 0;
  std::string first_failure;
  bool ok() const { return restriction_failures == 0 && chain_offset_failures == 0; }
};

/// Checks every basis derivation of build_L_particular(p).
ShapeReport check_derivation_shape(const TwoBlockParams& p);

struct NilDirectionsReport {
  /// Whether a derivation with the prescribed diagonal exists: weight 1 on
  /// e1 only, on e2 only, on f1 only, and zero diagonal with
  /// f1_in_e2 * e2_in_f1 != 0.
  std::array<bool, 4> exists{};
  bool independent = false;
  std::size_t zero_diagonal_samples = 0;
  std::size_t zero_diagonal_non_nilpotent = 0;
  std::size_t der_dim = 0;
  bool ok() const;
};

/// Looks for the four diagonal directions in Der(build_L_particular(p)),
/// tests them for nil-independence and samples derivations with zero
/// diagonal weights for nilpotency.
NilDirectionsReport check_nil_directions(const TwoBlockParams& p,
                                         const NilIndependenceOptions& opts = {},
                                         std::size_t samples = 100);

}  // namespace leibniz
