#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Der(L). Basis matrices act on columns (column j is d(e_j)) and are the
/// unflattened rows of `flat`, which holds the row-major flattenings in
/// reduced echelon form.
struct DerivationSpace {
  std::vector<RatMatrix> basis;
  SubspaceBasis flat;
  std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivation_space(const LeibnizAlgebra& L);

/// span{R_{e_i}} as row-major flattened matrices.
SubspaceBasis inner_derivations(const LeibnizAlgebra& L);

/// Throws InputError when m is not dim x dim.
bool is_derivation(const LeibnizAlgebra& L, const RatMatrix& m);

struct NilIndependenceOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  /// Exhaustive {-1,0,1} coefficient patterns are tried when there are at most
  /// this many of them.
  std::size_t pattern_limit = 729;
};

struct NilIndependenceVerdict {
  /// False means `witness` is a nonzero combination with a nilpotent sum,
  /// which is exact. True only means no such combination was found.
  bool independent_probable = true;
  std::vector<Rational> witness;
  std::string stage;  // "single", "pattern" or "random" for a witness
  std::size_t combinations_tested = 0;
};

/// Searches for a nilpotent nonzero linear combination. Throws InputError on
/// an empty set or mismatched shapes.
NilIndependenceVerdict check_nil_independent(std::span<const RatMatrix> set,
                                             const NilIndependenceOptions& opts = {});

struct CharSequence {
  std::vector<std::size_t> parts;
  Vector witness;
};

inline constexpr std::size_t kDefaultCharSeqSamples = 100;

/// Lexicographic maximum of the Jordan type of R_x over the complement basis
/// of L^2 and `samples` seeded combinations with entries in {-2..2}. The true
/// maximum is attained on a dense open set, so sampling can in principle miss
/// it. Throws MathError if some R_x is not nilpotent or L^2 = L.
CharSequence characteristic_sequence(const LeibnizAlgebra& L,
                                     std::size_t samples = kDefaultCharSeqSamples,
                                     std::uint64_t seed = 42);

}  // namespace leibniz
