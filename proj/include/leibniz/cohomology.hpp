#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Bimodule over a Leibniz algebra. left(x) is m -> [e_x, m] and right(x) is
/// m -> [m, e_x], both as matrices acting on coordinate columns.
class LeibnizModule {
 public:
  /// Throws InputError on shape mismatches. The axioms are not checked here;
  /// see check_module_axioms.
  LeibnizModule(LeibnizAlgebra algebra, std::size_t dim, std::vector<RatMatrix> left,
                std::vector<RatMatrix> right);

  const LeibnizAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const RatMatrix& left(std::size_t x) const { return left_.at(x); }
  const RatMatrix& right(std::size_t x) const { return right_.at(x); }

 private:
  LeibnizAlgebra algebra_;
  std::size_t dim_;
  std::vector<RatMatrix> left_;
  std::vector<RatMatrix> right_;
};

LeibnizModule adjoint_module(const LeibnizAlgebra& L);

struct ModuleAxiomReport {
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  bool ok() const { return failures == 0; }
};

/// Checks the three bimodule axioms on all pairs of basis elements (as
/// operator identities on M).
ModuleAxiomReport check_module_axioms(const LeibnizModule& M);

/// phi: L^{(x) n} -> M. Values are stored per argument tuple; the flat
/// coefficient index of (i_1..i_n; t) is row-major with i_1 slowest and the
/// module coordinate t fastest.
class Cochain {
 public:
  Cochain(std::size_t degree, std::size_t dim_L, std::size_t dim_M);
  static Cochain from_vector(std::size_t degree, std::size_t dim_L, std::size_t dim_M,
                             const Vector& coeffs);

  std::size_t degree() const { return degree_; }
  std::size_t dim_L() const { return dim_L_; }
  std::size_t dim_M() const { return dim_M_; }
  std::size_t tuple_count() const { return values_.size(); }
  std::size_t size() const { return values_.size() * dim_M_; }

  std::size_t tuple_index(std::span<const std::size_t> args) const;
  std::vector<std::size_t> tuple_args(std::size_t index) const;

  const SparseVector& value(std::size_t tuple) const { return values_.at(tuple); }
  const SparseVector& value(std::span<const std::size_t> args) const {
    return values_.at(tuple_index(args));
  }
  void add(std::span<const std::size_t> args, std::size_t target, const Rational& c);
  void set_value(std::size_t tuple, SparseVector v);

  Vector to_vector() const;
  bool is_zero() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t degree_;
  std::size_t dim_L_;
  std::size_t dim_M_;
  std::vector<SparseVector> values_;
};

inline constexpr std::size_t kDefaultMaxDegree = 3;
inline constexpr std::uint64_t kDefaultMaxCells = 2'000'000'000ULL;

struct CohomologyOptions {
  std::size_t max_degree = kDefaultMaxDegree;
  /// Guard on rows * cols of any coboundary matrix that gets assembled.
  std::uint64_t max_cells = kDefaultMaxCells;
  bool with_bases = false;
};

/// rows * cols of the matrix of d^n. Saturates instead of overflowing.
std::uint64_t coboundary_cells(std::size_t dim_L, std::size_t dim_M, std::size_t n);

/// d^n phi by direct evaluation on every basis tuple. Throws GuardError when
/// the target degree exceeds opts.max_degree + 1.
Cochain coboundary(const LeibnizModule& M, const Cochain& phi,
                   const CohomologyOptions& opts = {});

/// Matrix of d^n : CL^n -> CL^{n+1}. Throws GuardError past the degree cap or
/// the cell guard.
RatMatrix coboundary_matrix(const LeibnizModule& M, std::size_t n,
                            const CohomologyOptions& opts = {});

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dim_CL = 0;
  std::size_t dim_ZL = 0;
  std::size_t dim_BL = 0;
  std::size_t dim_HL = 0;
  std::optional<SubspaceBasis> cocycles;
  std::optional<SubspaceBasis> coboundaries;
};

CohomologyReport cohomology_report(const LeibnizModule& M, std::size_t n,
                                   const CohomologyOptions& opts = {});

/// A preimage of phi under d^{n-1}, or nullopt when phi is not a coboundary.
/// Throws InputError for degree 0.
std::optional<Cochain> coboundary_witness(const LeibnizModule& M, const Cochain& phi,
                                          const CohomologyOptions& opts = {});

struct CompletenessEvidence {
  bool complete = false;
  std::size_t center_dim = 0;
  CohomologyReport h1;
};

CompletenessEvidence is_complete(const LeibnizAlgebra& L, const CohomologyOptions& opts = {});

struct RigidityEvidence {
  bool rigid = false;
  CohomologyReport h2;
};

RigidityEvidence is_cohomologically_rigid(const LeibnizAlgebra& L,
                                          const CohomologyOptions& opts = {});

// Checks of the explicit 2-cocycle list for the solvable extension of the
// two-block family.

enum class CocycleStatus { kPass, kNotCocycle, kNotCoboundary, kAmbiguous };

struct CocycleItem {
  std::string name;
  CocycleStatus status = CocycleStatus::kPass;
  std::string note;
};

struct CocycleListReport {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<CocycleItem> items;
  /// Cocycles of the quotient Lie algebra, extended by zero, that stay cocycles.
  std::size_t lie_cocycles_total = 0;
  std::size_t lie_cocycles_passing = 0;
  std::size_t dim_ZL2 = 0;
  std::size_t dim_BL2 = 0;
  /// Rank of the span of the listed cochains together with the extended Lie cocycles.
  std::size_t listed_span_dim = 0;
  bool ok() const;
};

/// Builds every listed cochain on build_R_particular(n1, n2) and checks it.
/// Items whose printed definition is self-referential are marked kAmbiguous
/// and are not counted as failures. Basis elements past the end of a chain
/// are read as zero.
CocycleListReport verify_cocycle_list(std::size_t n1, std::size_t n2,
                                      const CohomologyOptions& opts = {});

std::string to_string(CocycleStatus s);

}  // namespace leibniz
