#pragma once

#include <string>
#include <string_view>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Reads the algebra format
///   {"dim": N, "basis": [...], "table": [{"i", "j", "products": [{"k", "num", "den"}]}]}
/// with 0-based indices and decimal-string coefficients. Throws InputError
/// with a location on malformed input; with Verify::kIdentity a table that is
/// not Leibniz raises MathError.
LeibnizAlgebra parse_algebra_json(std::string_view text,
                                  LeibnizAlgebra::Verify verify = LeibnizAlgebra::Verify::kIdentity);

LeibnizAlgebra load_algebra(const std::string& path,
                            LeibnizAlgebra::Verify verify = LeibnizAlgebra::Verify::kIdentity);

/// Pairs in (i, j) order, products in k order, two-space indentation.
std::string algebra_to_json(const LeibnizAlgebra& L);

}  // namespace leibniz
