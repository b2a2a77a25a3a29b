#pragma once

#include <optional>
#include <vector>

#include "genus/rational.hpp"

namespace genus {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly by Gauss-Jordan elimination. Returns one solution
/// (free variables set to zero) or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b);

RationalMatrix transpose(const RationalMatrix &a);
RationalMatrix multiply(const RationalMatrix &a, const RationalMatrix &b);

}  // namespace genus
