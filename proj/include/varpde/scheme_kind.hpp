#pragma once

#include <optional>
#include <string_view>

namespace varpde {

/// The three discrete Lagrangians for linear advection: midpoint quadrature
/// (Veselov), trapezoidal quadrature (leapfrog) and the mixed rule
/// (trapezoidal in time, midpoint in space).
enum class AdvectionKind { Veselov, Leapfrog, SimplifiedImplicit };

std::string_view to_string(AdvectionKind kind) noexcept;
std::optional<AdvectionKind> parse_advection_kind(std::string_view name) noexcept;

}  // namespace varpde
