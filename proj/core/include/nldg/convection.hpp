#pragma once

#include <string>

#include "nldg/dg_space.hpp"
#include "nldg/problems.hpp"

namespace nldg {

enum class FluxKind { upwind, lax_friedrichs, godunov };

FluxKind parse_flux_kind(const std::string& s);
std::string to_string(FluxKind k);

double numerical_flux(FluxKind kind, const FluxFunction& F, double uL, double uR);

// A_j(u_h, phi) for every basis function phi, stacked like the dofs. Exterior
// traces are zero in volume-constraint mode.
Vec convection_residual(const DGField& u, FluxKind kind, const FluxFunction& F);

// Theta = int_{uL}^{uR} (f(u) - fhat(uL, uR)) du, 10-point Gauss.
double cell_entropy_production(FluxKind kind, const FluxFunction& F, double uL, double uR);

}  // namespace nldg
