#pragma once

#include "chemolv/grid.hpp"

namespace chemolv {

// Spatial operators on cell-centered fields with no-flux (mirror ghost)
// boundaries.  All take and return fields on the same grid.

// Second-order five-point (three-point in 1D) Laplacian.  The resulting
// linear operator is self-adjoint with respect to the cell inner product and
// annihilates constants exactly.
Field laplacian_neumann(const Field& f);

// Conservative divergence of the chemotactic flux u grad(w): face fluxes use
// the arithmetic mean of u and the centered normal difference of w, with
// zero flux through boundary faces.  The sensitivity factor chi is applied
// by the caller.  Throws InvalidArgument on mismatched grids.
Field chemo_divergence(const Field& u, const Field& w);

// Midpoint quadrature: sum of cell values times cell volume, compensated
// summation.  Exact for constants.
double integrate(const Field& f);

// Quadrature of |grad f|^2 from centered face differences.  Interior faces
// carry their dual volume, faces next to a boundary absorb the boundary
// half-cell, so the face volumes tile the domain.
double grad_sq_integral(const Field& f);

// Max |f| over all cells.
double linf_norm(const Field& f);

// Smallest cell value.
double min_value(const Field& f);

}  // namespace chemolv
