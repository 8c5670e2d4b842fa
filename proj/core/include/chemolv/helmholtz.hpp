#pragma once

#include "chemolv/grid.hpp"

namespace chemolv {

// Backward-Euler diffusion-decay solve: returns x with
//
//   (1 + dt*decay) x - dt*diffusion*Lap_N x = rhs
//
// on the grid of rhs, Lap_N the no-flux Laplacian of laplacian_neumann.
// One-dimensional grids use a direct tridiagonal factorization; two
// dimensional grids use conjugate gradients to a relative residual of 1e-10
// (the operator is symmetric positive definite).  Requires diffusion > 0,
// decay >= 0, dt > 0.  Throws SolverDiverged when the iteration stalls.
Field implicit_helmholtz_solve(const Field& rhs, double diffusion, double decay, double dt);

}  // namespace chemolv
