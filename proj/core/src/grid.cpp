#include "chemolv/grid.hpp"

#include <cmath>
#include <string>

#include "chemolv/errors.hpp"

namespace chemolv {

namespace {

void check_axis(const char* name, int n, double length) {
  if (n < 4) {
    throw ValidationError(std::string("grid: ") + name + " needs at least 4 cells");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw ValidationError(std::string("grid: ") + name + " extent must be positive");
  }
}

}  // namespace

Grid make_grid_1d(int n, double length) {
  check_axis("x", n, length);
  Grid g;
  g.dim = 1;
  g.nx = n;
  g.ny = 1;
  g.Lx = length;
  g.Ly = 0.0;
  g.hx = length / n;
  g.hy = 0.0;
  return g;
}

Grid make_grid_2d(int nx, int ny, double lx, double ly) {
  check_axis("x", nx, lx);
  check_axis("y", ny, ly);
  Grid g;
  g.dim = 2;
  g.nx = nx;
  g.ny = ny;
  g.Lx = lx;
  g.Ly = ly;
  g.hx = lx / nx;
  g.hy = ly / ny;
  return g;
}

Field make_field(const Grid& g, double fill) {
  Field f;
  f.grid = g;
  f.values.assign(static_cast<std::size_t>(g.cell_count()), fill);
  return f;
}

bool same_grid(const Field& a, const Field& b) { return a.grid == b.grid; }

}  // namespace chemolv
