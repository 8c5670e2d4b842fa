#pragma once

#include <cstddef>
#include <vector>

namespace chemolv {

// Uniform cell-centered grid on (0,Lx) or (0,Lx)x(0,Ly).  Cell (i,j) has its
// center at ((i+1/2)hx, (j+1/2)hy); in one dimension ny = 1 and the y extent
// is unused.  At least 4 cells per active axis.
struct Grid {
  int dim = 1;
  int nx = 0;
  int ny = 1;
  double Lx = 0.0;
  double Ly = 0.0;
  double hx = 0.0;
  double hy = 0.0;

  int cell_count() const { return nx * ny; }
  double cell_volume() const { return dim == 1 ? hx : hx * hy; }
  double measure() const { return dim == 1 ? Lx : Lx * Ly; }
  double center_x(int i) const { return (i + 0.5) * hx; }
  double center_y(int j) const { return (j + 0.5) * hy; }

  bool operator==(const Grid&) const = default;
};

// Throw ValidationError on fewer than 4 cells per axis or nonpositive extent.
Grid make_grid_1d(int n, double length);
Grid make_grid_2d(int nx, int ny, double lx, double ly);

// Scalar field of cell averages, row-major: index = j*nx + i.
struct Field {
  Grid grid;
  std::vector<double> values;

  double& operator[](std::size_t idx) { return values[idx]; }
  double operator[](std::size_t idx) const { return values[idx]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(j) * grid.nx + i]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.nx + i]; }

  bool operator==(const Field&) const = default;
};

Field make_field(const Grid& g, double fill = 0.0);

bool same_grid(const Field& a, const Field& b);

}  // namespace chemolv
