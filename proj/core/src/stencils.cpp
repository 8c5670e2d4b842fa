#include "chemolv/stencils.hpp"

#include <algorithm>
#include <cmath>

#include "chemolv/errors.hpp"

namespace chemolv {

namespace {

// Mirror ghosts make the missing neighbor equal to the boundary cell itself,
// which is just an index clamp on a uniform grid.
inline int clamp_idx(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Field laplacian_neumann(const Field& f) {
  const Grid& g = f.grid;
  Field out = make_field(g);

  const double ix2 = 1.0 / (g.hx * g.hx);
  if (g.dim == 1) {
    for (int i = 0; i < g.nx; ++i) {
      const double left = f[static_cast<std::size_t>(clamp_idx(i - 1, g.nx))];
      const double right = f[static_cast<std::size_t>(clamp_idx(i + 1, g.nx))];
      out[static_cast<std::size_t>(i)] =
          (left - 2.0 * f[static_cast<std::size_t>(i)] + right) * ix2;
    }
    return out;
  }

  const double iy2 = 1.0 / (g.hy * g.hy);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double c = f.at(i, j);
      const double lx = f.at(clamp_idx(i - 1, g.nx), j);
      const double rx = f.at(clamp_idx(i + 1, g.nx), j);
      const double ly = f.at(i, clamp_idx(j - 1, g.ny));
      const double ry = f.at(i, clamp_idx(j + 1, g.ny));
      out.at(i, j) = (lx - 2.0 * c + rx) * ix2 + (ly - 2.0 * c + ry) * iy2;
    }
  }
  return out;
}

Field chemo_divergence(const Field& u, const Field& w) {
  if (!same_grid(u, w)) {
    throw InvalidArgument("chemo_divergence: fields live on different grids");
  }
  const Grid& g = u.grid;
  Field out = make_field(g);

  // Flux through the face between cells L and R is
  //   (u_L + u_R)/2 * (w_R - w_L)/h;
  // each face deposits +flux/h into L and -flux/h into R, so the discrete
  // integral of the divergence telescopes to zero.
  const double ix = 1.0 / g.hx;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double flux =
          0.5 * (u.at(i, j) + u.at(i + 1, j)) * (w.at(i + 1, j) - w.at(i, j)) * ix;
      out.at(i, j) += flux * ix;
      out.at(i + 1, j) -= flux * ix;
    }
  }
  if (g.dim == 2) {
    const double iy = 1.0 / g.hy;
    for (int j = 0; j + 1 < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double flux =
            0.5 * (u.at(i, j) + u.at(i, j + 1)) * (w.at(i, j + 1) - w.at(i, j)) * iy;
        out.at(i, j) += flux * iy;
        out.at(i, j + 1) -= flux * iy;
      }
    }
  }
  return out;
}

double integrate(const Field& f) {
  KahanSum s;
  for (double v : f.values) s.add(v);
  return s.sum * f.grid.cell_volume();
}

double grad_sq_integral(const Field& f) {
  const Grid& g = f.grid;

  // Face j between cells j and j+1 covers the slab of width h centered on
  // it; the first and last interior faces are widened by h/2 to absorb the
  // boundary half-cells, where the no-flux gradient vanishes to first order.
  const auto face_width = [](int face, int n, double h) {
    double wdt = h;
    if (face == 0) wdt += 0.5 * h;
    if (face == n - 2) wdt += 0.5 * h;
    return wdt;
  };

  KahanSum s;
  if (g.dim == 1) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double d = (f[static_cast<std::size_t>(i + 1)] - f[static_cast<std::size_t>(i)]) / g.hx;
      s.add(d * d * face_width(i, g.nx, g.hx));
    }
    return s.sum;
  }

  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double d = (f.at(i + 1, j) - f.at(i, j)) / g.hx;
      s.add(d * d * face_width(i, g.nx, g.hx) * g.hy);
    }
  }
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double d = (f.at(i, j + 1) - f.at(i, j)) / g.hy;
      s.add(d * d * face_width(j, g.ny, g.hy) * g.hx);
    }
  }
  return s.sum;
}

double linf_norm(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double min_value(const Field& f) {
  double m = f.values.empty() ? 0.0 : f.values.front();
  for (double v : f.values) m = std::min(m, v);
  return m;
}

}  // namespace chemolv
