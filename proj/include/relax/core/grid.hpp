#pragma once

#include <string>

#include "relax/core/errors.hpp"

namespace relax {

// Uniform 1D cell-centered grid with ghost layers on both sides.
// Cell j (interior index, j in [0, n_cells)) is centered at
// x_min + (j + 1/2) dx. Storage indices run over [0, n_cells + 2*ghost_width);
// interior cell j lives at storage index ghost_width + j.
struct Grid1D {
  int n_cells = 0;
  double x_min = 0.0;
  double x_max = 1.0;
  int ghost_width = 2;

  Grid1D() = default;
  Grid1D(int n, double a, double b, int gw = 2)
      : n_cells(n), x_min(a), x_max(b), ghost_width(gw) {
    if (n_cells <= 0) throw ConfigError("Grid1D: n_cells must be positive");
    if (!(x_max > x_min)) throw ConfigError("Grid1D: x_max must exceed x_min");
    // second-order stencils reach cells j-2 and j+1
    if (ghost_width < 2) throw ConfigError("Grid1D: ghost_width must be >= 2");
  }

  double dx() const { return (x_max - x_min) / n_cells; }
  double length() const { return x_max - x_min; }
  int total_cells() const { return n_cells + 2 * ghost_width; }
  // faces between consecutive storage cells; face f sits between cells f, f+1
  int total_faces() const { return total_cells() - 1; }
  int interior_begin() const { return ghost_width; }
  int interior_end() const { return ghost_width + n_cells; }
  // face index of the left boundary interface (j = -1/2 in interior labels)
  int first_interior_face() const { return ghost_width - 1; }
  int last_interior_face() const { return ghost_width + n_cells - 1; }

  double center(int interior_j) const {
    return x_min + (interior_j + 0.5) * dx();
  }
  double center_of_storage(int s) const {
    return x_min + (s - ghost_width + 0.5) * dx();
  }
};

// Uniform 2D grid, cell (i, j) centered at (x_min + (i+1/2)dx, y_min + (j+1/2)dy).
// i runs fastest in x. Per-direction storage mirrors Grid1D.
struct Grid2D {
  int nx = 0, ny = 0;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  int ghost_width = 2;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double x0, double x1, double y0, double y1, int gw = 2)
      : nx(nx_), ny(ny_), x_min(x0), x_max(x1), y_min(y0), y_max(y1), ghost_width(gw) {
    if (nx <= 0 || ny <= 0) throw ConfigError("Grid2D: nx, ny must be positive");
    if (!(x_max > x_min) || !(y_max > y_min))
      throw ConfigError("Grid2D: degenerate domain");
    if (ghost_width < 2) throw ConfigError("Grid2D: ghost_width must be >= 2");
  }

  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  int total_x() const { return nx + 2 * ghost_width; }
  int total_y() const { return ny + 2 * ghost_width; }
  double xc(int i) const { return x_min + (i + 0.5) * dx(); }
  double yc(int j) const { return y_min + (j + 0.5) * dy(); }
  double xc_of_storage(int si) const { return x_min + (si - ghost_width + 0.5) * dx(); }
  double yc_of_storage(int sj) const { return y_min + (sj - ghost_width + 0.5) * dy(); }

  Grid1D row_grid() const { return Grid1D(nx, x_min, x_max, ghost_width); }
  Grid1D col_grid() const { return Grid1D(ny, y_min, y_max, ghost_width); }
};

}  // namespace relax
