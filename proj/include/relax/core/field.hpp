#pragma once

#include <Eigen/Dense>
#include <vector>

#include "relax/core/errors.hpp"
#include "relax/core/grid.hpp"

namespace relax {

// Cell-averaged component values on a Grid1D, ghost cells included.
// Row p holds component p over storage cells.
template <typename Scalar>
class StateField1D {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  StateField1D() = default;
  StateField1D(int n_components, const Grid1D& grid)
      : n_components_(n_components), grid_(grid),
        values_(Matrix::Zero(n_components, grid.total_cells())) {
    if (n_components <= 0) throw ConfigError("StateField1D: n_components must be positive");
  }

  int n_components() const { return n_components_; }
  const Grid1D& grid() const { return grid_; }

  Matrix& values() { return values_; }
  const Matrix& values() const { return values_; }

  Scalar& at(int p, int storage_cell) { return values_(p, storage_cell); }
  Scalar at(int p, int storage_cell) const { return values_(p, storage_cell); }

  // interior cell j of component p
  Scalar& interior(int p, int j) { return values_(p, grid_.interior_begin() + j); }
  Scalar interior(int p, int j) const { return values_(p, grid_.interior_begin() + j); }

  auto interior_block() { return values_.middleCols(grid_.interior_begin(), grid_.n_cells); }
  auto interior_block() const { return values_.middleCols(grid_.interior_begin(), grid_.n_cells); }

  bool all_finite() const { return values_.allFinite(); }

  // Smallest/largest interior value across all components.
  Scalar interior_min() const { return interior_block().minCoeff(); }
  Scalar interior_max() const { return interior_block().maxCoeff(); }

 private:
  int n_components_ = 0;
  Grid1D grid_;
  Matrix values_;
};

// Cell-averaged component values on a Grid2D, one dense matrix per component,
// indexed (i, j) with i the x index (fastest in memory, column-major storage).
template <typename Scalar>
class StateField2D {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  StateField2D() = default;
  StateField2D(int n_components, const Grid2D& grid) : grid_(grid) {
    if (n_components <= 0) throw ConfigError("StateField2D: n_components must be positive");
    comps_.assign(n_components, Matrix::Zero(grid.total_x(), grid.total_y()));
  }

  int n_components() const { return static_cast<int>(comps_.size()); }
  const Grid2D& grid() const { return grid_; }

  Matrix& comp(int p) { return comps_[p]; }
  const Matrix& comp(int p) const { return comps_[p]; }

  Scalar& at(int p, int si, int sj) { return comps_[p](si, sj); }
  Scalar at(int p, int si, int sj) const { return comps_[p](si, sj); }

  // interior cell (i, j) of component p
  Scalar& interior(int p, int i, int j) {
    return comps_[p](grid_.ghost_width + i, grid_.ghost_width + j);
  }
  Scalar interior(int p, int i, int j) const {
    return comps_[p](grid_.ghost_width + i, grid_.ghost_width + j);
  }

  auto interior_block(int p) {
    return comps_[p].block(grid_.ghost_width, grid_.ghost_width, grid_.nx, grid_.ny);
  }
  auto interior_block(int p) const {
    return comps_[p].block(grid_.ghost_width, grid_.ghost_width, grid_.nx, grid_.ny);
  }

  bool all_finite() const {
    for (const auto& m : comps_)
      if (!m.allFinite()) return false;
    return true;
  }

 private:
  Grid2D grid_;
  std::vector<Matrix> comps_;
};

using StateField1Dd = StateField1D<double>;
using StateField2Dd = StateField2D<double>;

}  // namespace relax
