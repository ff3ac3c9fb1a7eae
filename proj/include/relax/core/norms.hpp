#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "relax/core/errors.hpp"
#include "relax/core/field.hpp"

namespace relax {

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

// L1 and Linf distance between two fields, interior cells only, summed over
// components. Dirichlet ghost values never enter convergence tables.
template <typename Scalar>
ErrorNorms error_norms(const StateField1D<Scalar>& field, const StateField1D<Scalar>& reference) {
  if (field.n_components() != reference.n_components() ||
      field.grid().n_cells != reference.grid().n_cells)
    throw ConfigError("error_norms: field/reference shapes differ");
  const auto diff = (field.interior_block() - reference.interior_block()).cwiseAbs().eval();
  return {diff.sum() * field.grid().dx(), diff.maxCoeff()};
}

template <typename Scalar>
ErrorNorms error_norms(const StateField2D<Scalar>& field, const StateField2D<Scalar>& reference) {
  if (field.n_components() != reference.n_components() ||
      field.grid().nx != reference.grid().nx || field.grid().ny != reference.grid().ny)
    throw ConfigError("error_norms: field/reference shapes differ");
  ErrorNorms out;
  for (int p = 0; p < field.n_components(); ++p) {
    const auto diff = (field.interior_block(p) - reference.interior_block(p)).cwiseAbs().eval();
    out.l1 += diff.sum() * field.grid().dx() * field.grid().dy();
    out.linf = std::max(out.linf, diff.maxCoeff());
  }
  return out;
}

// Sum of |C_{j+1} - C_j| over a sequence (one component, interior cells).
template <typename Derived>
double total_variation(const Eigen::DenseBase<Derived>& c) {
  const auto& v = c.derived();
  double tv = 0.0;
  for (Eigen::Index j = 0; j + 1 < v.size(); ++j) tv += std::abs(double(v(j + 1) - v(j)));
  return tv;
}

template <typename Scalar>
double total_variation(const StateField1D<Scalar>& field, int component) {
  return total_variation(field.interior_block().row(component));
}

// order_k = log(e_{k-1}/e_k) / log(n_k/n_{k-1}); requires positive errors and
// strictly increasing n. A zero error signals an exact-solution coincidence
// or a bug and is rejected.
inline std::vector<double> observed_order(const std::vector<double>& errors,
                                          const std::vector<int>& n_values) {
  if (errors.size() != n_values.size() || errors.size() < 2)
    throw ConfigError("observed_order: need matching sequences of length >= 2");
  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (!(errors[k] > 0.0)) throw ConfigError("observed_order: errors must be positive");
    if (k > 0 && n_values[k] <= n_values[k - 1])
      throw ConfigError("observed_order: n must be strictly increasing");
  }
  std::vector<double> orders;
  for (std::size_t k = 1; k < errors.size(); ++k)
    orders.push_back(std::log(errors[k - 1] / errors[k]) /
                     std::log(double(n_values[k]) / n_values[k - 1]));
  return orders;
}

}  // namespace relax
