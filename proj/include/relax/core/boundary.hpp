#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <variant>

#include "relax/core/errors.hpp"
#include "relax/core/field.hpp"

namespace relax {

// One side of a boundary. Ghost fills happen before each stage of a time step.
namespace bc {

struct Periodic {};
struct Extrapolate {};  // zero-order outflow
struct Dirichlet {
  Eigen::VectorXd values;  // one per component
};
// values as a function of ghost-cell position and time
struct TimeDirichlet1D {
  std::function<Eigen::VectorXd(double x, double t)> fn;
};
struct TimeDirichlet2D {
  std::function<Eigen::VectorXd(double x, double y, double t)> fn;
};

}  // namespace bc

using BoundaryKind1D =
    std::variant<bc::Periodic, bc::Extrapolate, bc::Dirichlet, bc::TimeDirichlet1D>;
using BoundaryKind2D =
    std::variant<bc::Periodic, bc::Extrapolate, bc::Dirichlet, bc::TimeDirichlet2D>;

struct BoundarySpec1D {
  BoundaryKind1D left = bc::Extrapolate{};
  BoundaryKind1D right = bc::Extrapolate{};

  static BoundarySpec1D periodic() { return {bc::Periodic{}, bc::Periodic{}}; }
  static BoundarySpec1D extrapolate() { return {bc::Extrapolate{}, bc::Extrapolate{}}; }

  void validate() const {
    const bool lp = std::holds_alternative<bc::Periodic>(left);
    const bool rp = std::holds_alternative<bc::Periodic>(right);
    if (lp != rp) throw ConfigError("periodic boundaries must be paired on opposite sides");
  }
};

struct BoundarySpec2D {
  BoundaryKind2D left = bc::Extrapolate{};
  BoundaryKind2D right = bc::Extrapolate{};
  BoundaryKind2D bottom = bc::Extrapolate{};
  BoundaryKind2D top = bc::Extrapolate{};

  static BoundarySpec2D periodic() {
    return {bc::Periodic{}, bc::Periodic{}, bc::Periodic{}, bc::Periodic{}};
  }

  void validate() const {
    if (std::holds_alternative<bc::Periodic>(left) !=
        std::holds_alternative<bc::Periodic>(right))
      throw ConfigError("periodic boundaries must be paired in x");
    if (std::holds_alternative<bc::Periodic>(bottom) !=
        std::holds_alternative<bc::Periodic>(top))
      throw ConfigError("periodic boundaries must be paired in y");
  }
};

template <typename Scalar>
void fill_ghosts(StateField1D<Scalar>& field, const BoundarySpec1D& bc, double t) {
  const Grid1D& g = field.grid();
  const int gw = g.ghost_width;
  const int n = g.n_cells;
  auto& v = field.values();

  auto fill_side = [&](const BoundaryKind1D& kind, bool is_left) {
    for (int k = 0; k < gw; ++k) {
      const int ghost = is_left ? gw - 1 - k : gw + n + k;
      std::visit(
          [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, bc::Periodic>) {
              const int src = is_left ? gw + n - 1 - k : gw + k;
              v.col(ghost) = v.col(src);
            } else if constexpr (std::is_same_v<T, bc::Extrapolate>) {
              const int edge = is_left ? gw : gw + n - 1;
              v.col(ghost) = v.col(edge);
            } else if constexpr (std::is_same_v<T, bc::Dirichlet>) {
              v.col(ghost) = b.values.template cast<Scalar>();
            } else {  // TimeDirichlet1D
              v.col(ghost) = b.fn(g.center_of_storage(ghost), t).template cast<Scalar>();
            }
          },
          kind);
    }
  };
  fill_side(bc.left, true);
  fill_side(bc.right, false);
}

// Fills the x-side ghost strips over interior rows and the y-side strips over
// interior columns. Corner ghost blocks are not needed by the dimension-wise
// stencils and are left untouched.
template <typename Scalar>
void fill_ghosts(StateField2D<Scalar>& field, const BoundarySpec2D& bc, double t) {
  const Grid2D& g = field.grid();
  const int gw = g.ghost_width;

  auto fill_x = [&](const BoundaryKind2D& kind, bool is_left) {
    for (int p = 0; p < field.n_components(); ++p) {
      auto& m = field.comp(p);
      for (int j = 0; j < g.ny; ++j) {
        const int sj = gw + j;
        for (int k = 0; k < gw; ++k) {
          const int ghost = is_left ? gw - 1 - k : gw + g.nx + k;
          std::visit(
              [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, bc::Periodic>) {
                  const int src = is_left ? gw + g.nx - 1 - k : gw + k;
                  m(ghost, sj) = m(src, sj);
                } else if constexpr (std::is_same_v<T, bc::Extrapolate>) {
                  const int edge = is_left ? gw : gw + g.nx - 1;
                  m(ghost, sj) = m(edge, sj);
                } else if constexpr (std::is_same_v<T, bc::Dirichlet>) {
                  m(ghost, sj) = static_cast<Scalar>(b.values(p));
                } else {
                  m(ghost, sj) = static_cast<Scalar>(
                      b.fn(g.xc_of_storage(ghost), g.yc(j), t)(p));
                }
              },
              kind);
        }
      }
    }
  };
  auto fill_y = [&](const BoundaryKind2D& kind, bool is_bottom) {
    for (int p = 0; p < field.n_components(); ++p) {
      auto& m = field.comp(p);
      for (int i = 0; i < g.nx; ++i) {
        const int si = gw + i;
        for (int k = 0; k < gw; ++k) {
          const int ghost = is_bottom ? gw - 1 - k : gw + g.ny + k;
          std::visit(
              [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, bc::Periodic>) {
                  const int src = is_bottom ? gw + g.ny - 1 - k : gw + k;
                  m(si, ghost) = m(si, src);
                } else if constexpr (std::is_same_v<T, bc::Extrapolate>) {
                  const int edge = is_bottom ? gw : gw + g.ny - 1;
                  m(si, ghost) = m(si, edge);
                } else if constexpr (std::is_same_v<T, bc::Dirichlet>) {
                  m(si, ghost) = static_cast<Scalar>(b.values(p));
                } else {
                  m(si, ghost) = static_cast<Scalar>(
                      b.fn(g.xc(i), g.yc_of_storage(ghost), t)(p));
                }
              },
              kind);
        }
      }
    }
  };
  fill_x(bc.left, true);
  fill_x(bc.right, false);
  fill_y(bc.bottom, true);
  fill_y(bc.top, false);
}

}  // namespace relax
