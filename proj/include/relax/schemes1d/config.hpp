#pragma once

#include <optional>
#include <string>

#include "relax/core/errors.hpp"

namespace relax {

// JX:  constant symmetric subcharacteristic speeds (global maximum eigenvalue)
// VRS: per-interface symmetric local speeds
// VRO: per-interface one-sided local speeds (adapts to upwind)
enum class SchemeKind { JX, VRS, VRO };

inline const char* to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::JX: return "JX";
    case SchemeKind::VRS: return "VRS";
    case SchemeKind::VRO: return "VRO";
  }
  return "?";
}

inline SchemeKind scheme_kind_from_string(const std::string& s) {
  if (s == "JX" || s == "jx") return SchemeKind::JX;
  if (s == "VRS" || s == "vrs") return SchemeKind::VRS;
  if (s == "VRO" || s == "vro") return SchemeKind::VRO;
  throw ConfigError("unknown scheme kind '" + s + "' (expected JX, VRS or VRO)");
}

struct SchemeConfig {
  SchemeKind scheme = SchemeKind::VRS;
  int order = 2;             // 1: forward Euler, 2: MUSCL corrections + TVD RK2
  double cfl = 0.5;          // dt <= cfl * dx / a_max
  double speed_floor = 1e-12;
  double speed_safety = 1.0;
  // Test/diagnostic hook: pins every interface to constant symmetric speeds,
  // bypassing selection. Used by the JX-reduction identity checks.
  std::optional<double> pinned_speed;

  void validate() const {
    if (order != 1 && order != 2) throw ConfigError("SchemeConfig: order must be 1 or 2");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("SchemeConfig: cfl must lie in (0, 1]");
    if (!(speed_floor > 0.0)) throw ConfigError("SchemeConfig: speed_floor must be positive");
    if (!(speed_safety >= 1.0)) throw ConfigError("SchemeConfig: speed_safety must be >= 1");
  }
};

}  // namespace relax
