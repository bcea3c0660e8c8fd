#pragma once

#include <cmath>

#include "jaffardkit/pointset.hpp"

namespace jaffardkit {

enum class WeightKind { unit, polynomial };

// Weight on index points: unit, or nu_t(x) = (1+|x|)^t with |.| Euclidean.
// Moderate weights are realized within the same polynomial family.
struct WeightSpec {
  WeightKind kind = WeightKind::unit;
  double exponent = 0.0;

  static WeightSpec unit() { return {WeightKind::unit, 0.0}; }
  static WeightSpec polynomial(double exponent) {
    return {WeightKind::polynomial, exponent};
  }
  static WeightSpec moderate(double t) { return polynomial(t); }

  double operator()(const Point& x) const {
    if (kind == WeightKind::unit) return 1.0;
    return std::pow(1.0 + x.norm(), exponent);
  }
};

// nu_s(x) = (1+|x|)^s evaluated on a pair distance.
inline double pair_weight(double dist, double s) {
  return std::pow(1.0 + dist, s);
}

}  // namespace jaffardkit
