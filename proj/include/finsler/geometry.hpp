#pragma once

#include <variant>

#include "finsler/vecmat.hpp"

namespace finsler {

/// Chart point in a single global coordinate system.
struct Point {
  Vec<double> coords;

  Point() = default;
  explicit Point(Vec<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}
  int dim() const { return coords.size(); }
};

struct TangentVector {
  Point base;
  Vec<double> components;

  TangentVector() = default;
  TangentVector(Point b, Vec<double> c) : base(std::move(b)), components(std::move(c)) {}
  int dim() const { return components.size(); }
};

/// A flag: 2-plane span{pole, transverse} with distinguished pole vector.
struct Flag {
  Point base;
  Vec<double> pole;
  Vec<double> transverse;
};

struct AllSpace {};
struct OpenBall {
  Vec<double> center;
  double radius = 1.0;
};
struct BoxDomain {
  Vec<double> lo, hi;
};

/// Validity domain of the chart.  `margin` is the safety shrink integrators
/// respect when deciding whether a trajectory has left the usable region.
struct ChartDomain {
  std::variant<AllSpace, OpenBall, BoxDomain> kind = AllSpace{};
  double margin = 0.0;

  static ChartDomain all_space() { return {AllSpace{}, 0.0}; }
  static ChartDomain open_ball(Vec<double> center, double radius, double margin) {
    return {OpenBall{std::move(center), radius}, margin};
  }
  static ChartDomain box(Vec<double> lo, Vec<double> hi, double margin) {
    return {BoxDomain{std::move(lo), std::move(hi)}, margin};
  }

  bool contains(const Vec<double>& x, double shrink = 0.0) const {
    if (std::holds_alternative<AllSpace>(kind)) return true;
    if (const auto* b = std::get_if<OpenBall>(&kind)) {
      Vec<double> d = x;
      if (b->center.size() == x.size()) d = x - b->center;
      return norm(d) < b->radius - shrink;
    }
    const auto& bx = std::get<BoxDomain>(kind);
    for (int i = 0; i < x.size(); ++i)
      if (x[i] <= bx.lo[i] + shrink || x[i] >= bx.hi[i] - shrink) return false;
    return true;
  }

  bool contains_with_margin(const Vec<double>& x) const { return contains(x, margin); }
};

}  // namespace finsler
