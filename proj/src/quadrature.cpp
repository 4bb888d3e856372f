#include <basisforest/quadrature.hpp>

namespace basisforest {

const std::vector<QuadraturePoint>& triangleQuadratureOrder4()
{
  static const std::vector<QuadraturePoint> rule = [] {
    const double a = 0.445948490915965;
    const double wa = 0.223381589678011 / 2.0;
    const double b = 0.091576213509771;
    const double wb = 0.109951743655322 / 2.0;
    std::vector<QuadraturePoint> points;
    for (auto [c, w] : {std::pair{a, wa}, std::pair{b, wb}}) {
      points.push_back({{c, c}, w});
      points.push_back({{1.0 - 2.0 * c, c}, w});
      points.push_back({{c, 1.0 - 2.0 * c}, w});
    }
    return points;
  }();
  return rule;
}

} // namespace basisforest
