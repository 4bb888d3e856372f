#ifndef BASISFOREST_QUADRATURE_HPP
#define BASISFOREST_QUADRATURE_HPP

#include <vector>

#include <Eigen/Dense>

namespace basisforest {

struct QuadraturePoint
{
  Eigen::Vector2d point; // reference coordinates
  double weight;         // weights sum to the reference triangle area 1/2
};

/** \brief Symmetric 6-point rule on the reference triangle, exact for
 * polynomials of total degree up to 4.
 *
 * Integrals over a world triangle are |det J| times the weighted sum of
 * integrand values at the points.
 */
const std::vector<QuadraturePoint>& triangleQuadratureOrder4();

} // namespace basisforest

#endif // BASISFOREST_QUADRATURE_HPP
