#ifndef BASISFOREST_INTERPOLATION_HPP
#define BASISFOREST_INTERPOLATION_HPP

#include <functional>

#include <Eigen/Dense>

#include <basisforest/nested_container.hpp>
#include <basisforest/subspace_basis.hpp>

namespace basisforest {

using VectorFunction = std::function<Eigen::VectorXd(const Eigen::Vector2d&)>;
using ScalarFunction = std::function<double(const Eigen::Vector2d&)>;

//! Boolean-like flags mirroring the nesting structure of a coefficient container.
using MaskContainer = NestedContainer<unsigned char>;

/** \brief Nodal interpolation of f into the span of the (subspace) basis.
 *
 * Writes, element by element, the local interpolation coefficients through
 * the local-to-global index map.  The function's range must have as many
 * scalar components as the basis tree has leaves; the components map to
 * the leaves in pre-order.  For a subspace basis, coefficients outside the
 * sub-tree are left untouched.  The container must be shaped for the root
 * basis.
 */
void interpolate(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                 const VectorFunction& f);

//! Scalar convenience overload for single-leaf bases.
void interpolate(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                 const ScalarFunction& f);

/** \brief Masked interpolation: only entries whose mask flag is set are
 * written; all others keep their previous values bit for bit.
 */
void interpolateMasked(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                       const VectorFunction& f, const MaskContainer& mask);

void interpolateMasked(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                       const ScalarFunction& f, const MaskContainer& mask);

/** \brief Invoke the callback once per global multi-index whose DOF sits on
 * a boundary vertex or boundary edge.
 *
 * Requires continuous Lagrange leaves throughout the (sub-)tree; bases
 * with discontinuous leaves are rejected.  Each boundary DOF is reported
 * exactly once.
 */
void forEachBoundaryDOF(const SubspaceBasis& basis,
                        const std::function<void(const MultiIndex&)>& callback);

} // namespace basisforest

#endif // BASISFOREST_INTERPOLATION_HPP
