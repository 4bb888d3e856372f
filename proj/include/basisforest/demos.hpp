#ifndef BASISFOREST_DEMOS_HPP
#define BASISFOREST_DEMOS_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include <basisforest/global_basis.hpp>
#include <basisforest/interpolation.hpp>
#include <basisforest/nested_container.hpp>

namespace basisforest {

//! Line-oriented key=value summary of a demo run.
struct DemoReport
{
  std::vector<std::pair<std::string, std::string>> fields;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::size_t value);
  void set(const std::string& key, double value);

  //! One "key=value" line per field.
  void print(std::ostream& os) const;
};

//! Stiffness matrix of the Laplace bilinear form, no boundary conditions.
Eigen::MatrixXd assemblePoissonMatrix(const GlobalBasis& basis);

//! Load vector of the right-hand side f, no boundary conditions.
Eigen::VectorXd assemblePoissonLoad(const GlobalBasis& basis, const ScalarFunction& f);

struct PoissonResult
{
  DemoReport report;
  GlobalBasis basis;
  NestedContainer<double> solution;
  double nodalError = 0;
  std::size_t iterations = 0;
};

/** \brief Solve -(Laplace u) = f with Dirichlet data from the exact
 * solution on the whole boundary, using Lagrange elements of the given
 * degree and a conjugate gradient solver (relative tolerance 1e-12).
 *
 * Boundary values are imposed through the boundary-DOF mask and masked
 * interpolation, then eliminated symmetrically.  Reports the max-norm
 * error of the coefficient vector against the interpolated exact solution.
 */
PoissonResult solvePoisson(const Mesh& mesh, unsigned degree, const ScalarFunction& exactSolution,
                           const ScalarFunction& rightHandSide);

//! The manufactured default problem u(x,y) = x^2 + y^2, f = -4.
PoissonResult solvePoisson(const Mesh& mesh, unsigned degree);

/** \brief Multi-index layouts for the Taylor-Hood velocity block.
 *
 * PerComponent keeps each velocity component contiguous (indices
 * (0,component,dof)); PerDof groups the components of each scalar P2
 * degree of freedom (indices (0,dof,component)).
 */
enum class VelocityBlocking { PerComponent, PerDof };

//! (P2)^dim velocity with the chosen blocking, P1 pressure, blocked root.
BasisDescriptor taylorHoodDescriptor(VelocityBlocking blocking, std::size_t dim = 2);

//! Stokes saddle-point matrix (viscous block and pressure coupling), no BCs.
Eigen::MatrixXd assembleStokesMatrix(const GlobalBasis& basis);

struct StokesResult
{
  DemoReport report;
  GlobalBasis basis;
  NestedContainer<double> solution;
  double velocityError = 0;
  double pressureError = 0;
};

/** \brief Solve the Stokes equations for Poiseuille flow u = (y(1-y), 0),
 * p = -2x with Taylor-Hood elements and a dense direct solver.
 *
 * Velocity Dirichlet values come from the exact flow on the whole
 * boundary; the pressure gauge is fixed by pinning the DOF with
 * multi-index (1,0).  Reports the max velocity coefficient error and the
 * mean-adjusted max pressure error.  Meshes with more than `denseCellCap`
 * squares are rejected.
 */
StokesResult solveStokes(const Mesh& mesh, VelocityBlocking blocking,
                         std::size_t denseCellCap = 256);

} // namespace basisforest

#endif // BASISFOREST_DEMOS_HPP
