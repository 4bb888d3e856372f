#ifndef BASISFOREST_LOCAL_FINITE_ELEMENT_HPP
#define BASISFOREST_LOCAL_FINITE_ELEMENT_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace basisforest {

enum class Continuity { Continuous, Discontinuous };

/** \brief Assignment of one local degree of freedom to a reference subentity.
 *
 * The reference triangle has one cell (codim 0), three edges (codim 1) and
 * three vertices (codim 2).  `index` numbers the degrees of freedom living
 * on the same subentity; for edge DOFs it follows the edge's reference
 * direction from its lower to its higher vertex index.
 */
struct LocalKey
{
  unsigned codim;
  unsigned subEntity;
  unsigned index;

  friend bool operator==(const LocalKey& a, const LocalKey& b)
  {
    return a.codim == b.codim && a.subEntity == b.subEntity && a.index == b.index;
  }
};

/** \brief Lagrange finite element on the reference triangle.
 *
 * Shape functions are the nodal basis for the equispaced point set of the
 * given degree: shape function i is one at node i and zero at all other
 * nodes.  The numbering of shape functions is the leaf-local index used by
 * the basis tree machinery.  Immutable after construction.
 */
class LocalFiniteElement
{
public:
  unsigned degree() const { return degree_; }
  Continuity continuity() const { return continuity_; }

  //! Number of shape functions, (k+1)(k+2)/2.
  std::size_t size() const { return nodes_.size(); }

  const LocalKey& localKey(std::size_t i) const { return keys_.at(i); }

  //! Nodal point of shape function i in reference coordinates.
  const Eigen::Vector2d& node(std::size_t i) const { return nodes_.at(i); }

  //! Values of all shape functions at a reference point.
  Eigen::VectorXd evaluateValues(const Eigen::Vector2d& p) const;

  //! Reference gradients of all shape functions at a point, one row each.
  Eigen::Matrix<double, Eigen::Dynamic, 2> evaluateGradients(const Eigen::Vector2d& p) const;

  /** \brief Nodal interpolation: coefficient i is f evaluated at node i.
   *
   * For f in the span of the shape functions the resulting coefficients
   * reproduce f exactly.
   */
  Eigen::VectorXd interpolate(const std::function<double(const Eigen::Vector2d&)>& f) const;

  friend LocalFiniteElement lagrangeSimplex(unsigned degree, Continuity continuity);

private:
  LocalFiniteElement() = default;

  Eigen::VectorXd monomials(const Eigen::Vector2d& p) const;

  unsigned degree_ = 0;
  Continuity continuity_ = Continuity::Continuous;
  std::vector<Eigen::Vector2d> nodes_;
  std::vector<LocalKey> keys_;
  std::vector<std::array<unsigned, 2>> exponents_; // monomial exponents (a,b), a+b <= k
  Eigen::MatrixXd coefficients_;                   // shape i = coefficients_.row(i) * monomials
};

/** \brief The equispaced Lagrange element of the given degree (0..3).
 *
 * Continuous elements assign vertex, edge and interior DOFs to the
 * corresponding subentities; discontinuous elements assign every DOF to
 * the cell.  Degrees above 3 are rejected.
 */
LocalFiniteElement lagrangeSimplex(unsigned degree,
                                   Continuity continuity = Continuity::Continuous);

} // namespace basisforest

#endif // BASISFOREST_LOCAL_FINITE_ELEMENT_HPP
