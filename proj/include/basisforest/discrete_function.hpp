#ifndef BASISFOREST_DISCRETE_FUNCTION_HPP
#define BASISFOREST_DISCRETE_FUNCTION_HPP

#include <Eigen/Dense>

#include <basisforest/nested_container.hpp>
#include <basisforest/subspace_basis.hpp>

namespace basisforest {

/** \brief A finite element function given by a basis and a coefficient
 * container.
 *
 * Evaluation forms the linear combination of basis functions weighted by
 * the coefficients addressed through their global multi-indices.  For a
 * subspace basis, only the coefficients of the sub-tree are used; the
 * container must still be shaped for the root basis.  The r leaves of the
 * (sub-)tree map in pre-order to the r components of the range.
 *
 * The function is read-only and shareable; its local-function cursor is a
 * single-threaded object.
 */
class DiscreteFunction
{
public:
  DiscreteFunction(SubspaceBasis basis, ConstVectorBackend<double> coefficients,
                   std::size_t rangeDimension);

  std::size_t rangeDimension() const { return rangeDimension_; }
  const SubspaceBasis& basis() const { return basis_; }

  //! Bindable per-element evaluation cursor.
  class LocalFunction
  {
  public:
    explicit LocalFunction(const DiscreteFunction& function);

    void bind(std::size_t cell) { view_.bind(cell); }
    bool isBound() const { return view_.isBound(); }

    //! Value at a reference point of the bound cell.
    Eigen::VectorXd operator()(const Eigen::Vector2d& refPoint) const;

  private:
    const DiscreteFunction* function_;
    SubspaceLocalView view_;
  };

  LocalFunction localFunction() const { return LocalFunction(*this); }

  /** \brief Value at a world point of the unit square.
   *
   * The containing cell is found by direct arithmetic on the structured
   * mesh; points outside [0,1]^2 are clamped.
   */
  Eigen::VectorXd operator()(const Eigen::Vector2d& worldPoint) const;

private:
  SubspaceBasis basis_;
  ConstVectorBackend<double> coefficients_;
  std::size_t rangeDimension_;
};

/** \brief Combine a (subspace) basis with coefficients into a function.
 *
 * `rangeDimension` must equal the number of leaves of the basis tree and
 * the coefficient container must be shaped like the root basis's container
 * descriptor.
 */
DiscreteFunction makeDiscreteFunction(const SubspaceBasis& basis,
                                      ConstVectorBackend<double> coefficients,
                                      std::size_t rangeDimension);

//! Cell index of the structured mesh containing a world point.
std::size_t locateCell(const Mesh& mesh, const Eigen::Vector2d& worldPoint);

} // namespace basisforest

#endif // BASISFOREST_DISCRETE_FUNCTION_HPP
