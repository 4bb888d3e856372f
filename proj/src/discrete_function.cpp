#include <basisforest/discrete_function.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace basisforest {

namespace {

template<class Callback>
void forEachLeafNode(const LocalTreeNode& node, std::size_t& position, Callback&& callback)
{
  if (node.isLeaf()) {
    callback(node, position++);
    return;
  }
  for (std::size_t i = 0; i < node.childCount(); ++i)
    forEachLeafNode(node.child(i), position, callback);
}

} // namespace

DiscreteFunction::DiscreteFunction(SubspaceBasis basis, ConstVectorBackend<double> coefficients,
                                   std::size_t rangeDimension)
  : basis_(std::move(basis)), coefficients_(coefficients), rangeDimension_(rangeDimension)
{
  if (rangeDimension_ != basis_.node().leafCount)
    throw std::invalid_argument("DiscreteFunction: range dimension must equal the number of "
                                "leaves of the basis tree");
  if (coefficients_.container().shape() != basis_.rootBasis().containerDescriptor())
    throw std::invalid_argument("DiscreteFunction: coefficient container does not match the "
                                "root basis structure");
}

DiscreteFunction::LocalFunction::LocalFunction(const DiscreteFunction& function)
  : function_(&function), view_(function.basis().localView())
{
}

Eigen::VectorXd DiscreteFunction::LocalFunction::operator()(const Eigen::Vector2d& refPoint) const
{
  Eigen::VectorXd value = Eigen::VectorXd::Zero(function_->rangeDimension());
  std::size_t position = 0;
  forEachLeafNode(view_.tree(), position, [&](const LocalTreeNode& leaf, std::size_t component) {
    Eigen::VectorXd shapeValues = leaf.finiteElement().evaluateValues(refPoint);
    for (std::size_t k = 0; k < leaf.finiteElement().size(); ++k)
      value[component] += function_->coefficients_[view_.index(leaf.localIndex(k))] * shapeValues[k];
  });
  return value;
}

std::size_t locateCell(const Mesh& mesh, const Eigen::Vector2d& worldPoint)
{
  auto clampIndex = [](double scaled, std::size_t n) {
    double c = std::clamp(scaled, 0.0, double(n) - 1.0);
    return std::min(std::size_t(c), n - 1);
  };
  std::size_t ix = clampIndex(std::floor(worldPoint.x() * double(mesh.nx())), mesh.nx());
  std::size_t iy = clampIndex(std::floor(worldPoint.y() * double(mesh.ny())), mesh.ny());
  double sx = worldPoint.x() * double(mesh.nx()) - double(ix);
  double sy = worldPoint.y() * double(mesh.ny()) - double(iy);
  // The diagonal runs from the square's lower-left to its upper-right
  // corner; below it lies the lower (first) triangle.
  return 2 * (iy * mesh.nx() + ix) + (sx >= sy ? 0 : 1);
}

Eigen::VectorXd DiscreteFunction::operator()(const Eigen::Vector2d& worldPoint) const
{
  std::size_t cell = locateCell(basis_.mesh(), worldPoint);
  LocalFunction local = localFunction();
  local.bind(cell);
  return local(geometry(basis_.mesh(), cell).local(worldPoint));
}

DiscreteFunction makeDiscreteFunction(const SubspaceBasis& basis,
                                      ConstVectorBackend<double> coefficients,
                                      std::size_t rangeDimension)
{
  return DiscreteFunction(basis, coefficients, rangeDimension);
}

} // namespace basisforest
