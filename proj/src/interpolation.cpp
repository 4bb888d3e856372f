#include <basisforest/interpolation.hpp>

#include <set>
#include <stdexcept>
#include <string>

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

void interpolateImpl(const SubspaceBasis& basis, VectorBackend<double>& coefficients,
                     const VectorFunction& f, const MaskContainer* mask)
{
  const GlobalBasis& root = basis.rootBasis();
  const Mesh& mesh = root.mesh();

  if (coefficients.container().shape() != root.containerDescriptor())
    throw std::invalid_argument("interpolate: coefficient container does not match the root "
                                "basis structure");
  if (mask && mask->shape() != root.containerDescriptor())
    throw std::invalid_argument("interpolate: mask container does not match the root basis "
                                "structure");

  const std::size_t components = basis.node().leafCount;
  {
    Eigen::VectorXd probe = f(mesh.vertex(0));
    if (std::size_t(probe.size()) != components)
      throw std::invalid_argument("interpolate: function has "
                                  + std::to_string(probe.size()) + " components but the basis "
                                  "tree has " + std::to_string(components) + " leaves");
  }

  auto view = basis.localView();
  for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
    view.bind(cell);
    ElementGeometry geo = geometry(mesh, cell);
    std::size_t position = 0;
    forEachLeafNode(view.tree(), position, [&](const LocalTreeNode& leaf, std::size_t component) {
      Eigen::VectorXd local = leaf.finiteElement().interpolate(
          [&](const Eigen::Vector2d& ref) { return f(geo.global(ref))[component]; });
      for (std::size_t k = 0; k < leaf.finiteElement().size(); ++k) {
        const MultiIndex& index = view.index(leaf.localIndex(k));
        if (!mask || mask->at(index))
          coefficients[index] = local[k];
      }
    });
  }
}

VectorFunction wrapScalar(const ScalarFunction& f)
{
  return [f](const Eigen::Vector2d& x) {
    Eigen::VectorXd v(1);
    v[0] = f(x);
    return v;
  };
}

} // namespace

void interpolate(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                 const VectorFunction& f)
{
  interpolateImpl(basis, coefficients, f, nullptr);
}

void interpolate(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                 const ScalarFunction& f)
{
  interpolateImpl(basis, coefficients, wrapScalar(f), nullptr);
}

void interpolateMasked(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                       const VectorFunction& f, const MaskContainer& mask)
{
  interpolateImpl(basis, coefficients, f, &mask);
}

void interpolateMasked(const SubspaceBasis& basis, VectorBackend<double> coefficients,
                       const ScalarFunction& f, const MaskContainer& mask)
{
  interpolateImpl(basis, coefficients, wrapScalar(f), &mask);
}

namespace {

void collectLeafPaths(const BasisNode& node, TreePath path, std::vector<TreePath>& out)
{
  if (node.isLeaf()) {
    out.push_back(path);
    return;
  }
  for (std::size_t i = 0; i < node.childCount(); ++i) {
    TreePath childPath = path;
    childPath.pushBack(i);
    collectLeafPaths(node.child(i), childPath, out);
  }
}

} // namespace

void forEachBoundaryDOF(const SubspaceBasis& basis,
                        const std::function<void(const MultiIndex&)>& callback)
{
  const GlobalBasis& root = basis.rootBasis();
  const Mesh& mesh = root.mesh();

  std::vector<TreePath> leafPaths;
  collectLeafPaths(basis.node(), basis.prefixPath(), leafPaths);
  for (const TreePath& path : leafPaths)
    if (root.node(path).finiteElement->continuity() != Continuity::Continuous)
      throw std::invalid_argument("forEachBoundaryDOF: basis has discontinuous leaves, whose "
                                  "DOFs carry no entity association");

  std::vector<std::size_t> edges = boundaryEdges(mesh);
  std::set<std::size_t> vertices;
  for (std::size_t e : edges) {
    vertices.insert(mesh.edgeVertices(e)[0]);
    vertices.insert(mesh.edgeVertices(e)[1]);
  }

  for (const TreePath& path : leafPaths) {
    const SubentityLayout& layout = root.node(path).layout;
    for (std::size_t v : vertices)
      for (std::size_t w = 0; w < layout.perVertex; ++w)
        callback(root.entityDofMultiIndex(path, EntityClass::Vertex, v, w));
    for (std::size_t e : edges)
      for (std::size_t w = 0; w < layout.perEdge; ++w)
        callback(root.entityDofMultiIndex(path, EntityClass::Edge, e, w));
  }
}

} // namespace basisforest
