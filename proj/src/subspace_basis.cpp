#include <basisforest/subspace_basis.hpp>

namespace basisforest {

LocalTreeNode SubspaceLocalView::shiftedCopy(const LocalTreeNode& node, std::size_t shift)
{
  LocalTreeNode copy = node;
  copy.offset_ -= shift;
  for (auto& child : copy.children_)
    child = shiftedCopy(child, shift);
  return copy;
}

SubspaceLocalView::SubspaceLocalView(const GlobalBasis& rootBasis, const TreePath& prefixPath)
  : rootView_(rootBasis)
{
  const LocalTreeNode& sub = rootView_.tree().descendant(prefixPath);
  offset_ = sub.localOffset();
  tree_ = shiftedCopy(sub, offset_);
}

SubspaceBasis::SubspaceBasis(const GlobalBasis& rootBasis, TreePath prefixPath)
  : root_(&rootBasis), prefix_(std::move(prefixPath))
{
  root_->node(prefix_); // validates the path
}

SubspaceBasis subspaceBasis(const GlobalBasis& rootBasis, const TreePath& path)
{
  return SubspaceBasis(rootBasis, path);
}

SubspaceBasis subspaceBasis(const SubspaceBasis& basis, const TreePath& path)
{
  TreePath combined = basis.prefixPath();
  for (std::size_t i = 0; i < path.size(); ++i)
    combined.pushBack(path[i]);
  return SubspaceBasis(basis.rootBasis(), combined);
}

} // namespace basisforest
