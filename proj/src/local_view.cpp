#include <basisforest/local_view.hpp>

#include <stdexcept>

namespace basisforest {

LocalTreeNode LocalView::buildTree(const BasisNode& node, TreePath path, std::size_t& offset)
{
  LocalTreeNode local;
  local.basisNode_ = &node;
  local.path_ = path;
  local.offset_ = offset;

  if (node.isLeaf()) {
    local.size_ = node.finiteElement->size();
    offset += local.size_;
    return local;
  }

  local.children_.reserve(node.childCount());
  for (std::size_t i = 0; i < node.childCount(); ++i) {
    TreePath childPath = path;
    childPath.pushBack(i);
    local.children_.push_back(buildTree(node.child(i), childPath, offset));
  }
  local.size_ = offset - local.offset_;
  return local;
}

namespace {

void fillLeafIndices(const GlobalBasis& basis, const LocalTreeNode& node, std::size_t cell,
                     std::vector<MultiIndex>& indices)
{
  if (node.isLeaf()) {
    const std::size_t n = node.finiteElement().size();
    for (std::size_t k = 0; k < n; ++k)
      indices[node.localIndex(k)] = basis.dofMultiIndex(node.treePath(), cell, k);
    return;
  }
  for (std::size_t i = 0; i < node.childCount(); ++i)
    fillLeafIndices(basis, node.child(i), cell, indices);
}

} // namespace

LocalView::LocalView(const GlobalBasis& basis) : basis_(&basis)
{
  std::size_t offset = 0;
  tree_ = buildTree(basis.root(), TreePath(), offset);
}

void LocalView::bind(std::size_t cell)
{
  if (cell >= basis_->mesh().numCells())
    throw std::out_of_range("LocalView: cell index out of range");

  indices_.resize(tree_.size());
  fillLeafIndices(*basis_, tree_, cell, indices_);
  cell_ = cell;
  bound_ = true;
}

std::size_t LocalView::boundCell() const
{
  if (!bound_)
    throw std::logic_error("LocalView: not bound to an element");
  return cell_;
}

std::size_t LocalView::size() const
{
  if (!bound_)
    throw std::logic_error("LocalView: not bound to an element");
  return tree_.size();
}

const MultiIndex& LocalView::index(std::size_t i) const
{
  if (!bound_)
    throw std::logic_error("LocalView: index() on an unbound view");
  if (i >= indices_.size())
    throw std::out_of_range("LocalView: local index out of range");
  return indices_[i];
}

LocalView GlobalBasis::localView() const
{
  return LocalView(*this);
}

} // namespace basisforest
