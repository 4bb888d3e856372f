#ifndef BASISFOREST_LOCAL_VIEW_HPP
#define BASISFOREST_LOCAL_VIEW_HPP

#include <cstddef>
#include <vector>

#include <basisforest/global_basis.hpp>

namespace basisforest {

/** \brief One node of the per-element basis tree exposed by a LocalView.
 *
 * Mirrors the basis tree; leaves carry the local finite element and the
 * map from leaf-local shape function numbers to element-local indices.
 * Local indices are assigned by depth-first pre-order leaf traversal and
 * are consecutive within each leaf.
 */
class LocalTreeNode
{
public:
  bool isLeaf() const { return basisNode_->isLeaf(); }

  std::size_t childCount() const { return children_.size(); }

  const LocalTreeNode& child(std::size_t i) const
  {
    if (i >= children_.size())
      throw std::out_of_range("LocalTreeNode: child index out of range");
    return children_[i];
  }

  //! Descend along a path of child indices.
  const LocalTreeNode& descendant(const TreePath& path) const
  {
    const LocalTreeNode* n = this;
    for (std::size_t i = 0; i < path.size(); ++i)
      n = &n->child(path[i]);
    return *n;
  }

  //! Number of element-local basis functions in this subtree.
  std::size_t size() const { return size_; }

  //! First element-local index of this subtree in pre-order.
  std::size_t localOffset() const { return offset_; }

  //! Element-local index of leaf-local shape function k.
  std::size_t localIndex(std::size_t k) const
  {
    if (!isLeaf() || k >= size_)
      throw std::out_of_range("LocalTreeNode: not a leaf shape function index");
    return offset_ + k;
  }

  const LocalFiniteElement& finiteElement() const
  {
    if (!isLeaf())
      throw std::logic_error("LocalTreeNode: only leaves carry a finite element");
    return *basisNode_->finiteElement;
  }

  //! Path of this node within the basis tree.
  const TreePath& treePath() const { return path_; }

  //! The basis node this local node mirrors.
  const BasisNode& basisNode() const { return *basisNode_; }

private:
  friend class LocalView;
  friend class SubspaceLocalView;

  const BasisNode* basisNode_ = nullptr;
  TreePath path_;
  std::size_t offset_ = 0;
  std::size_t size_ = 0;
  std::vector<LocalTreeNode> children_;
};

/** \brief The restriction of a basis to a single element.
 *
 * A freshly created view is unbound; bind() attaches it to a cell and
 * pre-computes the global multi-index of every element-local basis
 * function.  Rebinding to another cell is permitted at any time.  A view
 * is a single-threaded cursor; distinct views of one basis may be used
 * concurrently.
 */
class LocalView
{
public:
  explicit LocalView(const GlobalBasis& basis);

  //! Bind to a cell, filling the multi-index cache.
  void bind(std::size_t cell);

  bool isBound() const { return bound_; }

  //! The cell this view is bound to; throws when unbound.
  std::size_t boundCell() const;

  //! Number of element-local basis functions; throws when unbound.
  std::size_t size() const;

  //! Largest size over all elements; available unbound.
  std::size_t maxSize() const { return basis_->maxLocalSize(); }

  /** \brief Global multi-index of the element-local basis function i.
   *
   * Cached at bind time; repeated calls are cheap.  Throws when the view
   * is unbound or i is out of range.
   */
  const MultiIndex& index(std::size_t i) const;

  //! The per-element basis tree; structure is accessible even unbound.
  const LocalTreeNode& tree() const { return tree_; }

  const GlobalBasis& globalBasis() const { return *basis_; }

private:
  LocalTreeNode buildTree(const BasisNode& node, TreePath path, std::size_t& offset);

  const GlobalBasis* basis_;
  LocalTreeNode tree_;
  bool bound_ = false;
  std::size_t cell_ = 0;
  std::vector<MultiIndex> indices_;
};

//! The local tree node addressed by `path`, e.g. a velocity component leaf.
inline const LocalTreeNode& treeChild(const LocalView& view, const TreePath& path)
{
  return view.tree().descendant(path);
}

} // namespace basisforest

#endif // BASISFOREST_LOCAL_VIEW_HPP
