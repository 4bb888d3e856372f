#ifndef BASISFOREST_SUBSPACE_BASIS_HPP
#define BASISFOREST_SUBSPACE_BASIS_HPP

#include <basisforest/local_view.hpp>

namespace basisforest {

/** \brief Local view of a subspace basis.
 *
 * Exposes only the sub-tree's leaves, with local indices renumbered to
 * 0..size()-1 in pre-order of the sub-tree, while index(i) still returns
 * the root basis's global multi-indices.
 */
class SubspaceLocalView
{
public:
  SubspaceLocalView(const GlobalBasis& rootBasis, const TreePath& prefixPath);

  void bind(std::size_t cell) { rootView_.bind(cell); }
  bool isBound() const { return rootView_.isBound(); }
  std::size_t boundCell() const { return rootView_.boundCell(); }

  //! Number of element-local basis functions of the sub-tree.
  std::size_t size() const
  {
    if (!isBound())
      throw std::logic_error("SubspaceLocalView: not bound to an element");
    return tree_.size();
  }

  std::size_t maxSize() const { return tree_.size(); }

  //! Root-global multi-index of sub-tree-local basis function i.
  const MultiIndex& index(std::size_t i) const
  {
    if (i >= tree_.size())
      throw std::out_of_range("SubspaceLocalView: local index out of range");
    return rootView_.index(offset_ + i);
  }

  //! The sub-tree with renumbered local indices.
  const LocalTreeNode& tree() const { return tree_; }

private:
  static LocalTreeNode shiftedCopy(const LocalTreeNode& node, std::size_t shift);

  LocalView rootView_;
  std::size_t offset_ = 0;
  LocalTreeNode tree_;
};

/** \brief A sub-tree of a basis treated as a basis of its own.
 *
 * Local views expose only the sub-tree's basis functions, but global
 * multi-indices are those of the root basis, so they address containers
 * sized for the root; in general they are neither consecutive nor
 * zero-based.  A global basis behaves like the trivial subspace with the
 * empty prefix path.
 */
class SubspaceBasis
{
public:
  //! Intentionally implicit: a GlobalBasis is its own trivial subspace.
  SubspaceBasis(const GlobalBasis& rootBasis, TreePath prefixPath = TreePath());

  const GlobalBasis& rootBasis() const { return *root_; }
  const TreePath& prefixPath() const { return prefix_; }

  //! The basis-tree node the prefix path addresses.
  const BasisNode& node() const { return root_->node(prefix_); }

  const Mesh& mesh() const { return root_->mesh(); }

  SubspaceLocalView localView() const { return SubspaceLocalView(*root_, prefix_); }

private:
  const GlobalBasis* root_;
  TreePath prefix_;
};

//! Treat the sub-tree at `path` as a basis with root-global numbering.
SubspaceBasis subspaceBasis(const GlobalBasis& rootBasis, const TreePath& path);

//! Subspace of a subspace; the prefix paths concatenate.
SubspaceBasis subspaceBasis(const SubspaceBasis& basis, const TreePath& path);

} // namespace basisforest

#endif // BASISFOREST_SUBSPACE_BASIS_HPP
