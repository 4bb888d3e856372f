#ifndef BASISFOREST_INDEX_TREE_HPP
#define BASISFOREST_INDEX_TREE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <basisforest/multi_index.hpp>

namespace basisforest {

/** \brief The tree formed by a prefix-consistent set of multi-indices.
 *
 * Leaf paths of the tree are the multi-indices themselves; inner nodes are
 * their strict prefixes.  The same structure doubles as the shape
 * specification (container descriptor) of nested coefficient containers:
 * a Value node stands for one scalar slot, a Uniform node for `count`
 * children of one shared shape, and a NonUniform node for an ordered list
 * of child shapes.
 *
 * Trees are immutable values.  NonUniform construction collapses to
 * Uniform whenever all children are structurally identical, so shapes have
 * a unique canonical representation.
 */
class IndexTree
{
public:
  enum class Kind { Value, Uniform, NonUniform };

  //! Default-constructed tree is a single Value leaf.
  IndexTree() = default;

  static IndexTree value() { return IndexTree(); }

  static IndexTree uniform(std::size_t count, IndexTree child)
  {
    if (count == 0)
      throw std::invalid_argument("IndexTree: uniform node needs count >= 1");
    IndexTree t;
    t.kind_ = Kind::Uniform;
    t.count_ = count;
    t.leafCount_ = count * child.leafCount_;
    t.children_.push_back(std::move(child));
    return t;
  }

  //! Builds a NonUniform node, collapsing to Uniform if all children agree.
  static IndexTree nonUniform(std::vector<IndexTree> children);

  Kind kind() const { return kind_; }
  bool isValue() const { return kind_ == Kind::Value; }

  //! Number of direct children; zero for a Value leaf.
  std::size_t degree() const { return kind_ == Kind::Uniform ? count_ : children_.size(); }

  const IndexTree& child(std::size_t i) const
  {
    if (i >= degree())
      throw std::out_of_range("IndexTree: child index out of range");
    return kind_ == Kind::Uniform ? children_[0] : children_[i];
  }

  //! Total number of leaf paths (scalar slots) below this node.
  std::size_t leafCount() const { return leafCount_; }

  //! Number of leaf paths below children 0..i-1; only for NonUniform nodes.
  std::size_t leafOffset(std::size_t i) const;

  //! Descend along `prefix`; throws if a digit is out of range or hits a Value.
  const IndexTree& nodeAt(const MultiIndex& prefix) const;

  friend bool operator==(const IndexTree& a, const IndexTree& b);
  friend bool operator!=(const IndexTree& a, const IndexTree& b) { return !(a == b); }

  /** \brief Render as nested size annotations.
   *
   * Value prints as "*", Uniform as "[n x child]", NonUniform as a
   * parenthesized child list.
   */
  std::string str() const;

private:
  Kind kind_ = Kind::Value;
  std::size_t count_ = 0;             // Uniform child count
  std::vector<IndexTree> children_;   // Uniform: one entry; NonUniform: degree() entries
  std::size_t leafCount_ = 1;
  std::vector<std::size_t> childLeafOffsets_; // NonUniform prefix sums, degree()+1 entries
};

std::ostream& operator<<(std::ostream& os, const IndexTree& tree);

/** \brief Number of direct children of the node addressed by `prefix`.
 *
 * Throws if the prefix is not present in the tree or addresses a leaf.
 */
std::size_t degPlus(const IndexTree& tree, const MultiIndex& prefix);

//! All root-to-leaf digit paths in lexicographic order.
std::vector<MultiIndex> leafPaths(const IndexTree& tree);

/** \brief Ordinal of a leaf path in lexicographic leaf order.
 *
 * This is the storage offset of the addressed scalar in a densely stored
 * container of the given shape.  Throws if the path addresses an inner
 * node (too short) or leaves the tree (digit out of range, or digits
 * remaining past a Value node).
 */
std::size_t flatIndex(const IndexTree& tree, const MultiIndex& leafPath);

/** \brief Check the defining property of an index tree.
 *
 * A set of multi-indices is an index tree iff at every node the children
 * are consecutively numbered from zero and no member is a strict prefix of
 * another member.
 */
bool isValidIndexTree(const std::vector<MultiIndex>& paths);

} // namespace basisforest

#endif // BASISFOREST_INDEX_TREE_HPP
