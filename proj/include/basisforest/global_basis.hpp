#ifndef BASISFOREST_GLOBAL_BASIS_HPP
#define BASISFOREST_GLOBAL_BASIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <basisforest/basis_descriptor.hpp>
#include <basisforest/index_tree.hpp>
#include <basisforest/local_finite_element.hpp>
#include <basisforest/merging.hpp>
#include <basisforest/mesh.hpp>
#include <basisforest/multi_index.hpp>

namespace basisforest {

class LocalView;

//! Entity classes a Lagrange degree of freedom can be associated with.
enum class EntityClass : unsigned { Vertex = 0, Edge = 1, Cell = 2 };

std::size_t entityClassCount(const Mesh& mesh, EntityClass entityClass);

//! Degrees of freedom per entity of each class for one Lagrange leaf.
struct SubentityLayout
{
  std::size_t perVertex = 0;
  std::size_t perEdge = 0;
  std::size_t perCell = 0;

  std::size_t multiplicity(EntityClass entityClass) const
  {
    switch (entityClass) {
    case EntityClass::Vertex:
      return perVertex;
    case EntityClass::Edge:
      return perEdge;
    case EntityClass::Cell:
      return perCell;
    }
    return 0;
  }

  //! Total number of leaf basis functions on the given mesh.
  std::size_t dimension(const Mesh& mesh) const
  {
    return mesh.numVertices() * perVertex + mesh.numEdges() * perEdge
         + mesh.numCells() * perCell;
  }
};

/** \brief How a leaf announces its global indices.
 *
 * Flat leaves use one digit, numbering vertex DOFs first, then edge DOFs,
 * then cell DOFs.  Entity-resolved leaves use (entity, within) digits,
 * preceded by an entity-class digit when more than one class carries DOFs;
 * this form is used by discontinuous leaves and below entity-wise blocking.
 */
enum class LeafIndexMode { Flat, EntityResolved };

/** \brief One node of the built basis tree.
 *
 * Mirrors the descriptor tree and carries everything derived during basis
 * construction: the subtree's index tree, the merge context of inner
 * nodes, and the reference element plus numbering layout of leaves.
 */
struct BasisNode
{
  BasisDescriptor::Kind kind = BasisDescriptor::Kind::Leaf;
  MergingStrategy strategy = MergingStrategy::BlockedLexicographic;
  std::size_t exponent = 1;
  std::vector<BasisNode> children; // power nodes store their one child once

  std::optional<LocalFiniteElement> finiteElement;
  SubentityLayout layout;
  LeafIndexMode mode = LeafIndexMode::Flat;
  std::vector<EntityClass> activeClasses; // classes with multiplicity > 0

  IndexTree indexTree;
  MergeContext mergeContext;
  std::size_t localSize = 0; // shape functions per element in this subtree
  std::size_t leafCount = 0; // leaf nodes in this subtree

  bool isLeaf() const { return kind == BasisDescriptor::Kind::Leaf; }

  std::size_t childCount() const
  {
    return kind == BasisDescriptor::Kind::Power ? exponent : children.size();
  }

  const BasisNode& child(std::size_t i) const
  {
    if (i >= childCount())
      throw std::out_of_range("BasisNode: child index out of range");
    return kind == BasisDescriptor::Kind::Power ? children[0] : children[i];
  }
};

/** \brief A basis tree bound to a mesh, assigning every basis function its
 * global multi-index.
 *
 * The set of all global multi-indices is the leaf-path set of the basis's
 * index tree; the assignment is injective.  Access to basis functions
 * happens through local views bound to single cells.  Immutable after
 * construction; concurrent reads and concurrent local views are safe.
 */
class GlobalBasis
{
public:
  GlobalBasis(const Mesh& mesh, BasisDescriptor descriptor);

  const Mesh& mesh() const { return *mesh_; }
  const BasisDescriptor& descriptor() const { return descriptor_; }

  //! Total number of basis functions.
  std::size_t dimension() const { return root_.indexTree.leafCount(); }

  //! The index tree of the basis, viewed as a nested container shape.
  const IndexTree& containerDescriptor() const { return root_.indexTree; }

  /** \brief Number of direct children of the index-tree node at `prefix`.
   *
   * For the empty prefix on a flat basis this equals the dimension.
   * Throws for prefixes not present in the tree or addressing a leaf.
   */
  std::size_t size(const MultiIndex& prefix = MultiIndex()) const
  {
    return degPlus(root_.indexTree, prefix);
  }

  LocalView localView() const;

  const BasisNode& root() const { return root_; }

  //! Descend the basis tree along a path of child indices.
  const BasisNode& node(const TreePath& path) const;

  //! Largest number of shape functions any single element can carry.
  std::size_t maxLocalSize() const { return root_.localSize; }

  /** \brief Global multi-index of one shape function of one leaf on one cell.
   *
   * Realizes the leaf's entity-based numbering followed by bottom-up
   * strategy merging along the leaf's tree path.
   */
  MultiIndex dofMultiIndex(const TreePath& leafPath, std::size_t cell,
                           std::size_t shapeFunction) const;

  /** \brief Global multi-index of the leaf DOF sitting on a given entity.
   *
   * Element-independent variant of dofMultiIndex, used to enumerate DOFs
   * entity by entity (e.g. along the boundary).
   */
  MultiIndex entityDofMultiIndex(const TreePath& leafPath, EntityClass entityClass,
                                 std::size_t entity, std::size_t within) const;

private:
  MultiIndex mergeUpward(const TreePath& leafPath, MultiIndex index) const;

  const Mesh* mesh_;
  BasisDescriptor descriptor_;
  BasisNode root_;
};

//! Build a basis for the given mesh from a validated descriptor.
GlobalBasis makeBasis(const Mesh& mesh, const BasisDescriptor& descriptor);

} // namespace basisforest

#endif // BASISFOREST_GLOBAL_BASIS_HPP
