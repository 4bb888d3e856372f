#include <basisforest/global_basis.hpp>

#include <algorithm>
#include <stdexcept>

namespace basisforest {

std::size_t entityClassCount(const Mesh& mesh, EntityClass entityClass)
{
  switch (entityClass) {
  case EntityClass::Vertex:
    return mesh.numVertices();
  case EntityClass::Edge:
    return mesh.numEdges();
  case EntityClass::Cell:
    return mesh.numCells();
  }
  return 0;
}

namespace {

SubentityLayout layoutFor(unsigned degree, Continuity continuity, std::size_t feSize)
{
  if (continuity == Continuity::Discontinuous)
    return {0, 0, feSize};
  if (degree == 0)
    return {0, 0, 1};
  return {1, degree - 1, std::size_t((degree - 1) * (degree - 2) / 2)};
}

IndexTree leafIndexTree(const Mesh& mesh, const SubentityLayout& layout, LeafIndexMode mode,
                        const std::vector<EntityClass>& activeClasses)
{
  if (mode == LeafIndexMode::Flat)
    return IndexTree::uniform(layout.dimension(mesh), IndexTree::value());

  std::vector<IndexTree> classTrees;
  for (EntityClass c : activeClasses)
    classTrees.push_back(IndexTree::uniform(
        entityClassCount(mesh, c),
        IndexTree::uniform(layout.multiplicity(c), IndexTree::value())));
  if (classTrees.size() == 1)
    return classTrees[0];
  return IndexTree::nonUniform(std::move(classTrees));
}

BasisNode buildNode(const Mesh& mesh, const BasisDescriptor& descriptor, bool entityResolved)
{
  BasisNode node;
  node.kind = descriptor.kind();

  switch (descriptor.kind()) {
  case BasisDescriptor::Kind::Leaf: {
    node.finiteElement = lagrangeSimplex(descriptor.degree(), descriptor.continuity());
    node.layout =
        layoutFor(descriptor.degree(), descriptor.continuity(), node.finiteElement->size());
    node.mode = (descriptor.continuity() == Continuity::Discontinuous || entityResolved)
                    ? LeafIndexMode::EntityResolved
                    : LeafIndexMode::Flat;
    for (EntityClass c : {EntityClass::Vertex, EntityClass::Edge, EntityClass::Cell})
      if (node.layout.multiplicity(c) > 0)
        node.activeClasses.push_back(c);
    node.indexTree = leafIndexTree(mesh, node.layout, node.mode, node.activeClasses);
    node.localSize = node.finiteElement->size();
    node.leafCount = 1;
    break;
  }
  case BasisDescriptor::Kind::Power: {
    node.strategy = descriptor.strategy();
    node.exponent = descriptor.exponent();
    BasisNode child =
        buildNode(mesh, descriptor.child(0), node.strategy == MergingStrategy::BlockedByEntity);
    std::vector<IndexTree> childTrees(node.exponent, child.indexTree);
    node.indexTree = mergeTree(node.strategy, childTrees);
    node.mergeContext = makeMergeContext(node.strategy, childTrees);
    node.localSize = node.exponent * child.localSize;
    node.leafCount = node.exponent * child.leafCount;
    node.children.push_back(std::move(child));
    break;
  }
  case BasisDescriptor::Kind::Composite: {
    node.strategy = descriptor.strategy();
    std::vector<IndexTree> childTrees;
    for (std::size_t i = 0; i < descriptor.childCount(); ++i) {
      node.children.push_back(buildNode(mesh, descriptor.child(i), false));
      childTrees.push_back(node.children.back().indexTree);
      node.localSize += node.children.back().localSize;
      node.leafCount += node.children.back().leafCount;
    }
    node.indexTree = mergeTree(node.strategy, childTrees);
    node.mergeContext = makeMergeContext(node.strategy, childTrees);
    break;
  }
  }
  return node;
}

MultiIndex leafMultiIndex(const BasisNode& leaf, const Mesh& mesh, EntityClass entityClass,
                          std::size_t entity, std::size_t within)
{
  if (leaf.layout.multiplicity(entityClass) == 0 || within >= leaf.layout.multiplicity(entityClass))
    throw std::out_of_range("GlobalBasis: no such DOF on this entity class");
  if (entity >= entityClassCount(mesh, entityClass))
    throw std::out_of_range("GlobalBasis: entity index out of range");

  if (leaf.mode == LeafIndexMode::Flat) {
    std::size_t offset = 0;
    if (entityClass != EntityClass::Vertex)
      offset += mesh.numVertices() * leaf.layout.perVertex;
    if (entityClass == EntityClass::Cell)
      offset += mesh.numEdges() * leaf.layout.perEdge;
    return {offset + entity * leaf.layout.multiplicity(entityClass) + within};
  }

  if (leaf.activeClasses.size() == 1)
    return {entity, within};
  auto it = std::find(leaf.activeClasses.begin(), leaf.activeClasses.end(), entityClass);
  std::size_t slot = it - leaf.activeClasses.begin();
  return {slot, entity, within};
}

} // namespace

GlobalBasis::GlobalBasis(const Mesh& mesh, BasisDescriptor descriptor)
  : mesh_(&mesh), descriptor_(std::move(descriptor))
{
  descriptor_.validate();
  root_ = buildNode(mesh, descriptor_, false);
}

const BasisNode& GlobalBasis::node(const TreePath& path) const
{
  const BasisNode* n = &root_;
  for (std::size_t i = 0; i < path.size(); ++i)
    n = &n->child(path[i]);
  return *n;
}

MultiIndex GlobalBasis::mergeUpward(const TreePath& leafPath, MultiIndex index) const
{
  std::vector<const BasisNode*> chain;
  chain.reserve(leafPath.size());
  const BasisNode* n = &root_;
  for (std::size_t i = 0; i < leafPath.size(); ++i) {
    chain.push_back(n);
    n = &n->child(leafPath[i]);
  }
  for (std::size_t i = chain.size(); i-- > 0;)
    index = mergeIndex(chain[i]->mergeContext, leafPath[i], index);
  return index;
}

MultiIndex GlobalBasis::dofMultiIndex(const TreePath& leafPath, std::size_t cell,
                                      std::size_t shapeFunction) const
{
  const BasisNode& leaf = node(leafPath);
  if (!leaf.isLeaf())
    throw std::invalid_argument("GlobalBasis: path does not address a leaf");
  if (cell >= mesh_->numCells())
    throw std::out_of_range("GlobalBasis: cell index out of range");

  const LocalKey& key = leaf.finiteElement->localKey(shapeFunction);
  EntityClass entityClass;
  std::size_t entity;
  std::size_t within;
  switch (key.codim) {
  case 2:
    entityClass = EntityClass::Vertex;
    entity = mesh_->cellVertices(cell)[key.subEntity];
    within = key.index;
    break;
  case 1: {
    entityClass = EntityClass::Edge;
    entity = mesh_->cellEdges(cell)[key.subEntity];
    // Shared edges are numbered along the global direction from the lower
    // to the higher endpoint vertex; flip when the local direction differs.
    std::size_t a = mesh_->cellVertices(cell)[Mesh::referenceEdges[key.subEntity][0]];
    std::size_t b = mesh_->cellVertices(cell)[Mesh::referenceEdges[key.subEntity][1]];
    within = a < b ? key.index : leaf.layout.perEdge - 1 - key.index;
    break;
  }
  default:
    entityClass = EntityClass::Cell;
    entity = cell;
    within = key.index;
    break;
  }
  return mergeUpward(leafPath, leafMultiIndex(leaf, *mesh_, entityClass, entity, within));
}

MultiIndex GlobalBasis::entityDofMultiIndex(const TreePath& leafPath, EntityClass entityClass,
                                            std::size_t entity, std::size_t within) const
{
  const BasisNode& leaf = node(leafPath);
  if (!leaf.isLeaf())
    throw std::invalid_argument("GlobalBasis: path does not address a leaf");
  return mergeUpward(leafPath, leafMultiIndex(leaf, *mesh_, entityClass, entity, within));
}

GlobalBasis makeBasis(const Mesh& mesh, const BasisDescriptor& descriptor)
{
  return GlobalBasis(mesh, descriptor);
}

} // namespace basisforest
