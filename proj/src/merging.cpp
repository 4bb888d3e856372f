#include <basisforest/merging.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace basisforest {

std::string_view strategyName(MergingStrategy strategy)
{
  switch (strategy) {
  case MergingStrategy::FlatLexicographic:
    return "flatLexicographic";
  case MergingStrategy::FlatInterleaved:
    return "flatInterleaved";
  case MergingStrategy::BlockedLexicographic:
    return "blockedLexicographic";
  case MergingStrategy::BlockedInterleaved:
    return "blockedInterleaved";
  case MergingStrategy::BlockedByEntity:
    return "blockedByEntity";
  }
  return {};
}

std::optional<MergingStrategy> parseStrategy(std::string_view name)
{
  for (auto s : {MergingStrategy::FlatLexicographic, MergingStrategy::FlatInterleaved,
                 MergingStrategy::BlockedLexicographic, MergingStrategy::BlockedInterleaved,
                 MergingStrategy::BlockedByEntity})
    if (name == strategyName(s))
      return s;
  return std::nullopt;
}

bool strategyRequiresPowerNode(MergingStrategy strategy)
{
  return strategy == MergingStrategy::FlatInterleaved
      || strategy == MergingStrategy::BlockedInterleaved
      || strategy == MergingStrategy::BlockedByEntity;
}

MergeContext makeMergeContext(MergingStrategy strategy, const std::vector<IndexTree>& children)
{
  if (children.empty())
    throw std::invalid_argument("makeMergeContext: no children");

  MergeContext ctx;
  ctx.strategy = strategy;
  ctx.childCount = children.size();
  switch (strategy) {
  case MergingStrategy::FlatLexicographic: {
    ctx.firstDigitOffsets.resize(children.size());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].isValue())
        throw std::invalid_argument("flat merge: child " + std::to_string(i)
                                    + " has no leading digit");
      ctx.firstDigitOffsets[i] = offset;
      offset += children[i].degree();
    }
    break;
  }
  case MergingStrategy::BlockedByEntity:
    ctx.childTrees = children;
    break;
  default:
    break;
  }
  return ctx;
}

MultiIndex mergeIndex(const MergeContext& context, std::size_t childIndex,
                      const MultiIndex& childMultiIndex)
{
  if (childIndex >= context.childCount)
    throw std::out_of_range("mergeIndex: child index out of range");

  MultiIndex result = childMultiIndex;
  switch (context.strategy) {
  case MergingStrategy::BlockedLexicographic:
    result.pushFront(childIndex);
    break;
  case MergingStrategy::BlockedInterleaved:
    result.pushBack(childIndex);
    break;
  case MergingStrategy::FlatLexicographic:
    if (result.empty())
      throw std::invalid_argument("mergeIndex: flat merge of an empty multi-index");
    result[0] += context.firstDigitOffsets[childIndex];
    break;
  case MergingStrategy::FlatInterleaved:
    if (result.empty())
      throw std::invalid_argument("mergeIndex: flat merge of an empty multi-index");
    result[0] = result[0] * context.childCount + childIndex;
    break;
  case MergingStrategy::BlockedByEntity: {
    if (result.size() < 2)
      throw std::invalid_argument(
          "mergeIndex: entity-wise blocking needs (entity, index) multi-indices");
    MultiIndex entity = result.prefix(result.size() - 1);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < childIndex; ++j)
      offset += degPlus(context.childTrees[j], entity);
    result[result.size() - 1] += offset;
    break;
  }
  }
  return result;
}

namespace {

void requireIdenticalChildren(const std::vector<IndexTree>& children, MergingStrategy strategy)
{
  for (std::size_t i = 1; i < children.size(); ++i)
    if (!(children[i] == children[0]))
      throw std::invalid_argument(std::string(strategyName(strategy))
                                  + " requires identical children (power node)");
}

// Replace every Value leaf of `node` by `replacement`.
IndexTree replaceLeaves(const IndexTree& node, const IndexTree& replacement)
{
  if (node.isValue())
    return replacement;
  if (node.kind() == IndexTree::Kind::Uniform)
    return IndexTree::uniform(node.degree(), replaceLeaves(node.child(0), replacement));
  std::vector<IndexTree> children;
  children.reserve(node.degree());
  for (std::size_t i = 0; i < node.degree(); ++i)
    children.push_back(replaceLeaves(node.child(i), replacement));
  return IndexTree::nonUniform(std::move(children));
}

// The common sub-shape below the first digit of all children, or an error.
IndexTree commonFlatSubShape(const std::vector<IndexTree>& children)
{
  const IndexTree* common = nullptr;
  for (const IndexTree& child : children) {
    if (child.isValue())
      throw std::invalid_argument("flat merge: child has no leading digit");
    std::size_t distinct = child.kind() == IndexTree::Kind::Uniform ? 1 : child.degree();
    for (std::size_t i = 0; i < distinct; ++i) {
      const IndexTree& sub = child.child(i);
      if (common == nullptr)
        common = &sub;
      else if (!(sub == *common))
        throw std::invalid_argument(
            "flat merge: children have differing shapes below the first digit");
    }
  }
  return *common;
}

bool isFlatBlock(const IndexTree& node)
{
  if (node.isValue())
    return false;
  for (std::size_t i = 0; i < node.degree(); ++i)
    if (!node.child(i).isValue())
      return false;
  return true;
}

// Zip the children's entity skeletons, concatenating the flat per-entity
// blocks.  `topLevel` rejects trees without an entity digit.
IndexTree zipByEntity(const std::vector<const IndexTree*>& nodes, bool topLevel)
{
  bool allBlocks = std::all_of(nodes.begin(), nodes.end(),
                               [](const IndexTree* n) { return isFlatBlock(*n); });
  if (allBlocks && !topLevel) {
    std::size_t total = 0;
    for (const IndexTree* n : nodes)
      total += n->degree();
    return IndexTree::uniform(total, IndexTree::value());
  }

  std::size_t degree = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i]->isValue() || (isFlatBlock(*nodes[i]) && topLevel))
      throw std::invalid_argument(
          "entity-wise blocking needs (entity, index) leaf paths in every child");
    if (i == 0)
      degree = nodes[i]->degree();
    else if (nodes[i]->degree() != degree)
      throw std::invalid_argument("entity-wise blocking: children disagree on the entity range");
  }

  std::vector<IndexTree> merged;
  merged.reserve(degree);
  for (std::size_t e = 0; e < degree; ++e) {
    std::vector<const IndexTree*> sub;
    sub.reserve(nodes.size());
    for (const IndexTree* n : nodes)
      sub.push_back(&n->child(e));
    merged.push_back(zipByEntity(sub, false));
  }
  return IndexTree::nonUniform(std::move(merged));
}

} // namespace

IndexTree mergeTree(MergingStrategy strategy, const std::vector<IndexTree>& children)
{
  if (children.empty())
    throw std::invalid_argument("mergeTree: no children");

  switch (strategy) {
  case MergingStrategy::BlockedLexicographic:
    return IndexTree::nonUniform(children);

  case MergingStrategy::BlockedInterleaved:
    requireIdenticalChildren(children, strategy);
    return replaceLeaves(children[0],
                         IndexTree::uniform(children.size(), IndexTree::value()));

  case MergingStrategy::FlatLexicographic: {
    IndexTree sub = commonFlatSubShape(children);
    std::size_t total = 0;
    for (const IndexTree& child : children)
      total += child.degree();
    return IndexTree::uniform(total, std::move(sub));
  }

  case MergingStrategy::FlatInterleaved: {
    requireIdenticalChildren(children, strategy);
    IndexTree sub = commonFlatSubShape(children);
    return IndexTree::uniform(children[0].degree() * children.size(), std::move(sub));
  }

  case MergingStrategy::BlockedByEntity: {
    std::vector<const IndexTree*> nodes;
    nodes.reserve(children.size());
    for (const IndexTree& child : children)
      nodes.push_back(&child);
    return zipByEntity(nodes, true);
  }
  }
  throw std::logic_error("mergeTree: unhandled strategy");
}

} // namespace basisforest
