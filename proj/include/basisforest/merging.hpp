#ifndef BASISFOREST_MERGING_HPP
#define BASISFOREST_MERGING_HPP

#include <optional>
#include <string_view>
#include <vector>

#include <basisforest/index_tree.hpp>
#include <basisforest/multi_index.hpp>

namespace basisforest {

/** \brief Rule that builds a parent node's multi-indices from its children's.
 *
 * Blocked strategies add a digit (the child index, prepended or appended);
 * flat strategies rewrite the first digit only.  The interleaved variants
 * and the entity-wise blocking are only meaningful on power nodes, i.e.
 * nodes whose children are identical and identically indexed.
 */
enum class MergingStrategy {
  FlatLexicographic,
  FlatInterleaved,
  BlockedLexicographic,
  BlockedInterleaved,
  BlockedByEntity
};

//! Canonical name as used in the basis DSL, e.g. "blockedInterleaved".
std::string_view strategyName(MergingStrategy strategy);

//! Inverse of strategyName; empty for unknown names.
std::optional<MergingStrategy> parseStrategy(std::string_view name);

//! True for strategies that are only defined on power nodes.
bool strategyRequiresPowerNode(MergingStrategy strategy);

/** \brief Per-node data consumed by mergeIndex.
 *
 * Which fields are meaningful depends on the strategy:
 *  - FlatLexicographic: firstDigitOffsets[i] is the first-digit offset L_i,
 *    i.e. the sum of the root degrees of children 0..i-1.
 *  - FlatInterleaved: childCount is the stride m.
 *  - BlockedByEntity: childTrees holds the children's index trees; the
 *    entity-local offset of child i at entity prefix E is the sum of
 *    degPlus(childTrees[j], E) over j < i.
 */
struct MergeContext
{
  MergingStrategy strategy = MergingStrategy::BlockedLexicographic;
  std::size_t childCount = 0;
  std::vector<std::size_t> firstDigitOffsets;
  std::vector<IndexTree> childTrees;
};

//! Builds the context mergeIndex needs for the given strategy and children.
MergeContext makeMergeContext(MergingStrategy strategy, const std::vector<IndexTree>& children);

/** \brief Transform one child multi-index into a parent multi-index.
 *
 * Implements, per strategy:
 *  - BlockedLexicographic: (i, childIndex...)
 *  - BlockedInterleaved:   (childIndex..., i)
 *  - FlatLexicographic:    first digit + L_i
 *  - FlatInterleaved:      first digit * m + i
 *  - BlockedByEntity:      last digit + entity-local offset of child i
 *
 * Throws for an empty child index under a flat strategy, and for a child
 * index shorter than two digits under entity-wise blocking.
 */
MultiIndex mergeIndex(const MergeContext& context, std::size_t childIndex,
                      const MultiIndex& childMultiIndex);

/** \brief The index tree whose leaf paths are the merged child leaf paths.
 *
 * The result always satisfies the index-tree property.  Incompatible
 * children are rejected: flat strategies require every merged sub-shape
 * below the first digit to be structurally identical, the interleaved
 * strategies require identical children, and entity-wise blocking requires
 * children sharing one entity skeleton with flat per-entity blocks.
 */
IndexTree mergeTree(MergingStrategy strategy, const std::vector<IndexTree>& children);

} // namespace basisforest

#endif // BASISFOREST_MERGING_HPP
