#include <basisforest/index_tree.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace basisforest {

IndexTree IndexTree::nonUniform(std::vector<IndexTree> children)
{
  if (children.empty())
    throw std::invalid_argument("IndexTree: non-uniform node needs at least one child");

  bool allEqual = std::all_of(children.begin(), children.end(),
                              [&](const IndexTree& c) { return c == children.front(); });
  if (allEqual)
    return uniform(children.size(), std::move(children.front()));

  IndexTree t;
  t.kind_ = Kind::NonUniform;
  t.childLeafOffsets_.resize(children.size() + 1);
  t.childLeafOffsets_[0] = 0;
  for (std::size_t i = 0; i < children.size(); ++i)
    t.childLeafOffsets_[i + 1] = t.childLeafOffsets_[i] + children[i].leafCount_;
  t.leafCount_ = t.childLeafOffsets_.back();
  t.children_ = std::move(children);
  return t;
}

std::size_t IndexTree::leafOffset(std::size_t i) const
{
  if (kind_ == Kind::Uniform)
    return i * children_[0].leafCount_;
  if (kind_ == Kind::NonUniform)
    return childLeafOffsets_[i];
  throw std::logic_error("IndexTree: leafOffset on a Value node");
}

const IndexTree& IndexTree::nodeAt(const MultiIndex& prefix) const
{
  const IndexTree* node = this;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (node->isValue())
      throw std::out_of_range("IndexTree: prefix " + prefix.str() + " descends past a leaf");
    if (prefix[i] >= node->degree())
      throw std::out_of_range("IndexTree: prefix " + prefix.str() + " not present in tree");
    node = &node->child(prefix[i]);
  }
  return *node;
}

bool operator==(const IndexTree& a, const IndexTree& b)
{
  if (a.kind_ != b.kind_)
    return false;
  switch (a.kind_) {
  case IndexTree::Kind::Value:
    return true;
  case IndexTree::Kind::Uniform:
    return a.count_ == b.count_ && a.children_[0] == b.children_[0];
  case IndexTree::Kind::NonUniform:
    return a.children_ == b.children_;
  }
  return false;
}

std::string IndexTree::str() const
{
  switch (kind_) {
  case Kind::Value:
    return "*";
  case Kind::Uniform: {
    std::ostringstream os;
    os << '[' << count_ << " x " << children_[0].str() << ']';
    return os.str();
  }
  case Kind::NonUniform: {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i > 0)
        os << ", ";
      os << children_[i].str();
    }
    os << ')';
    return os.str();
  }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const IndexTree& tree)
{
  return os << tree.str();
}

std::size_t degPlus(const IndexTree& tree, const MultiIndex& prefix)
{
  const IndexTree& node = tree.nodeAt(prefix);
  if (node.isValue())
    throw std::invalid_argument("degPlus: prefix " + prefix.str() + " addresses a leaf");
  return node.degree();
}

namespace {

void collectLeafPaths(const IndexTree& node, MultiIndex& current, std::vector<MultiIndex>& out)
{
  if (node.isValue()) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < node.degree(); ++i) {
    current.pushBack(i);
    collectLeafPaths(node.child(i), current, out);
    current.popBack();
  }
}

} // namespace

std::vector<MultiIndex> leafPaths(const IndexTree& tree)
{
  std::vector<MultiIndex> out;
  out.reserve(tree.leafCount());
  MultiIndex current;
  collectLeafPaths(tree, current, out);
  return out;
}

std::size_t flatIndex(const IndexTree& tree, const MultiIndex& leafPath)
{
  const IndexTree* node = &tree;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < leafPath.size(); ++i) {
    if (node->isValue())
      throw std::out_of_range("flatIndex: " + leafPath.str() + " descends past a leaf");
    if (leafPath[i] >= node->degree())
      throw std::out_of_range("flatIndex: " + leafPath.str() + " has a digit out of range");
    offset += node->leafOffset(leafPath[i]);
    node = &node->child(leafPath[i]);
  }
  if (!node->isValue())
    throw std::out_of_range("flatIndex: " + leafPath.str() + " addresses a block, not a scalar");
  return offset;
}

namespace {

// Checks one trie node given the sorted, deduplicated range [begin, end) of
// paths and the depth of the shared prefix.
bool validNode(const std::vector<MultiIndex>& paths, std::size_t begin, std::size_t end,
               std::size_t depth)
{
  // A path ending here makes this node a member; then it must be the only one,
  // otherwise the member is a strict prefix of another member.
  if (paths[begin].size() == depth)
    return begin + 1 == end;

  std::size_t expectedDigit = 0;
  std::size_t i = begin;
  while (i < end) {
    std::size_t digit = paths[i][depth];
    if (digit != expectedDigit)
      return false; // children not consecutive from zero
    std::size_t j = i;
    while (j < end && paths[j][depth] == digit)
      ++j;
    if (!validNode(paths, i, j, depth + 1))
      return false;
    ++expectedDigit;
    i = j;
  }
  return true;
}

} // namespace

bool isValidIndexTree(const std::vector<MultiIndex>& paths)
{
  if (paths.empty())
    return true;
  std::vector<MultiIndex> sorted(paths);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return validNode(sorted, 0, sorted.size(), 0);
}

} // namespace basisforest
