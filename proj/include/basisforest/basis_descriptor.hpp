#ifndef BASISFOREST_BASIS_DESCRIPTOR_HPP
#define BASISFOREST_BASIS_DESCRIPTOR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <basisforest/local_finite_element.hpp>
#include <basisforest/merging.hpp>

namespace basisforest {

/** \brief Declarative description of a basis tree.
 *
 * Leaves are Lagrange spaces of degree 0..3, continuous or discontinuous.
 * Power nodes replicate one child a fixed number of times; composite nodes
 * hold an ordered list of distinct children.  Every inner node carries the
 * merging strategy used to combine its children's multi-indices.
 */
class BasisDescriptor
{
public:
  enum class Kind { Leaf, Power, Composite };

  static BasisDescriptor leaf(unsigned degree, Continuity continuity);
  static BasisDescriptor power(BasisDescriptor child, std::size_t exponent,
                               MergingStrategy strategy);
  static BasisDescriptor composite(std::vector<BasisDescriptor> children,
                                   MergingStrategy strategy);

  Kind kind() const { return kind_; }
  unsigned degree() const { return degree_; }
  Continuity continuity() const { return continuity_; }
  MergingStrategy strategy() const { return strategy_; }
  std::size_t exponent() const { return exponent_; }

  //! Number of children: the exponent for power nodes, zero for leaves.
  std::size_t childCount() const;

  //! Child i; all children of a power node are the same descriptor.
  const BasisDescriptor& child(std::size_t i) const;

  //! Number of levels, counting the node itself.
  std::size_t depth() const;

  /** \brief Check the structural rules.
   *
   * Rejects degrees above 3, interleaved or entity-wise strategies outside
   * power nodes, entity-wise blocking over anything but a single continuous
   * Lagrange leaf, a discontinuous leaf directly under a flat-merging
   * parent, and trees deeper than 4 levels.
   */
  void validate() const;

  friend bool operator==(const BasisDescriptor& a, const BasisDescriptor& b);
  friend bool operator!=(const BasisDescriptor& a, const BasisDescriptor& b)
  {
    return !(a == b);
  }

private:
  BasisDescriptor() = default;

  Kind kind_ = Kind::Leaf;
  unsigned degree_ = 1;
  Continuity continuity_ = Continuity::Continuous;
  std::size_t exponent_ = 1;
  MergingStrategy strategy_ = MergingStrategy::BlockedLexicographic;
  std::vector<BasisDescriptor> children_; // power: one entry; composite: childCount()
};

//! Continuous Lagrange leaf of the given degree.
BasisDescriptor lagrange(unsigned degree);

//! Discontinuous Lagrange leaf of the given degree.
BasisDescriptor dg(unsigned degree);

BasisDescriptor power(BasisDescriptor child, std::size_t exponent, MergingStrategy strategy);

BasisDescriptor composite(std::vector<BasisDescriptor> children, MergingStrategy strategy);

//! Error raised by parseDescriptor, with the byte offset of the problem.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset)
  {
  }

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/** \brief Parse the basis DSL.
 *
 * Grammar, whitespace-insensitive:
 *
 *     node     := "lagrange(" degree ")" | "dg(" degree ")"
 *               | "power(" node "," count "," strategy ")"
 *               | "composite(" node {"," node} "," strategy ")"
 *     strategy := flatLexicographic | flatInterleaved | blockedLexicographic
 *               | blockedInterleaved | blockedByEntity
 *
 * Degrees are 0..3 and power counts at least 1.  Errors carry the byte
 * offset of the offending token.
 */
BasisDescriptor parseDescriptor(std::string_view text);

//! Canonical textual form; parseDescriptor(printDescriptor(d)) == d.
std::string printDescriptor(const BasisDescriptor& descriptor);

} // namespace basisforest

#endif // BASISFOREST_BASIS_DESCRIPTOR_HPP
