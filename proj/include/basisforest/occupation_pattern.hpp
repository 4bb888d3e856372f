#ifndef BASISFOREST_OCCUPATION_PATTERN_HPP
#define BASISFOREST_OCCUPATION_PATTERN_HPP

#include <iosfwd>
#include <set>
#include <utility>

#include <basisforest/global_basis.hpp>

namespace basisforest {

/** \brief The structural nonzero set of a stiffness-type matrix.
 *
 * Two scalar entries couple iff their basis functions share an element.
 * Entries are stored as flat (row, column) ordinals in the container's
 * lexicographic leaf order; a block summary records the coupling of
 * first-digit blocks.  Symmetric by construction.
 */
struct OccupationPattern
{
  IndexTree shape;
  std::size_t dimension = 0;
  std::set<std::pair<std::size_t, std::size_t>> entries;
  std::set<std::pair<std::size_t, std::size_t>> blockEntries;
};

//! The shared-element coupling pattern of a basis with itself.
OccupationPattern occupationPattern(const GlobalBasis& basis);

/** \brief Write the pattern as a portable bitmap (P1 ASCII).
 *
 * One pixel per scalar matrix entry; black pixels mark potentially nonzero
 * entries.
 */
void writePbm(std::ostream& os, const OccupationPattern& pattern);

} // namespace basisforest

#endif // BASISFOREST_OCCUPATION_PATTERN_HPP
