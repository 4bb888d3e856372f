#include <basisforest/occupation_pattern.hpp>

#include <ostream>
#include <vector>

#include <basisforest/local_view.hpp>

namespace basisforest {

OccupationPattern occupationPattern(const GlobalBasis& basis)
{
  OccupationPattern pattern;
  pattern.shape = basis.containerDescriptor();
  pattern.dimension = basis.dimension();

  LocalView view = basis.localView();
  std::vector<std::size_t> flat;
  for (std::size_t cell = 0; cell < basis.mesh().numCells(); ++cell) {
    view.bind(cell);
    flat.resize(view.size());
    for (std::size_t i = 0; i < view.size(); ++i)
      flat[i] = flatIndex(pattern.shape, view.index(i));
    for (std::size_t i = 0; i < view.size(); ++i)
      for (std::size_t j = 0; j < view.size(); ++j) {
        pattern.entries.emplace(flat[i], flat[j]);
        pattern.blockEntries.emplace(view.index(i)[0], view.index(j)[0]);
      }
  }
  return pattern;
}

void writePbm(std::ostream& os, const OccupationPattern& pattern)
{
  os << "P1\n" << pattern.dimension << ' ' << pattern.dimension << '\n';
  auto entry = pattern.entries.begin();
  for (std::size_t row = 0; row < pattern.dimension; ++row) {
    std::size_t lineLength = 0;
    for (std::size_t col = 0; col < pattern.dimension; ++col) {
      while (entry != pattern.entries.end()
             && (entry->first < row || (entry->first == row && entry->second < col)))
        ++entry;
      bool black = entry != pattern.entries.end() && entry->first == row && entry->second == col;
      os << (black ? '1' : '0');
      if (++lineLength == 64 || col + 1 == pattern.dimension) {
        os << '\n';
        lineLength = 0;
      }
    }
  }
}

} // namespace basisforest
