#include <basisforest/vtk.hpp>

#include <ostream>

namespace basisforest {

void writeVtk(std::ostream& os, const Mesh& mesh, const DiscreteFunction& function,
              const std::string& fieldName)
{
  os << "# vtk DataFile Version 3.0\n"
     << fieldName << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";

  os << "POINTS " << mesh.numVertices() << " double\n";
  for (std::size_t v = 0; v < mesh.numVertices(); ++v)
    os << mesh.vertex(v).x() << ' ' << mesh.vertex(v).y() << " 0\n";

  os << "CELLS " << mesh.numCells() << ' ' << 4 * mesh.numCells() << '\n';
  for (std::size_t c = 0; c < mesh.numCells(); ++c) {
    const auto& cv = mesh.cellVertices(c);
    os << "3 " << cv[0] << ' ' << cv[1] << ' ' << cv[2] << '\n';
  }

  os << "CELL_TYPES " << mesh.numCells() << '\n';
  for (std::size_t c = 0; c < mesh.numCells(); ++c)
    os << "5\n";

  os << "POINT_DATA " << mesh.numVertices() << '\n';
  if (function.rangeDimension() == 1) {
    os << "SCALARS " << fieldName << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t v = 0; v < mesh.numVertices(); ++v)
      os << function(mesh.vertex(v))[0] << '\n';
  } else {
    os << "VECTORS " << fieldName << " double\n";
    for (std::size_t v = 0; v < mesh.numVertices(); ++v) {
      Eigen::VectorXd value = function(mesh.vertex(v));
      for (int i = 0; i < 3; ++i)
        os << (i < value.size() ? value[i] : 0.0) << (i < 2 ? ' ' : '\n');
    }
  }
}

} // namespace basisforest
