#include <basisforest/mesh.hpp>

#include <map>
#include <stdexcept>

namespace basisforest {

ElementGeometry::ElementGeometry(const Eigen::Vector2d& v0, const Eigen::Vector2d& v1,
                                 const Eigen::Vector2d& v2)
  : origin_(v0)
{
  jacobian_.col(0) = v1 - v0;
  jacobian_.col(1) = v2 - v0;
  determinant_ = jacobian_.determinant();
  if (determinant_ <= 0.0)
    throw std::invalid_argument("ElementGeometry: degenerate or inverted triangle");
  inverse_ = jacobian_.inverse();
}

std::size_t Mesh::edgeCell(std::size_t e, std::size_t i) const
{
  if (i >= edgeCellCount_.at(e))
    throw std::out_of_range("Mesh: edge has fewer incident cells");
  return edgeCells_[e][i];
}

Mesh makeStructuredMesh(std::size_t nx, std::size_t ny)
{
  if (nx == 0 || ny == 0)
    throw std::invalid_argument("makeStructuredMesh: nx and ny must be positive");

  Mesh mesh;
  mesh.nx_ = nx;
  mesh.ny_ = ny;

  mesh.vertices_.reserve((nx + 1) * (ny + 1));
  for (std::size_t iy = 0; iy <= ny; ++iy)
    for (std::size_t ix = 0; ix <= nx; ++ix)
      mesh.vertices_.emplace_back(double(ix) / double(nx), double(iy) / double(ny));

  auto vertexIndex = [nx](std::size_t ix, std::size_t iy) { return iy * (nx + 1) + ix; };

  mesh.cellVertices_.reserve(2 * nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      std::size_t ll = vertexIndex(ix, iy);
      std::size_t lr = vertexIndex(ix + 1, iy);
      std::size_t ul = vertexIndex(ix, iy + 1);
      std::size_t ur = vertexIndex(ix + 1, iy + 1);
      mesh.cellVertices_.push_back({ll, lr, ur}); // lower triangle
      mesh.cellVertices_.push_back({ll, ur, ul}); // upper triangle
    }
  }

  std::map<std::array<std::size_t, 2>, std::size_t> edgeIndex;
  mesh.cellEdges_.resize(mesh.cellVertices_.size());
  for (std::size_t c = 0; c < mesh.cellVertices_.size(); ++c) {
    const auto& cv = mesh.cellVertices_[c];
    for (std::size_t le = 0; le < 3; ++le) {
      std::size_t a = cv[Mesh::referenceEdges[le][0]];
      std::size_t b = cv[Mesh::referenceEdges[le][1]];
      std::array<std::size_t, 2> key{std::min(a, b), std::max(a, b)};
      auto [it, inserted] = edgeIndex.try_emplace(key, mesh.edgeVertices_.size());
      if (inserted) {
        mesh.edgeVertices_.push_back(key);
        mesh.edgeCells_.push_back({c, 0});
        mesh.edgeCellCount_.push_back(1);
      } else {
        std::size_t e = it->second;
        if (mesh.edgeCellCount_[e] == 2)
          throw std::logic_error("makeStructuredMesh: edge in more than two cells");
        mesh.edgeCells_[e][1] = c;
        mesh.edgeCellCount_[e] = 2;
      }
      mesh.cellEdges_[c][le] = it->second;
    }
  }

  return mesh;
}

std::size_t entityCount(const Mesh& mesh, unsigned codim)
{
  switch (codim) {
  case 0:
    return mesh.numCells();
  case 1:
    return mesh.numEdges();
  case 2:
    return mesh.numVertices();
  default:
    throw std::invalid_argument("entityCount: codimension must be 0, 1, or 2");
  }
}

ElementGeometry geometry(const Mesh& mesh, std::size_t cell)
{
  const auto& cv = mesh.cellVertices(cell);
  return ElementGeometry(mesh.vertex(cv[0]), mesh.vertex(cv[1]), mesh.vertex(cv[2]));
}

std::vector<std::size_t> boundaryEdges(const Mesh& mesh)
{
  std::vector<std::size_t> result;
  for (std::size_t e = 0; e < mesh.numEdges(); ++e)
    if (mesh.isBoundaryEdge(e))
      result.push_back(e);
  return result;
}

} // namespace basisforest
