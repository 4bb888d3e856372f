#ifndef BASISFOREST_MESH_HPP
#define BASISFOREST_MESH_HPP

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace basisforest {

/** \brief Affine map from the reference triangle to a world triangle.
 *
 * The reference triangle is {(x,y) : x,y >= 0, x+y <= 1} with vertices
 * (0,0), (1,0), (0,1).  The Jacobian is constant and orientation
 * preserving.
 */
class ElementGeometry
{
public:
  ElementGeometry(const Eigen::Vector2d& v0, const Eigen::Vector2d& v1, const Eigen::Vector2d& v2);

  //! Map a reference point to world coordinates.
  Eigen::Vector2d global(const Eigen::Vector2d& ref) const { return origin_ + jacobian_ * ref; }

  //! Map a world point back to reference coordinates.
  Eigen::Vector2d local(const Eigen::Vector2d& world) const
  {
    return inverse_ * (world - origin_);
  }

  const Eigen::Matrix2d& jacobian() const { return jacobian_; }
  double jacobianDeterminant() const { return determinant_; }

private:
  Eigen::Vector2d origin_;
  Eigen::Matrix2d jacobian_;
  Eigen::Matrix2d inverse_;
  double determinant_;
};

/** \brief Conforming triangle mesh of the unit square.
 *
 * Entities are indexed consecutively and zero-based per codimension:
 * cells (codim 0), edges (codim 1), vertices (codim 2).  Edges store their
 * endpoint vertices in ascending order and know their one or two incident
 * cells; edges with exactly one incident cell form the boundary.
 *
 * The mesh is immutable after construction and safe for concurrent reads.
 */
class Mesh
{
public:
  //! Vertex pairs of the reference triangle's edges, in local edge order.
  static constexpr std::array<std::array<std::size_t, 2>, 3> referenceEdges{
      {{0, 1}, {0, 2}, {1, 2}}};

  std::size_t numVertices() const { return vertices_.size(); }
  std::size_t numEdges() const { return edgeVertices_.size(); }
  std::size_t numCells() const { return cellVertices_.size(); }

  const Eigen::Vector2d& vertex(std::size_t v) const { return vertices_.at(v); }

  //! The three vertex indices of a cell, counterclockwise.
  const std::array<std::size_t, 3>& cellVertices(std::size_t c) const
  {
    return cellVertices_.at(c);
  }

  //! The three edge indices of a cell, ordered like referenceEdges.
  const std::array<std::size_t, 3>& cellEdges(std::size_t c) const { return cellEdges_.at(c); }

  //! The two endpoint vertices of an edge, ascending.
  const std::array<std::size_t, 2>& edgeVertices(std::size_t e) const
  {
    return edgeVertices_.at(e);
  }

  std::size_t edgeCellCount(std::size_t e) const { return edgeCellCount_.at(e); }
  std::size_t edgeCell(std::size_t e, std::size_t i) const;

  bool isBoundaryEdge(std::size_t e) const { return edgeCellCount(e) == 1; }

  //! Grid resolution the mesh was built with.
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }

  friend Mesh makeStructuredMesh(std::size_t nx, std::size_t ny);

private:
  Mesh() = default;

  std::vector<Eigen::Vector2d> vertices_;
  std::vector<std::array<std::size_t, 3>> cellVertices_;
  std::vector<std::array<std::size_t, 3>> cellEdges_;
  std::vector<std::array<std::size_t, 2>> edgeVertices_;
  std::vector<std::array<std::size_t, 2>> edgeCells_;
  std::vector<std::size_t> edgeCellCount_;
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
};

/** \brief Triangulate the unit square into an nx-by-ny grid of squares,
 * each split along the diagonal from its lower-left to its upper-right
 * corner.
 *
 * Vertices are ordered lexicographically by (y,x); cells row-major with
 * the lower triangle before the upper one; edges by first appearance in a
 * sweep over cells and their local edges.
 */
Mesh makeStructuredMesh(std::size_t nx, std::size_t ny);

//! Number of entities of the given codimension (0 cells, 1 edges, 2 vertices).
std::size_t entityCount(const Mesh& mesh, unsigned codim);

//! Affine geometry of a cell; reference vertices map to the stored cell vertices.
ElementGeometry geometry(const Mesh& mesh, std::size_t cell);

//! Indices of all edges with exactly one incident cell, ascending.
std::vector<std::size_t> boundaryEdges(const Mesh& mesh);

} // namespace basisforest

#endif // BASISFOREST_MESH_HPP
