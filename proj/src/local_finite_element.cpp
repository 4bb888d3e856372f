#include <basisforest/local_finite_element.hpp>

#include <cmath>
#include <stdexcept>

#include <basisforest/mesh.hpp>

namespace basisforest {

Eigen::VectorXd LocalFiniteElement::monomials(const Eigen::Vector2d& p) const
{
  Eigen::VectorXd m(exponents_.size());
  for (std::size_t j = 0; j < exponents_.size(); ++j)
    m[j] = std::pow(p.x(), exponents_[j][0]) * std::pow(p.y(), exponents_[j][1]);
  return m;
}

Eigen::VectorXd LocalFiniteElement::evaluateValues(const Eigen::Vector2d& p) const
{
  return coefficients_ * monomials(p);
}

Eigen::Matrix<double, Eigen::Dynamic, 2>
LocalFiniteElement::evaluateGradients(const Eigen::Vector2d& p) const
{
  Eigen::MatrixXd dm(exponents_.size(), 2);
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    unsigned a = exponents_[j][0];
    unsigned b = exponents_[j][1];
    dm(j, 0) = a == 0 ? 0.0 : a * std::pow(p.x(), a - 1) * std::pow(p.y(), b);
    dm(j, 1) = b == 0 ? 0.0 : b * std::pow(p.x(), a) * std::pow(p.y(), b - 1);
  }
  return coefficients_ * dm;
}

Eigen::VectorXd
LocalFiniteElement::interpolate(const std::function<double(const Eigen::Vector2d&)>& f) const
{
  Eigen::VectorXd c(size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    c[i] = f(nodes_[i]);
  return c;
}

LocalFiniteElement lagrangeSimplex(unsigned degree, Continuity continuity)
{
  if (degree > 3)
    throw std::invalid_argument("lagrangeSimplex: degree out of range, supported range is 0..3");

  LocalFiniteElement fe;
  fe.degree_ = degree;
  fe.continuity_ = continuity;

  const double k = degree;
  const std::array<Eigen::Vector2d, 3> refVertices{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0),
                                                   Eigen::Vector2d(0, 1)};

  if (degree == 0) {
    fe.nodes_.emplace_back(1.0 / 3.0, 1.0 / 3.0);
    fe.keys_.push_back({0, 0, 0});
  } else {
    for (unsigned v = 0; v < 3; ++v) {
      fe.nodes_.push_back(refVertices[v]);
      fe.keys_.push_back({2, v, 0});
    }
    for (unsigned e = 0; e < 3; ++e) {
      const Eigen::Vector2d& a = refVertices[Mesh::referenceEdges[e][0]];
      const Eigen::Vector2d& b = refVertices[Mesh::referenceEdges[e][1]];
      for (unsigned w = 1; w < degree; ++w) {
        fe.nodes_.push_back(a + (w / k) * (b - a));
        fe.keys_.push_back({1, e, w - 1});
      }
    }
    unsigned interior = 0;
    for (unsigned i = 1; i + 1 < degree; ++i) {
      for (unsigned j = 1; i + j + 1 <= degree; ++j) {
        fe.nodes_.emplace_back(i / k, j / k);
        fe.keys_.push_back({0, 0, interior++});
      }
    }
  }

  if (continuity == Continuity::Discontinuous)
    for (unsigned i = 0; i < fe.keys_.size(); ++i)
      fe.keys_[i] = {0, 0, i};

  for (unsigned t = 0; t <= degree; ++t)
    for (unsigned b = 0; b <= t; ++b)
      fe.exponents_.push_back({t - b, b});

  // Invert the point-evaluation matrix of the monomial basis; row i of the
  // inverse transpose carries the monomial coefficients of shape function i.
  const std::size_t n = fe.nodes_.size();
  Eigen::MatrixXd evaluation(n, n);
  for (std::size_t i = 0; i < n; ++i)
    evaluation.row(i) = fe.monomials(fe.nodes_[i]).transpose();
  fe.coefficients_ = evaluation.inverse().transpose();

  return fe;
}

} // namespace basisforest
