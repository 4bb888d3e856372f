#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <basisforest/local_finite_element.hpp>

using namespace basisforest;

namespace {

// Uniformly random point inside the reference triangle.
Eigen::Vector2d randomReferencePoint(std::mt19937& rng)
{
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double x = dist(rng);
  double y = dist(rng);
  if (x + y > 1.0) {
    x = 1.0 - x;
    y = 1.0 - y;
  }
  return {x, y};
}

} // namespace

TEST_CASE("sizes follow the triangle formula")
{
  for (unsigned k = 0; k <= 3; ++k)
    CHECK(lagrangeSimplex(k).size() == (k + 1) * (k + 2) / 2);
  CHECK(lagrangeSimplex(2).size() == 6);
  CHECK_THROWS_AS(lagrangeSimplex(4), std::invalid_argument);
}

TEST_CASE("degree zero has a single cell DOF")
{
  LocalFiniteElement fe = lagrangeSimplex(0);
  CHECK(fe.size() == 1);
  CHECK(fe.localKey(0) == LocalKey{0, 0, 0});
  CHECK(fe.evaluateValues({0.3, 0.2})[0] == doctest::Approx(1.0));
}

TEST_CASE("local key counts per subentity")
{
  for (unsigned k = 1; k <= 3; ++k) {
    LocalFiniteElement fe = lagrangeSimplex(k);
    std::size_t onVertices = 0, onEdges = 0, onCell = 0;
    for (std::size_t i = 0; i < fe.size(); ++i) {
      const LocalKey& key = fe.localKey(i);
      if (key.codim == 2) {
        ++onVertices;
        CHECK(key.subEntity < 3);
        CHECK(key.index == 0);
      } else if (key.codim == 1) {
        ++onEdges;
        CHECK(key.subEntity < 3);
        CHECK(key.index < k - 1);
      } else {
        ++onCell;
        CHECK(key.subEntity == 0);
      }
    }
    CHECK(onVertices == 3);
    CHECK(onEdges == 3 * (k - 1));
    CHECK(onCell == (k - 1) * (k - 2) / 2);
  }
}

TEST_CASE("keys are unique triples")
{
  for (unsigned k = 0; k <= 3; ++k)
    for (Continuity c : {Continuity::Continuous, Continuity::Discontinuous}) {
      LocalFiniteElement fe = lagrangeSimplex(k, c);
      for (std::size_t i = 0; i < fe.size(); ++i)
        for (std::size_t j = i + 1; j < fe.size(); ++j)
          CHECK(!(fe.localKey(i) == fe.localKey(j)));
    }
}

TEST_CASE("discontinuous elements put every DOF on the cell")
{
  LocalFiniteElement fe = lagrangeSimplex(2, Continuity::Discontinuous);
  for (std::size_t i = 0; i < fe.size(); ++i) {
    CHECK(fe.localKey(i).codim == 0);
    CHECK(fe.localKey(i).index == i);
  }
}

TEST_CASE("first order values are barycentric coordinates")
{
  LocalFiniteElement fe = lagrangeSimplex(1);
  Eigen::VectorXd atOrigin = fe.evaluateValues({0, 0});
  CHECK(atOrigin[0] == doctest::Approx(1.0));
  CHECK(atOrigin[1] == doctest::Approx(0.0));
  CHECK(atOrigin[2] == doctest::Approx(0.0));

  Eigen::VectorXd atBarycenter = fe.evaluateValues({1.0 / 3.0, 1.0 / 3.0});
  for (int i = 0; i < 3; ++i)
    CHECK(atBarycenter[i] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("nodal property at every node")
{
  for (unsigned k = 1; k <= 3; ++k) {
    LocalFiniteElement fe = lagrangeSimplex(k);
    for (std::size_t i = 0; i < fe.size(); ++i) {
      Eigen::VectorXd values = fe.evaluateValues(fe.node(i));
      for (std::size_t j = 0; j < fe.size(); ++j)
        CHECK(values[j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("partition of unity at random interior points")
{
  std::mt19937 rng(7);
  for (unsigned k = 1; k <= 3; ++k) {
    LocalFiniteElement fe = lagrangeSimplex(k);
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Vector2d p = randomReferencePoint(rng);
      CHECK(fe.evaluateValues(p).sum() == doctest::Approx(1.0).epsilon(1e-12));
      Eigen::Matrix<double, Eigen::Dynamic, 2> grads = fe.evaluateGradients(p);
      CHECK(grads.col(0).sum() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(grads.col(1).sum() == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("first order gradients are constant")
{
  LocalFiniteElement fe = lagrangeSimplex(1);
  Eigen::MatrixXd grads = fe.evaluateGradients({0.37, 0.21});
  CHECK(grads(0, 0) == doctest::Approx(-1.0));
  CHECK(grads(0, 1) == doctest::Approx(-1.0));
  CHECK(grads(1, 0) == doctest::Approx(1.0));
  CHECK(grads(1, 1) == doctest::Approx(0.0));
  CHECK(grads(2, 0) == doctest::Approx(0.0));
  CHECK(grads(2, 1) == doctest::Approx(1.0));
}

TEST_CASE("gradients match central finite differences")
{
  std::mt19937 rng(11);
  const double h = 1e-5;
  for (unsigned k = 1; k <= 3; ++k) {
    LocalFiniteElement fe = lagrangeSimplex(k);
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::Vector2d p = 0.5 * randomReferencePoint(rng) + Eigen::Vector2d(0.2, 0.2);
      Eigen::MatrixXd grads = fe.evaluateGradients(p);
      for (int d = 0; d < 2; ++d) {
        Eigen::Vector2d step = Eigen::Vector2d::Zero();
        step[d] = h;
        Eigen::VectorXd fd =
            (fe.evaluateValues(p + step) - fe.evaluateValues(p - step)) / (2 * h);
        for (std::size_t i = 0; i < fe.size(); ++i)
          CHECK(grads(i, d) == doctest::Approx(fd[i]).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("nodal interpolation")
{
  LocalFiniteElement p1 = lagrangeSimplex(1);
  Eigen::VectorXd constant = p1.interpolate([](const Eigen::Vector2d&) { return 7.0; });
  for (int i = 0; i < 3; ++i)
    CHECK(constant[i] == doctest::Approx(7.0));

  LocalFiniteElement p2 = lagrangeSimplex(2);
  Eigen::VectorXd linear = p2.interpolate([](const Eigen::Vector2d& p) { return p.x(); });
  for (std::size_t i = 0; i < p2.size(); ++i)
    CHECK(linear[i] == doctest::Approx(p2.node(i).x()));

  // Interpolating shape function j recovers the unit coefficient vector.
  for (std::size_t j = 0; j < p2.size(); ++j) {
    Eigen::VectorXd coeffs =
        p2.interpolate([&](const Eigen::Vector2d& p) { return p2.evaluateValues(p)[j]; });
    for (std::size_t i = 0; i < p2.size(); ++i)
      CHECK(coeffs[i] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
  }
}

TEST_CASE("interpolation is the identity on the span")
{
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (unsigned k = 1; k <= 3; ++k) {
    LocalFiniteElement fe = lagrangeSimplex(k);
    Eigen::VectorXd coeffs(fe.size());
    for (std::size_t i = 0; i < fe.size(); ++i)
      coeffs[i] = dist(rng);
    Eigen::VectorXd recovered = fe.interpolate(
        [&](const Eigen::Vector2d& p) { return coeffs.dot(fe.evaluateValues(p)); });
    for (std::size_t i = 0; i < fe.size(); ++i)
      CHECK(recovered[i] == doctest::Approx(coeffs[i]).epsilon(1e-12));
  }
}
