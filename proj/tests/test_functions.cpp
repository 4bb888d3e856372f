#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include <basisforest/interpolation.hpp>
#include <basisforest/discrete_function.hpp>
#include <basisforest/vtk.hpp>

using namespace basisforest;

namespace {

BasisDescriptor taylorHood()
{
  return composite({power(lagrange(2), 2, MergingStrategy::BlockedInterleaved), lagrange(1)},
                   MergingStrategy::BlockedLexicographic);
}

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

TEST_CASE("zero coefficients give the zero function")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, taylorHood());
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  DiscreteFunction f =
      makeDiscreteFunction(basis, ConstVectorBackend<double>(coeffs), 3);
  Eigen::VectorXd value = f({0.4, 0.7});
  REQUIRE(value.size() == 3);
  CHECK(value.norm() == 0.0);
}

TEST_CASE("a P1 hat function is one at its vertex and zero at the others")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, lagrange(1));
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  const std::size_t vertex = 4; // the interior vertex of the 2x2 grid
  coeffs.at({vertex}) = 1.0;

  DiscreteFunction hat = makeDiscreteFunction(basis, ConstVectorBackend<double>(coeffs), 1);
  for (std::size_t v = 0; v < mesh.numVertices(); ++v)
    CHECK(hat(mesh.vertex(v))[0] == doctest::Approx(v == vertex ? 1.0 : 0.0).epsilon(1e-13));
}

TEST_CASE("range dimension must match the leaf count")
{
  Mesh mesh = makeStructuredMesh(1, 1);
  GlobalBasis basis = makeBasis(mesh, taylorHood());
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  CHECK_THROWS_AS(makeDiscreteFunction(basis, ConstVectorBackend<double>(coeffs), 2),
                  std::invalid_argument);

  auto wrongShape = makeContainer<double>(IndexTree::uniform(22, IndexTree::value()), 0.0);
  CHECK_THROWS_AS(makeDiscreteFunction(basis, ConstVectorBackend<double>(wrongShape), 3),
                  std::invalid_argument);
}

TEST_CASE("interpolating a constant fills all coefficients")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, lagrange(1));
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  interpolate(basis, VectorBackend<double>(coeffs),
              ScalarFunction([](const Eigen::Vector2d&) { return 3.25; }));
  for (double v : coeffs.flat())
    CHECK(v == 3.25);
}

TEST_CASE("P2 interpolation reproduces quadratics everywhere")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, lagrange(2));
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  auto f = [](const Eigen::Vector2d& x) { return x.squaredNorm(); };
  interpolate(basis, VectorBackend<double>(coeffs), ScalarFunction(f));

  DiscreteFunction fh = makeDiscreteFunction(basis, ConstVectorBackend<double>(coeffs), 1);
  auto local = fh.localFunction();
  std::mt19937 rng(3);
  for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
    local.bind(cell);
    ElementGeometry geo = geometry(mesh, cell);
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::Vector2d ref = randomReferencePoint(rng);
      CHECK(local(ref)[0] == doctest::Approx(f(geo.global(ref))).epsilon(1e-12));
    }
  }
}

TEST_CASE("interpolation is exact for polynomials up to the space degree")
{
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> coeffDist(-1.0, 1.0);
  Mesh mesh = makeStructuredMesh(2, 2);

  for (unsigned k = 1; k <= 3; ++k) {
    GlobalBasis basis = makeBasis(mesh, lagrange(k));

    // Random polynomial of total degree <= k.
    std::vector<double> monomialCoeffs;
    for (unsigned t = 0; t <= k; ++t)
      for (unsigned b = 0; b <= t; ++b)
        monomialCoeffs.push_back(coeffDist(rng));
    auto poly = [&, k](const Eigen::Vector2d& p) {
      double result = 0;
      std::size_t idx = 0;
      for (unsigned t = 0; t <= k; ++t)
        for (unsigned b = 0; b <= t; ++b)
          result += monomialCoeffs[idx++] * std::pow(p.x(), t - b) * std::pow(p.y(), b);
      return result;
    };

    auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
    interpolate(basis, VectorBackend<double>(coeffs), ScalarFunction(poly));
    DiscreteFunction fh = makeDiscreteFunction(basis, ConstVectorBackend<double>(coeffs), 1);

    auto local = fh.localFunction();
    for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
      local.bind(cell);
      ElementGeometry geo = geometry(mesh, cell);
      for (int trial = 0; trial < 20; ++trial) {
        Eigen::Vector2d ref = randomReferencePoint(rng);
        CHECK(local(ref)[0] == doctest::Approx(poly(geo.global(ref))).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("velocity subspace interpolation leaves pressure untouched")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, taylorHood());
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);

  // Pre-fill with a recognizable pattern.
  for (std::size_t i = 0; i < coeffs.flat().size(); ++i)
    coeffs.flat()[i] = 100.0 + double(i);
  std::vector<double> before = coeffs.flat();

  SubspaceBasis velocity = subspaceBasis(basis, {0});
  interpolate(velocity, VectorBackend<double>(coeffs),
              VectorFunction([](const Eigen::Vector2d& x) { return x; }));

  auto paths = leafPaths(basis.containerDescriptor());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i][0] == 1)
      CHECK(coeffs.flat()[i] == before[i]); // bit-exact
    else
      CHECK(coeffs.flat()[i] != before[i]);
  }

  // The interpolated velocity field evaluates to the identity at vertices.
  DiscreteFunction vh = makeDiscreteFunction(velocity, ConstVectorBackend<double>(coeffs), 2);
  for (std::size_t v = 0; v < mesh.numVertices(); ++v) {
    Eigen::VectorXd value = vh(mesh.vertex(v));
    CHECK(value[0] == doctest::Approx(mesh.vertex(v).x()).epsilon(1e-12));
    CHECK(value[1] == doctest::Approx(mesh.vertex(v).y()).epsilon(1e-12));
  }
}

TEST_CASE("component count mismatches are rejected")
{
  Mesh mesh = makeStructuredMesh(1, 1);
  GlobalBasis basis = makeBasis(mesh, taylorHood());
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  CHECK_THROWS_AS(interpolate(basis, VectorBackend<double>(coeffs),
                              VectorFunction([](const Eigen::Vector2d& x) { return x; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(interpolate(subspaceBasis(basis, {0}), VectorBackend<double>(coeffs),
                              ScalarFunction([](const Eigen::Vector2d&) { return 1.0; })),
                  std::invalid_argument);
}

TEST_CASE("boundary DOF counts")
{
  Mesh mesh = makeStructuredMesh(1, 1);

  auto count = [&](const SubspaceBasis& basis) {
    std::size_t n = 0;
    forEachBoundaryDOF(basis, [&](const MultiIndex&) { ++n; });
    return n;
  };

  GlobalBasis p1 = makeBasis(mesh, lagrange(1));
  CHECK(count(p1) == 4); // every vertex of the single square is on the boundary

  GlobalBasis p2 = makeBasis(mesh, lagrange(2));
  CHECK(count(p2) == 8); // 4 vertices + 4 boundary edges

  GlobalBasis th = makeBasis(mesh, taylorHood());
  CHECK(count(subspaceBasis(th, {0})) == 16); // two velocity components

  GlobalBasis dg1 = makeBasis(mesh, dg(1));
  CHECK_THROWS_AS(count(dg1), std::invalid_argument);
}

TEST_CASE("boundary DOFs are reported once and lie on the boundary")
{
  Mesh mesh = makeStructuredMesh(3, 3);
  GlobalBasis basis = makeBasis(mesh, lagrange(2));
  std::set<MultiIndex> reported;
  forEachBoundaryDOF(basis, [&](const MultiIndex& index) {
    CHECK(reported.insert(index).second);
  });
  // 2*(nx+ny) boundary segments and as many boundary vertices.
  CHECK(reported.size() == 12 + 12);
}

TEST_CASE("masked interpolation writes exactly the flagged entries")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, taylorHood());
  SubspaceBasis velocity = subspaceBasis(basis, {0});

  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 0.0);
  for (std::size_t i = 0; i < coeffs.flat().size(); ++i)
    coeffs.flat()[i] = 0.5 + double(i);
  std::vector<double> before = coeffs.flat();

  auto mask = makeContainer<unsigned char>(basis.containerDescriptor(), 0);
  forEachBoundaryDOF(velocity, [&](const MultiIndex& index) { mask.at(index) = 1; });

  auto zero = VectorFunction([](const Eigen::Vector2d&) { return Eigen::Vector2d::Zero(); });
  interpolateMasked(velocity, VectorBackend<double>(coeffs), zero, mask);

  auto paths = leafPaths(basis.containerDescriptor());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (mask.flat()[i])
      CHECK(coeffs.flat()[i] == 0.0);
    else
      CHECK(coeffs.flat()[i] == before[i]); // bit-exact
  }
}

TEST_CASE("all-false masks change nothing, all-true masks equal plain interpolation")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, lagrange(2));
  auto f = ScalarFunction([](const Eigen::Vector2d& x) { return x.x() - 2.0 * x.y(); });

  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 7.0);
  auto mask = makeContainer<unsigned char>(basis.containerDescriptor(), 0);
  interpolateMasked(basis, VectorBackend<double>(coeffs), f, mask);
  for (double v : coeffs.flat())
    CHECK(v == 7.0);

  mask.fill(1);
  interpolateMasked(basis, VectorBackend<double>(coeffs), f, mask);
  auto plain = makeContainer<double>(basis.containerDescriptor(), 0.0);
  interpolate(basis, VectorBackend<double>(plain), f);
  for (std::size_t i = 0; i < coeffs.flat().size(); ++i)
    CHECK(coeffs.flat()[i] == plain.flat()[i]);
}

TEST_CASE("vtk output has points, cells, and field data")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, lagrange(1));
  auto coeffs = makeContainer<double>(basis.containerDescriptor(), 1.0);
  DiscreteFunction fh = makeDiscreteFunction(basis, ConstVectorBackend<double>(coeffs), 1);

  std::ostringstream os;
  writeVtk(os, mesh, fh, "temperature");
  std::string text = os.str();
  CHECK(text.find("POINTS 9 double") != std::string::npos);
  CHECK(text.find("CELLS 8 32") != std::string::npos);
  CHECK(text.find("SCALARS temperature double 1") != std::string::npos);
}
