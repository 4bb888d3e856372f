#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <doctest.h>

#include <sstream>

#include <basisforest/demos.hpp>
#include <basisforest/occupation_pattern.hpp>
#include <basisforest/quadrature.hpp>

using namespace basisforest;

TEST_CASE("quadrature integrates monomials up to degree 4 exactly")
{
  // Oracle: the exact value of x^p y^q over the reference triangle is
  // p! q! / (p+q+2)!.
  auto factorial = [](int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i)
      f *= i;
    return f;
  };
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) {
      double exact = factorial(p) * factorial(q) / factorial(p + q + 2);
      double approx = 0;
      for (const QuadraturePoint& qp : triangleQuadratureOrder4())
        approx += qp.weight * std::pow(qp.point.x(), p) * std::pow(qp.point.y(), q);
      CHECK(approx == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("Poisson stiffness matrix is symmetric")
{
  Mesh mesh = makeStructuredMesh(3, 3);
  GlobalBasis basis = makeBasis(mesh, lagrange(2));
  Eigen::MatrixXd matrix = assemblePoissonMatrix(basis);
  CHECK((matrix - matrix.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("second order elements solve the quadratic problem exactly")
{
  Mesh mesh = makeStructuredMesh(4, 4);
  PoissonResult result = solvePoisson(mesh, 2);
  CHECK(result.nodalError <= 1e-8);
}

TEST_CASE("constant data reproduces the constant solution")
{
  Mesh mesh = makeStructuredMesh(4, 4);
  PoissonResult result =
      solvePoisson(mesh, 2, [](const Eigen::Vector2d&) { return 1.0; },
                   [](const Eigen::Vector2d&) { return 0.0; });
  CHECK(result.nodalError <= 1e-12);
}

TEST_CASE("first order elements converge at second order")
{
  // The quadratic test solution is reproduced exactly at the nodes by P1
  // on this mesh family (the stiffness matrix reduces to the five-point
  // stencil, which has no truncation error on quadratics), so the
  // refinement study needs a solution with nonvanishing curvature error.
  auto u = [](const Eigen::Vector2d& x) {
    return std::sin(M_PI * x.x()) * std::sin(M_PI * x.y());
  };
  auto f = [](const Eigen::Vector2d& x) {
    return 2 * M_PI * M_PI * std::sin(M_PI * x.x()) * std::sin(M_PI * x.y());
  };
  PoissonResult coarse = solvePoisson(makeStructuredMesh(4, 4), 1, u, f);
  PoissonResult fine = solvePoisson(makeStructuredMesh(8, 8), 1, u, f);
  double ratio = coarse.nodalError / fine.nodalError;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);

  // And the quadratic itself is nodally exact for P1 here.
  CHECK(solvePoisson(makeStructuredMesh(4, 4), 1).nodalError <= 1e-10);
}

TEST_CASE("Poisson report carries the demo fields")
{
  PoissonResult result = solvePoisson(makeStructuredMesh(2, 2), 1);
  std::ostringstream os;
  result.report.print(os);
  CHECK(os.str().find("nx=2") != std::string::npos);
  CHECK(os.str().find("basis=lagrange(1)") != std::string::npos);
  CHECK(os.str().find("dimension=9") != std::string::npos);
  CHECK(os.str().find("nodal_error=") != std::string::npos);
  CHECK(os.str().find("iterations=") != std::string::npos);
}

TEST_CASE("Stokes pressure-pressure block is exactly zero before pinning")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  for (VelocityBlocking blocking : {VelocityBlocking::PerComponent, VelocityBlocking::PerDof}) {
    GlobalBasis basis = makeBasis(mesh, taylorHoodDescriptor(blocking));
    Eigen::MatrixXd matrix = assembleStokesMatrix(basis);

    const IndexTree& shape = basis.containerDescriptor();
    for (const MultiIndex& row : leafPaths(shape))
      for (const MultiIndex& col : leafPaths(shape))
        if (row[0] == 1 && col[0] == 1)
          CHECK(matrix(flatIndex(shape, row), flatIndex(shape, col)) == 0.0);
  }
}

TEST_CASE("Taylor-Hood reproduces Poiseuille flow")
{
  Mesh mesh = makeStructuredMesh(4, 4);
  StokesResult result = solveStokes(mesh, VelocityBlocking::PerDof);
  CHECK(result.velocityError <= 1e-8);
  CHECK(result.pressureError <= 1e-7);
}

TEST_CASE("both velocity layouts give identical errors")
{
  Mesh mesh = makeStructuredMesh(4, 4);
  StokesResult perComponent = solveStokes(mesh, VelocityBlocking::PerComponent);
  StokesResult perDof = solveStokes(mesh, VelocityBlocking::PerDof);
  CHECK(std::abs(perComponent.velocityError - perDof.velocityError) <= 1e-12);
  CHECK(std::abs(perComponent.pressureError - perDof.pressureError) <= 1e-12);
}

TEST_CASE("oversized meshes are rejected for the dense solve")
{
  CHECK_THROWS_AS(solveStokes(makeStructuredMesh(3, 3), VelocityBlocking::PerDof, 8),
                  std::invalid_argument);
}

TEST_CASE("occupation patterns are symmetric and layout-invariant in size")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis perComponent = makeBasis(mesh, taylorHoodDescriptor(VelocityBlocking::PerComponent));
  GlobalBasis perDof = makeBasis(mesh, taylorHoodDescriptor(VelocityBlocking::PerDof));

  OccupationPattern a = occupationPattern(perComponent);
  OccupationPattern b = occupationPattern(perDof);

  for (const auto& [row, col] : a.entries)
    CHECK(a.entries.count({col, row}) == 1);

  // A layout change permutes the pattern without changing its size.
  CHECK(a.dimension == b.dimension);
  CHECK(a.entries.size() == b.entries.size());
  CHECK(a.entries != b.entries);

  // At first-digit resolution, velocity and pressure couple everywhere.
  std::set<std::pair<std::size_t, std::size_t>> fullBlocks{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(a.blockEntries == fullBlocks);
  CHECK(b.blockEntries == fullBlocks);
}

TEST_CASE("the interleaved layout couples whole velocity blocks")
{
  Mesh mesh = makeStructuredMesh(2, 2);
  GlobalBasis basis = makeBasis(mesh, taylorHoodDescriptor(VelocityBlocking::PerDof));
  OccupationPattern pattern = occupationPattern(basis);

  // Scalar P2 DOFs j, j' couple either with a full 2x2 component block or
  // not at all.
  const IndexTree& shape = basis.containerDescriptor();
  std::size_t p2Count = degPlus(shape, {0});
  for (std::size_t j = 0; j < p2Count; ++j)
    for (std::size_t jp = 0; jp < p2Count; ++jp) {
      int present = 0;
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t cp = 0; cp < 2; ++cp)
          present += pattern.entries.count({flatIndex(shape, {0, j, c}),
                                            flatIndex(shape, {0, jp, cp})});
      CHECK((present == 0 || present == 4));
    }
}

TEST_CASE("pbm output is a well-formed bitmap")
{
  Mesh mesh = makeStructuredMesh(1, 1);
  GlobalBasis basis = makeBasis(mesh, lagrange(1));
  OccupationPattern pattern = occupationPattern(basis);

  std::ostringstream os;
  writePbm(os, pattern);
  std::istringstream in(os.str());
  std::string magic;
  std::size_t width, height;
  in >> magic >> width >> height;
  CHECK(magic == "P1");
  CHECK(width == 4);
  CHECK(height == 4);
  std::size_t black = 0, total = 0;
  char pixel;
  while (in >> pixel) {
    CHECK((pixel == '0' || pixel == '1'));
    black += pixel == '1';
    ++total;
  }
  CHECK(total == 16);
  // On the single split square only the two diagonal-opposite corners do
  // not interact.
  CHECK(black == 14);
  CHECK(black == pattern.entries.size());
}
