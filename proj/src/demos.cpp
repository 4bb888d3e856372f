#include <basisforest/demos.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>

#include <basisforest/local_view.hpp>
#include <basisforest/quadrature.hpp>
#include <basisforest/subspace_basis.hpp>

namespace basisforest {

void DemoReport::set(const std::string& key, const std::string& value)
{
  fields.emplace_back(key, value);
}

void DemoReport::set(const std::string& key, std::size_t value)
{
  fields.emplace_back(key, std::to_string(value));
}

void DemoReport::set(const std::string& key, double value)
{
  std::ostringstream os;
  os << std::setprecision(12) << std::scientific << value;
  fields.emplace_back(key, os.str());
}

void DemoReport::print(std::ostream& os) const
{
  for (const auto& [key, value] : fields)
    os << key << '=' << value << '\n';
}

Eigen::MatrixXd assemblePoissonMatrix(const GlobalBasis& basis)
{
  const Mesh& mesh = basis.mesh();
  const IndexTree& shape = basis.containerDescriptor();
  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(basis.dimension(), basis.dimension());

  LocalView view = basis.localView();
  for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
    view.bind(cell);
    ElementGeometry geo = geometry(mesh, cell);
    Eigen::Matrix2d jacobianInverse = geo.jacobian().inverse();
    const LocalFiniteElement& fe = view.tree().finiteElement();

    Eigen::MatrixXd elementMatrix = Eigen::MatrixXd::Zero(view.size(), view.size());
    for (const QuadraturePoint& qp : triangleQuadratureOrder4()) {
      Eigen::MatrixXd grads = fe.evaluateGradients(qp.point) * jacobianInverse;
      elementMatrix += qp.weight * geo.jacobianDeterminant() * grads * grads.transpose();
    }

    for (std::size_t i = 0; i < view.size(); ++i)
      for (std::size_t j = 0; j < view.size(); ++j)
        matrix(flatIndex(shape, view.index(i)), flatIndex(shape, view.index(j))) +=
            elementMatrix(i, j);
  }
  return matrix;
}

Eigen::VectorXd assemblePoissonLoad(const GlobalBasis& basis, const ScalarFunction& f)
{
  const Mesh& mesh = basis.mesh();
  const IndexTree& shape = basis.containerDescriptor();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(basis.dimension());

  LocalView view = basis.localView();
  for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
    view.bind(cell);
    ElementGeometry geo = geometry(mesh, cell);
    const LocalFiniteElement& fe = view.tree().finiteElement();

    Eigen::VectorXd elementLoad = Eigen::VectorXd::Zero(view.size());
    for (const QuadraturePoint& qp : triangleQuadratureOrder4()) {
      Eigen::VectorXd values = fe.evaluateValues(qp.point);
      elementLoad +=
          qp.weight * geo.jacobianDeterminant() * f(geo.global(qp.point)) * values;
    }

    for (std::size_t i = 0; i < view.size(); ++i)
      load[flatIndex(shape, view.index(i))] += elementLoad[i];
  }
  return load;
}

namespace {

// Symmetric Dirichlet elimination: move known values to the right-hand
// side, then put identity rows/columns on the constrained unknowns.
void eliminateConstraints(Eigen::MatrixXd& matrix, Eigen::VectorXd& rhs,
                          const std::vector<std::size_t>& constrained,
                          const Eigen::VectorXd& values)
{
  Eigen::VectorXd constrainedValues = Eigen::VectorXd::Zero(rhs.size());
  for (std::size_t b : constrained)
    constrainedValues[b] = values[b];
  rhs -= matrix * constrainedValues;
  for (std::size_t b : constrained) {
    matrix.row(b).setZero();
    matrix.col(b).setZero();
    matrix(b, b) = 1.0;
    rhs[b] = values[b];
  }
}

std::vector<std::size_t> maskedFlats(const MaskContainer& mask)
{
  std::vector<std::size_t> flats;
  for (std::size_t i = 0; i < mask.flat().size(); ++i)
    if (mask.flat()[i])
      flats.push_back(i);
  return flats;
}

} // namespace

PoissonResult solvePoisson(const Mesh& mesh, unsigned degree, const ScalarFunction& exactSolution,
                           const ScalarFunction& rightHandSide)
{
  GlobalBasis basis = makeBasis(mesh, lagrange(degree));
  const IndexTree& shape = basis.containerDescriptor();

  Eigen::MatrixXd matrix = assemblePoissonMatrix(basis);
  Eigen::VectorXd rhs = assemblePoissonLoad(basis, rightHandSide);

  auto solution = makeContainer<double>(shape, 0.0);
  auto boundary = makeContainer<unsigned char>(shape, 0);
  forEachBoundaryDOF(basis, [&](const MultiIndex& index) { boundary.at(index) = 1; });
  interpolateMasked(basis, VectorBackend<double>(solution), exactSolution, boundary);

  Eigen::VectorXd values =
      Eigen::Map<const Eigen::VectorXd>(solution.flat().data(), solution.flat().size());
  eliminateConstraints(matrix, rhs, maskedFlats(boundary), values);

  Eigen::ConjugateGradient<Eigen::MatrixXd, Eigen::Lower | Eigen::Upper> solver;
  solver.setTolerance(1e-12);
  solver.setMaxIterations(Eigen::Index(10 * basis.dimension()));
  solver.compute(matrix);
  Eigen::VectorXd x = solver.solve(rhs);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("solvePoisson: conjugate gradients did not converge; "
                             "the assembled system looks singular");

  for (std::size_t i = 0; i < solution.flat().size(); ++i)
    solution.flat()[i] = x[i];

  auto interpolated = makeContainer<double>(shape, 0.0);
  interpolate(basis, VectorBackend<double>(interpolated), exactSolution);
  double error = 0;
  for (std::size_t i = 0; i < solution.flat().size(); ++i)
    error = std::max(error, std::abs(solution.flat()[i] - interpolated.flat()[i]));

  PoissonResult result{DemoReport{}, std::move(basis), std::move(solution), error,
                       std::size_t(solver.iterations())};
  result.report.set("demo", std::string("poisson"));
  result.report.set("nx", mesh.nx());
  result.report.set("ny", mesh.ny());
  result.report.set("basis", printDescriptor(result.basis.descriptor()));
  result.report.set("dimension", result.basis.dimension());
  result.report.set("solver", std::string("cg"));
  result.report.set("iterations", result.iterations);
  result.report.set("nodal_error", result.nodalError);
  return result;
}

PoissonResult solvePoisson(const Mesh& mesh, unsigned degree)
{
  auto exact = [](const Eigen::Vector2d& x) { return x.squaredNorm(); };
  auto rhs = [](const Eigen::Vector2d&) { return -4.0; };
  return solvePoisson(mesh, degree, exact, rhs);
}

BasisDescriptor taylorHoodDescriptor(VelocityBlocking blocking, std::size_t dim)
{
  MergingStrategy velocityStrategy = blocking == VelocityBlocking::PerDof
                                         ? MergingStrategy::BlockedInterleaved
                                         : MergingStrategy::BlockedLexicographic;
  return composite({power(lagrange(2), dim, velocityStrategy), lagrange(1)},
                   MergingStrategy::BlockedLexicographic);
}

Eigen::MatrixXd assembleStokesMatrix(const GlobalBasis& basis)
{
  const Mesh& mesh = basis.mesh();
  const IndexTree& shape = basis.containerDescriptor();
  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(basis.dimension(), basis.dimension());

  LocalView view = basis.localView();
  const std::size_t dim = view.tree().child(0).childCount();

  for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
    view.bind(cell);
    ElementGeometry geo = geometry(mesh, cell);
    Eigen::Matrix2d jacobianInverse = geo.jacobian().inverse();
    const LocalTreeNode& pressure = view.tree().child(1);
    const LocalFiniteElement& velocityFe = view.tree().child(0).child(0).finiteElement();
    const LocalFiniteElement& pressureFe = pressure.finiteElement();

    Eigen::MatrixXd elementMatrix = Eigen::MatrixXd::Zero(view.size(), view.size());
    for (const QuadraturePoint& qp : triangleQuadratureOrder4()) {
      double scale = qp.weight * geo.jacobianDeterminant();
      Eigen::MatrixXd velocityGrads = velocityFe.evaluateGradients(qp.point) * jacobianInverse;
      Eigen::VectorXd pressureValues = pressureFe.evaluateValues(qp.point);

      for (std::size_t d = 0; d < dim; ++d) {
        const LocalTreeNode& component = view.tree().child(0).child(d);
        for (std::size_t i = 0; i < velocityFe.size(); ++i) {
          for (std::size_t j = 0; j < velocityFe.size(); ++j)
            elementMatrix(component.localIndex(i), component.localIndex(j)) +=
                scale * velocityGrads.row(i).dot(velocityGrads.row(j));
          for (std::size_t q = 0; q < pressureFe.size(); ++q) {
            double coupling = -scale * pressureValues[q] * velocityGrads(i, d);
            elementMatrix(component.localIndex(i), pressure.localIndex(q)) += coupling;
            elementMatrix(pressure.localIndex(q), component.localIndex(i)) += coupling;
          }
        }
      }
    }

    for (std::size_t i = 0; i < view.size(); ++i)
      for (std::size_t j = 0; j < view.size(); ++j)
        matrix(flatIndex(shape, view.index(i)), flatIndex(shape, view.index(j))) +=
            elementMatrix(i, j);
  }
  return matrix;
}

StokesResult solveStokes(const Mesh& mesh, VelocityBlocking blocking, std::size_t denseCellCap)
{
  if (mesh.nx() * mesh.ny() > denseCellCap)
    throw std::invalid_argument("solveStokes: mesh too large for the dense solver (cap "
                                + std::to_string(denseCellCap) + " squares)");

  GlobalBasis basis = makeBasis(mesh, taylorHoodDescriptor(blocking));
  const IndexTree& shape = basis.containerDescriptor();

  auto poiseuille = [](const Eigen::Vector2d& x) {
    return Eigen::Vector2d(x.y() * (1.0 - x.y()), 0.0);
  };
  auto pressureExact = [](const Eigen::Vector2d& x) { return -2.0 * x.x(); };

  Eigen::MatrixXd matrix = assembleStokesMatrix(basis);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(basis.dimension());

  SubspaceBasis velocity = subspaceBasis(basis, {0});
  SubspaceBasis pressure = subspaceBasis(basis, {1});

  auto solution = makeContainer<double>(shape, 0.0);
  auto constrained = makeContainer<unsigned char>(shape, 0);
  forEachBoundaryDOF(velocity, [&](const MultiIndex& index) { constrained.at(index) = 1; });
  interpolateMasked(velocity, VectorBackend<double>(solution),
                    VectorFunction(poiseuille), constrained);

  // Fix the pressure gauge by pinning the DOF with multi-index (1,0).
  auto interpolated = makeContainer<double>(shape, 0.0);
  interpolate(velocity, VectorBackend<double>(interpolated), VectorFunction(poiseuille));
  interpolate(pressure, VectorBackend<double>(interpolated), ScalarFunction(pressureExact));
  solution.at({1, 0}) = interpolated.at({1, 0});
  constrained.at({1, 0}) = 1;

  Eigen::VectorXd values =
      Eigen::Map<const Eigen::VectorXd>(solution.flat().data(), solution.flat().size());
  eliminateConstraints(matrix, rhs, maskedFlats(constrained), values);

  Eigen::PartialPivLU<Eigen::MatrixXd> solver(matrix);
  Eigen::VectorXd x = solver.solve(rhs);
  double residual = (matrix * x - rhs).norm() / std::max(1.0, rhs.norm());
  if (!x.allFinite() || residual > 1e-8)
    throw std::runtime_error("solveStokes: dense solve failed; the assembled system looks "
                             "singular");

  for (std::size_t i = 0; i < solution.flat().size(); ++i)
    solution.flat()[i] = x[i];

  double velocityError = 0;
  std::vector<double> pressureDiffs;
  for (const MultiIndex& index : leafPaths(shape)) {
    double diff = solution.at(index) - interpolated.at(index);
    if (index[0] == 0)
      velocityError = std::max(velocityError, std::abs(diff));
    else
      pressureDiffs.push_back(diff);
  }
  double shift = 0;
  for (double d : pressureDiffs)
    shift += d / double(pressureDiffs.size());
  double pressureError = 0;
  for (double d : pressureDiffs)
    pressureError = std::max(pressureError, std::abs(d - shift));

  StokesResult result{DemoReport{}, std::move(basis), std::move(solution), velocityError,
                      pressureError};
  result.report.set("demo", std::string("stokes"));
  result.report.set("nx", mesh.nx());
  result.report.set("ny", mesh.ny());
  result.report.set("basis", printDescriptor(result.basis.descriptor()));
  result.report.set("dimension", result.basis.dimension());
  result.report.set("solver", std::string("dense-lu"));
  result.report.set("layout",
                    std::string(blocking == VelocityBlocking::PerDof ? "fig4" : "fig3"));
  result.report.set("velocity_error", result.velocityError);
  result.report.set("pressure_error", result.pressureError);
  return result;
}

} // namespace basisforest
