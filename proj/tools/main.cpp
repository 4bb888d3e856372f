#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <basisforest/demos.hpp>
#include <basisforest/discrete_function.hpp>
#include <basisforest/interpolation.hpp>
#include <basisforest/local_view.hpp>
#include <basisforest/occupation_pattern.hpp>
#include <basisforest/vtk.hpp>

namespace {

void writePatternFile(const std::string& path, const basisforest::GlobalBasis& basis)
{
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot open pattern file '" + path + "'");
  basisforest::writePbm(out, basisforest::occupationPattern(basis));
}

void writeVtkFile(const std::string& path, const basisforest::Mesh& mesh,
                  const basisforest::DiscreteFunction& function, const std::string& name)
{
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot open vtk file '" + path + "'");
  basisforest::writeVtk(out, mesh, function, name);
}

// Expanded one-node-per-line rendering of an index tree.
void printTreeLines(const basisforest::IndexTree& node, const std::string& indent)
{
  using Kind = basisforest::IndexTree::Kind;
  switch (node.kind()) {
  case Kind::Value:
    std::cout << indent << "value\n";
    return;
  case Kind::Uniform:
    std::cout << indent << node.degree() << " x\n";
    printTreeLines(node.child(0), indent + "  ");
    return;
  case Kind::NonUniform:
    std::cout << indent << "node with " << node.degree() << " children\n";
    for (std::size_t i = 0; i < node.degree(); ++i)
      printTreeLines(node.child(i), indent + "  ");
    return;
  }
}

int runInspect(std::size_t nx, std::size_t ny, const std::string& dsl, bool printIndexTree,
               bool printLocalIndices, const std::string& patternFile)
{
  using namespace basisforest;
  Mesh mesh = makeStructuredMesh(nx, ny);
  GlobalBasis basis = makeBasis(mesh, parseDescriptor(dsl));

  std::cout << "dimension=" << basis.dimension() << '\n';
  std::cout << "container_descriptor=" << basis.containerDescriptor() << '\n';
  if (printIndexTree) {
    std::cout << "index_tree:\n";
    printTreeLines(basis.containerDescriptor(), "  ");
  }

  if (printLocalIndices) {
    LocalView view = basis.localView();
    for (std::size_t cell = 0; cell < mesh.numCells(); ++cell) {
      view.bind(cell);
      for (std::size_t i = 0; i < view.size(); ++i)
        std::cout << cell << ' ' << view.index(i) << '\n';
    }
  }

  if (!patternFile.empty()) {
    writePatternFile(patternFile, basis);
    std::cout << "pattern_file=" << patternFile << '\n';
  }
  return 0;
}

int runPoisson(std::size_t nx, std::size_t ny, unsigned degree, const std::string& vtkFile,
               bool dumpCoefficients)
{
  using namespace basisforest;
  Mesh mesh = makeStructuredMesh(nx, ny);
  PoissonResult result = solvePoisson(mesh, degree);
  result.report.print(std::cout);
  if (dumpCoefficients)
    result.solution.dump(std::cout);
  if (!vtkFile.empty()) {
    DiscreteFunction solution =
        makeDiscreteFunction(result.basis, ConstVectorBackend<double>(result.solution), 1);
    writeVtkFile(vtkFile, mesh, solution, "solution");
  }
  return 0;
}

int runStokes(std::size_t nx, std::size_t ny, const std::string& layout,
              const std::string& patternFile, const std::string& vtkFile, std::size_t denseCap,
              bool dumpCoefficients)
{
  using namespace basisforest;
  Mesh mesh = makeStructuredMesh(nx, ny);
  VelocityBlocking blocking =
      layout == "fig4" ? VelocityBlocking::PerDof : VelocityBlocking::PerComponent;
  StokesResult result = solveStokes(mesh, blocking, denseCap);
  result.report.print(std::cout);
  if (dumpCoefficients)
    result.solution.dump(std::cout);

  if (!patternFile.empty())
    writePatternFile(patternFile, result.basis);
  if (!vtkFile.empty()) {
    DiscreteFunction velocity = makeDiscreteFunction(
        subspaceBasis(result.basis, {0}), ConstVectorBackend<double>(result.solution), 2);
    writeVtkFile(vtkFile, mesh, velocity, "velocity");
  }
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Tree-composed finite element bases: index-tree inspection and desk-scale demos"};
  app.require_subcommand(1);

  std::size_t nx = 1, ny = 1;
  std::string dsl;
  bool printIndexTree = false;
  bool printLocalIndices = false;
  std::string patternFile;
  std::string vtkFile;
  bool dumpCoefficients = false;
  unsigned degree = 2;
  std::string layout = "fig4";
  std::size_t denseCap = 256;

  CLI::App* inspect = app.add_subcommand("inspect", "Inspect a basis built from a DSL string");
  inspect->add_option("--nx", nx, "grid squares in x")->check(CLI::PositiveNumber);
  inspect->add_option("--ny", ny, "grid squares in y")->check(CLI::PositiveNumber);
  inspect
      ->add_option("--basis", dsl,
                   "basis descriptor, e.g. power(lagrange(1),2,blockedInterleaved)")
      ->required();
  inspect->add_flag("--print-index-tree", printIndexTree, "print the index tree");
  inspect->add_flag("--print-local-indices", printLocalIndices,
                    "print every cell's global multi-indices");
  inspect->add_option("--pattern", patternFile, "write the occupation pattern as a PBM file");

  CLI::App* poisson = app.add_subcommand("poisson", "Solve the manufactured Poisson problem");
  poisson->add_option("--nx", nx, "grid squares in x")->check(CLI::PositiveNumber);
  poisson->add_option("--ny", ny, "grid squares in y")->check(CLI::PositiveNumber);
  poisson->add_option("--degree", degree, "Lagrange degree (1..3)")->check(CLI::Range(1u, 3u));
  poisson->add_option("--vtk", vtkFile, "write the solution as a VTK file");
  poisson->add_flag("--dump", dumpCoefficients, "dump the solution coefficients per multi-index");

  CLI::App* stokes = app.add_subcommand("stokes", "Solve Poiseuille flow with Taylor-Hood");
  stokes->add_option("--nx", nx, "grid squares in x")->check(CLI::PositiveNumber);
  stokes->add_option("--ny", ny, "grid squares in y")->check(CLI::PositiveNumber);
  stokes->add_option("--layout", layout, "velocity index layout")
      ->check(CLI::IsMember({"fig3", "fig4"}));
  stokes->add_option("--pattern", patternFile, "write the occupation pattern as a PBM file");
  stokes->add_option("--vtk", vtkFile, "write the velocity field as a VTK file");
  stokes->add_flag("--dump", dumpCoefficients, "dump the solution coefficients per multi-index");
  stokes->add_option("--dense-cap", denseCap, "largest nx*ny admitted to the dense solver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inspect->parsed())
      return runInspect(nx, ny, dsl, printIndexTree, printLocalIndices, patternFile);
    if (poisson->parsed())
      return runPoisson(nx, ny, degree, vtkFile, dumpCoefficients);
    return runStokes(nx, ny, layout, patternFile, vtkFile, denseCap, dumpCoefficients);
  } catch (const basisforest::ParseError& e) {
    std::cerr << "error: invalid basis descriptor at " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
