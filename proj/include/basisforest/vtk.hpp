#ifndef BASISFOREST_VTK_HPP
#define BASISFOREST_VTK_HPP

#include <iosfwd>
#include <string>

#include <basisforest/discrete_function.hpp>

namespace basisforest {

/** \brief Write a discrete function as legacy ASCII VTK point data.
 *
 * Fields with range dimension 1 become scalars, higher dimensions become
 * vectors (padded to three components).  Values are sampled at the mesh
 * vertices.
 */
void writeVtk(std::ostream& os, const Mesh& mesh, const DiscreteFunction& function,
              const std::string& fieldName);

} // namespace basisforest

#endif // BASISFOREST_VTK_HPP
