#ifndef BASISFOREST_NESTED_CONTAINER_HPP
#define BASISFOREST_NESTED_CONTAINER_HPP

#include <ostream>
#include <vector>

#include <basisforest/global_basis.hpp>
#include <basisforest/index_tree.hpp>

namespace basisforest {

/** \brief Tree-shaped scalar storage addressable by multi-index.
 *
 * The shape is an index tree; every leaf path of the shape addresses
 * exactly one scalar.  Scalars are stored densely in lexicographic
 * leaf-path order.  Containers are single-writer; concurrent reads through
 * const views are safe while no mutable view exists.
 */
template<class T>
class NestedContainer
{
public:
  //! A default-constructed container holds a single scalar.
  NestedContainer() : data_(1, T{}) {}

  explicit NestedContainer(IndexTree shape, const T& defaultValue = T{})
    : shape_(std::move(shape)), data_(shape_.leafCount(), defaultValue)
  {
  }

  const IndexTree& shape() const { return shape_; }

  std::size_t scalarCount() const { return data_.size(); }

  //! The scalar addressed by a leaf path of the shape; throws otherwise.
  const T& at(const MultiIndex& index) const { return data_[flatIndex(shape_, index)]; }
  T& at(const MultiIndex& index) { return data_[flatIndex(shape_, index)]; }

  //! Drop the old shape and storage; new scalars all get `defaultValue`.
  void reshape(IndexTree shape, const T& defaultValue = T{})
  {
    shape_ = std::move(shape);
    data_.assign(shape_.leafCount(), defaultValue);
  }

  void fill(const T& value) { data_.assign(data_.size(), value); }

  //! Storage in lexicographic leaf-path order.
  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

  //! One "multi-index value" line per scalar, in lexicographic order.
  void dump(std::ostream& os) const
  {
    auto paths = leafPaths(shape_);
    for (std::size_t i = 0; i < paths.size(); ++i)
      os << paths[i] << ' ' << +data_[i] << '\n';
  }

private:
  IndexTree shape_;
  std::vector<T> data_;
};

//! Container shaped like `descriptor` with every scalar set to `defaultValue`.
template<class T>
NestedContainer<T> makeContainer(const IndexTree& descriptor, const T& defaultValue = T{})
{
  return NestedContainer<T>(descriptor, defaultValue);
}

//! Read-only multi-index access to a nested container.
template<class T>
class ConstVectorBackend
{
public:
  explicit ConstVectorBackend(const NestedContainer<T>& container) : container_(&container) {}

  const T& operator[](const MultiIndex& index) const { return container_->at(index); }

  const NestedContainer<T>& container() const { return *container_; }

private:
  const NestedContainer<T>* container_;
};

//! Mutable multi-index access plus basis-driven resizing.
template<class T>
class VectorBackend
{
public:
  explicit VectorBackend(NestedContainer<T>& container) : container_(&container) {}

  T& operator[](const MultiIndex& index) { return container_->at(index); }
  const T& operator[](const MultiIndex& index) const { return container_->at(index); }

  /** \brief Reshape the container to the basis's container descriptor.
   *
   * Previous values are not preserved; all scalars are default-initialized.
   */
  void resize(const GlobalBasis& basis, const T& defaultValue = T{})
  {
    container_->reshape(basis.containerDescriptor(), defaultValue);
  }

  void fill(const T& value) { container_->fill(value); }

  NestedContainer<T>& container() { return *container_; }
  const NestedContainer<T>& container() const { return *container_; }

  operator ConstVectorBackend<T>() const { return ConstVectorBackend<T>(*container_); }

private:
  NestedContainer<T>* container_;
};

} // namespace basisforest

#endif // BASISFOREST_NESTED_CONTAINER_HPP
