#ifndef BASISFOREST_MULTI_INDEX_HPP
#define BASISFOREST_MULTI_INDEX_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace basisforest {

/** \brief A bounded-length sequence of non-negative digits.
 *
 * Multi-indices address individual basis functions of a basis tree and,
 * equivalently, individual scalar entries of a nested coefficient
 * container.  The capacity is a compile-time constant; the length is
 * dynamic and may be zero (the empty multi-index addresses the root).
 */
class MultiIndex
{
public:
  //! Maximal number of digits a multi-index can hold.
  static constexpr std::size_t maxLength = 8;

  MultiIndex() = default;

  MultiIndex(std::initializer_list<std::size_t> digits)
  {
    if (digits.size() > maxLength)
      throw std::length_error("MultiIndex: too many digits");
    for (auto d : digits)
      digits_[size_++] = d;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::size_t operator[](std::size_t i) const { return digits_[i]; }
  std::size_t& operator[](std::size_t i) { return digits_[i]; }

  std::size_t front() const { return digits_[0]; }
  std::size_t back() const { return digits_[size_ - 1]; }

  //! Append a digit at the end.
  void pushBack(std::size_t digit)
  {
    if (size_ == maxLength)
      throw std::length_error("MultiIndex: capacity exceeded");
    digits_[size_++] = digit;
  }

  //! Prepend a digit at the front.
  void pushFront(std::size_t digit)
  {
    if (size_ == maxLength)
      throw std::length_error("MultiIndex: capacity exceeded");
    for (std::size_t i = size_; i > 0; --i)
      digits_[i] = digits_[i - 1];
    digits_[0] = digit;
    ++size_;
  }

  void popBack()
  {
    if (size_ == 0)
      throw std::out_of_range("MultiIndex: popBack on empty multi-index");
    --size_;
  }

  //! Remove and return the first digit.
  std::size_t popFront()
  {
    if (size_ == 0)
      throw std::out_of_range("MultiIndex: popFront on empty multi-index");
    std::size_t d = digits_[0];
    for (std::size_t i = 1; i < size_; ++i)
      digits_[i - 1] = digits_[i];
    --size_;
    return d;
  }

  //! The leading `length` digits as a new multi-index.
  MultiIndex prefix(std::size_t length) const
  {
    if (length > size_)
      throw std::out_of_range("MultiIndex: prefix longer than index");
    MultiIndex p;
    for (std::size_t i = 0; i < length; ++i)
      p.pushBack(digits_[i]);
    return p;
  }

  //! True if this index is a prefix (not necessarily strict) of `other`.
  bool isPrefixOf(const MultiIndex& other) const
  {
    if (size_ > other.size_)
      return false;
    for (std::size_t i = 0; i < size_; ++i)
      if (digits_[i] != other.digits_[i])
        return false;
    return true;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b)
  {
    if (a.size_ != b.size_)
      return false;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.digits_[i] != b.digits_[i])
        return false;
    return true;
  }

  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  //! Lexicographic order; a strict prefix sorts before its extensions.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b)
  {
    std::size_t n = a.size_ < b.size_ ? a.size_ : b.size_;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.digits_[i] != b.digits_[i])
        return a.digits_[i] < b.digits_[i];
    }
    return a.size_ < b.size_;
  }

  //! Render as "(d0,d1,...)"; the empty multi-index prints as "()".
  std::string str() const
  {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size_; ++i) {
      if (i > 0)
        os << ',';
      os << digits_[i];
    }
    os << ')';
    return os.str();
  }

private:
  std::array<std::size_t, maxLength> digits_{};
  std::size_t size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& mi)
{
  return os << mi.str();
}

/** \brief A digit sequence addressing a node of a descriptor or local tree.
 *
 * Tree paths share the representation of multi-indices but address tree
 * nodes rather than scalar entries.
 */
using TreePath = MultiIndex;

} // namespace basisforest

#endif // BASISFOREST_MULTI_INDEX_HPP
