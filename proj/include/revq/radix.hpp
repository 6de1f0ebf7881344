#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace revq {

/// One digit of a mixed-radix word. Digits and radices are small; plain int
/// keeps the arithmetic readable.
using Digit = int;

/// A digit word: one value per wire, wire 0 first.
using DigitWord = std::vector<Digit>;

/// Ordered list of per-wire radices. Wire 0 is the most significant digit,
/// so flat state indices enumerate digit words in lexicographic order.
class RegisterShape {
 public:
  explicit RegisterShape(std::vector<int> radices) : radices_(std::move(radices)) {
    if (radices_.empty())
      throw std::invalid_argument("RegisterShape: need at least one wire");
    for (int r : radices_)
      if (r < 2)
        throw std::invalid_argument("RegisterShape: every radix must be >= 2, got " +
                                    std::to_string(r));
  }

  RegisterShape(std::initializer_list<int> radices)
      : RegisterShape(std::vector<int>(radices)) {}

  std::size_t wires() const { return radices_.size(); }
  int radix(std::size_t wire) const { return radices_.at(wire); }
  const std::vector<int>& radices() const { return radices_; }

  /// Product of all radices, with overflow detection.
  std::int64_t dimension() const {
    std::int64_t dim = 1;
    for (int r : radices_) {
      if (dim > std::numeric_limits<std::int64_t>::max() / r)
        throw std::overflow_error("RegisterShape: dimension overflows 64 bits");
      dim *= r;
    }
    return dim;
  }

  /// Shape of this register followed by all wires of `tail`.
  RegisterShape concat(const RegisterShape& tail) const {
    std::vector<int> all = radices_;
    all.insert(all.end(), tail.radices_.begin(), tail.radices_.end());
    return RegisterShape(std::move(all));
  }

  friend bool operator==(const RegisterShape& a, const RegisterShape& b) = default;

 private:
  std::vector<int> radices_;
};

inline std::int64_t dimension(const RegisterShape& shape) { return shape.dimension(); }

/// True iff `digits` has one in-range digit per wire of `shape`.
inline bool digits_valid(const RegisterShape& shape, const DigitWord& digits) {
  if (digits.size() != shape.wires()) return false;
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] < 0 || digits[i] >= shape.radix(i)) return false;
  return true;
}

/// Big-endian decomposition of a flat index: wire 0 is most significant.
inline DigitWord index_to_digits(const RegisterShape& shape, std::int64_t index) {
  if (index < 0 || index >= shape.dimension())
    throw std::out_of_range("index_to_digits: index " + std::to_string(index) +
                            " out of range for dimension " + std::to_string(shape.dimension()));
  DigitWord digits(shape.wires());
  for (std::size_t i = shape.wires(); i-- > 0;) {
    digits[i] = static_cast<Digit>(index % shape.radix(i));
    index /= shape.radix(i);
  }
  return digits;
}

/// Inverse of index_to_digits.
inline std::int64_t digits_to_index(const RegisterShape& shape, const DigitWord& digits) {
  if (digits.size() != shape.wires())
    throw std::invalid_argument("digits_to_index: digit count does not match wire count");
  std::int64_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= shape.radix(i))
      throw std::out_of_range("digits_to_index: digit " + std::to_string(digits[i]) +
                              " out of range for radix " + std::to_string(shape.radix(i)));
    index = index * shape.radix(i) + digits[i];
  }
  return index;
}

}  // namespace revq
