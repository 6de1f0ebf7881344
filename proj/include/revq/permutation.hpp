#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "revq/matrix.hpp"
#include "revq/radix.hpp"
#include "revq/truth_table.hpp"

namespace revq {

/// Bijection on {0..N-1}, stored as the image list. The classical
/// reversible-gate representation: state i maps to mapping()[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw std::invalid_argument("Permutation: empty mapping");
    std::vector<bool> seen(n, false);
    for (int v : images_) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("Permutation: image " + std::to_string(v) +
                                    " out of range for size " + std::to_string(n));
      if (seen[v]) throw std::invalid_argument("Permutation: duplicate image " + std::to_string(v));
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i); }
  const std::vector<int>& mapping() const { return images_; }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Composition with q applied first: result(i) = p(q(i)). A circuit listing
/// g1 then g2 therefore has overall permutation compose(perm(g2), perm(g1)),
/// matching the right-to-left order of operator products.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> images(p.size());
  for (int i = 0; i < p.size(); ++i) images[i] = p(q(i));
  return Permutation(std::move(images));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.size());
  for (int i = 0; i < p.size(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

/// p composed with itself k times (k >= 0; k = 0 gives the identity).
inline Permutation power(const Permutation& p, int k) {
  if (k < 0) throw std::invalid_argument("power: exponent must be >= 0");
  Permutation acc = Permutation::identity(p.size());
  for (int i = 0; i < k; ++i) acc = compose(p, acc);
  return acc;
}

/// Cycle decomposition; fixed points appear as singleton cycles.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (int start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

/// Smallest k >= 1 with p^k = identity, as the LCM of cycle lengths.
inline std::int64_t order(const Permutation& p) {
  std::int64_t result = 1;
  for (const auto& cycle : cycles(p))
    result = std::lcm(result, static_cast<std::int64_t>(cycle.size()));
  return result;
}

/// N x N 0/1 matrix with entry (p(i), i) = 1, so column i is the image basis
/// vector of i and the matrix acts as the permutation on basis states.
inline ComplexMatrix to_matrix(const Permutation& p) {
  check_dense_dimension(p.size());
  ComplexMatrix m(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) m(p(i), i) = 1.0;
  return m;
}

/// The permutation viewed as a reversible table over the given shape.
inline TruthTable to_truth_table(const Permutation& p, const RegisterShape& shape) {
  if (shape.dimension() != p.size())
    throw std::invalid_argument("to_truth_table: shape dimension does not match permutation size");
  std::vector<Digit> entries;
  entries.reserve(static_cast<std::size_t>(p.size()) * shape.wires());
  for (int i = 0; i < p.size(); ++i) {
    const DigitWord out = index_to_digits(shape, p(i));
    entries.insert(entries.end(), out.begin(), out.end());
  }
  return TruthTable(shape, shape, std::move(entries));
}

/// Inverse of to_truth_table; requires equal input/output dimensions and a
/// bijective table.
inline Permutation permutation_from_table(const TruthTable& t) {
  if (t.input_shape().dimension() != t.output_shape().dimension())
    throw std::invalid_argument("permutation_from_table: table is not square");
  std::vector<int> images(static_cast<std::size_t>(t.rows()));
  for (std::int64_t i = 0; i < t.rows(); ++i) {
    const auto row = t.row(i);
    images[static_cast<std::size_t>(i)] =
        static_cast<int>(digits_to_index(t.output_shape(), DigitWord(row.begin(), row.end())));
  }
  return Permutation(std::move(images));
}

/// Balance criterion: component `component` of the table takes each of its
/// radix values on equally many inputs. Necessary for the component to be
/// part of any reversible (bijective) completion.
inline bool is_balanced_component(const TruthTable& table, int component) {
  if (component < 0 || component >= static_cast<int>(table.output_shape().wires()))
    throw std::out_of_range("is_balanced_component: no such output component");
  const int radix = table.output_shape().radix(component);
  if (table.rows() % radix != 0) return false;
  const std::int64_t quota = table.rows() / radix;
  std::vector<std::int64_t> counts(radix, 0);
  for (std::int64_t i = 0; i < table.rows(); ++i) ++counts[table.row(i)[component]];
  return std::all_of(counts.begin(), counts.end(),
                     [quota](std::int64_t c) { return c == quota; });
}

}  // namespace revq
