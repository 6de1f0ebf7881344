#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "revq/gates.hpp"
#include "revq/permutation.hpp"
#include "revq/truth_table.hpp"

namespace revq {

/// Boolean AND as a 2-bit -> 1-bit table, the base gate for extension searches.
inline TruthTable boolean_and_base() {
  return TruthTable({2, 2}, {2}, {0, 0, 0, 1});
}

/// Boolean OR as a 2-bit -> 1-bit table.
inline TruthTable boolean_or_base() {
  return TruthTable({2, 2}, {2}, {0, 1, 1, 1});
}

/// Search for reversible two-wire gates whose selected output component,
/// restricted to binary inputs (the corner {0,1} x {0,1} of the ambient
/// register), reproduces a Boolean base gate.
struct ExtensionQuery {
  TruthTable base;        // 2-bit -> 1-value corner table
  RegisterShape ambient;  // two-wire register the extensions act on
  int component = 0;      // which output component must extend the base
};

/// The [3,3] search runs structured by default (balanced first-component
/// candidates crossed with class-wise completions); full_scan walks all 9!
/// permutations instead and exists to cross-validate the structured route.
enum class ScanMode { structured, full_scan };

namespace detail {

inline void check_corner_base(const TruthTable& base) {
  if (base.input_shape() != RegisterShape{2, 2} || base.output_shape().wires() != 1 ||
      base.output_shape().radix(0) > 3)
    throw std::invalid_argument("extension search: base must be a 2-bit -> 1-value table");
}

// Flat ambient input index of corner cell (a, b), a, b in {0,1}.
inline int corner_index(const RegisterShape& ambient, int a, int b) {
  return a * ambient.radix(1) + b;
}

inline const std::vector<std::array<int, 3>>& s3_elements() {
  static const std::vector<std::array<int, 3>> elems = [] {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> p{0, 1, 2};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return elems;
}

inline Digit component_of(int state, const RegisterShape& shape, int component) {
  return component == 0 ? state / shape.radix(1) : state % shape.radix(1);
}

}  // namespace detail

/// All balanced 3 x 3 single-output tables that agree with the base gate on
/// the binary corner, in lexicographic order of their row-major cells.
/// Balanced means each of the three values appears exactly three times.
inline std::vector<TruthTable> enumerate_balanced_f1(const TruthTable& base) {
  detail::check_corner_base(base);
  const RegisterShape in{3, 3};
  std::array<Digit, 9> cells{};
  std::array<bool, 9> fixed{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cells[3 * a + b] = base.row(2 * a + b)[0];
      fixed[3 * a + b] = true;
    }
  std::vector<int> free_cells;
  for (int i = 0; i < 9; ++i)
    if (!fixed[i]) free_cells.push_back(i);

  std::vector<TruthTable> out;
  std::array<Digit, 5> assignment{};
  for (;;) {
    for (std::size_t k = 0; k < free_cells.size(); ++k) cells[free_cells[k]] = assignment[k];
    std::array<int, 3> counts{};
    for (Digit c : cells) ++counts[c];
    if (counts[0] == 3 && counts[1] == 3 && counts[2] == 3)
      out.emplace_back(in, RegisterShape{3}, std::vector<Digit>(cells.begin(), cells.end()));
    // odometer over the free cells, most significant first
    std::size_t k = assignment.size();
    while (k > 0 && assignment[k - 1] == 2) assignment[--k] = 0;
    if (k == 0) break;
    ++assignment[k - 1];
  }
  return out;
}

/// Keeps the tables with t(a,b) = t(b,a) for all arguments.
inline std::vector<TruthTable> filter_symmetric(const std::vector<TruthTable>& tables) {
  std::vector<TruthTable> out;
  for (const auto& t : tables) {
    bool symmetric = true;
    for (int a = 0; a < 3 && symmetric; ++a)
      for (int b = 0; b < 3 && symmetric; ++b)
        if (t.row(3 * a + b)[0] != t.row(3 * b + a)[0]) symmetric = false;
    if (symmetric) out.push_back(t);
  }
  return out;
}

/// Number of second components f2 making (f1, f2) a bijection on the nine
/// states: (3!)^3 = 216 when f1 is balanced (each value class admits the six
/// orderings of {0,1,2} independently), 0 otherwise.
inline std::int64_t count_f2_completions(const TruthTable& f1) {
  if (f1.input_shape() != RegisterShape{3, 3} || f1.output_shape().wires() != 1)
    throw std::invalid_argument("count_f2_completions: need a [3,3] -> [3] table");
  std::array<int, 3> class_size{};
  for (std::int64_t i = 0; i < 9; ++i) ++class_size[f1.row(i)[0]];
  std::int64_t count = 1;
  for (int v = 0; v < 3; ++v) {
    if (class_size[v] != 3) return 0;
    count *= 6;
  }
  return count;
}

/// All permutations of the nine [3,3] states whose selected output component
/// extends the base gate on the binary corner, in lexicographic order of the
/// image list. Both scan modes return the identical list.
inline std::vector<Permutation> enumerate_extensions(const ExtensionQuery& q,
                                                     ScanMode mode = ScanMode::structured) {
  detail::check_corner_base(q.base);
  if (q.ambient != RegisterShape{3, 3})
    throw std::invalid_argument("enumerate_extensions: ambient shape must be [3,3]");
  if (q.component != 0 && q.component != 1)
    throw std::invalid_argument("enumerate_extensions: component must be 0 or 1");

  std::vector<Permutation> out;
  if (mode == ScanMode::full_scan) {
    std::vector<int> images(9);
    std::iota(images.begin(), images.end(), 0);
    do {
      bool ok = true;
      for (int a = 0; a < 2 && ok; ++a)
        for (int b = 0; b < 2 && ok; ++b)
          if (detail::component_of(images[detail::corner_index(q.ambient, a, b)], q.ambient,
                                   q.component) != q.base.row(2 * a + b)[0])
            ok = false;
      if (ok) out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;  // next_permutation already yields lexicographic order
  }

  for (const TruthTable& f1 : enumerate_balanced_f1(q.base)) {
    // inputs of each value class, ascending
    std::array<std::vector<int>, 3> classes;
    for (int i = 0; i < 9; ++i) classes[f1.row(i)[0]].push_back(i);
    for (const auto& s0 : detail::s3_elements())
      for (const auto& s1 : detail::s3_elements())
        for (const auto& s2 : detail::s3_elements()) {
          const std::array<const std::array<int, 3>*, 3> sigma{&s0, &s1, &s2};
          std::vector<int> images(9);
          for (int v = 0; v < 3; ++v)
            for (std::size_t pos = 0; pos < classes[v].size(); ++pos) {
              const int constrained = v;
              const int free = (*sigma[v])[pos];
              images[classes[v][pos]] =
                  q.component == 0 ? 3 * constrained + free : 3 * free + constrained;
            }
          out.emplace_back(std::move(images));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Result of the [2,3] search: every extension found by scanning all 720
/// permutations of the six states, plus how many of them have second
/// component sigma((b - a) mod 3) for a single global relabeling sigma of
/// the trit values. The base tables admit exactly one balanced first
/// component, so the unconstrained list has 3! x 3! = 36 entries and the
/// relabeling reading picks out 6 of them.
struct Extension23Result {
  std::vector<Permutation> all;
  int global_relabel_count = 0;
};

inline Extension23Result enumerate_extensions_23(const TruthTable& base) {
  detail::check_corner_base(base);
  const RegisterShape ambient{2, 3};
  Extension23Result result;
  std::vector<int> images(6);
  std::iota(images.begin(), images.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < 2 && ok; ++a)
      for (int b = 0; b < 2 && ok; ++b)
        if (images[detail::corner_index(ambient, a, b)] / 3 != base.row(2 * a + b)[0]) ok = false;
    if (!ok) continue;
    result.all.emplace_back(images);
    for (const auto& sigma : detail::s3_elements()) {
      bool matches = true;
      for (int a = 0; a < 2 && matches; ++a)
        for (int b = 0; b < 3 && matches; ++b)
          if (images[3 * a + b] % 3 != sigma[(b - a + 3) % 3]) matches = false;
      if (matches) {
        ++result.global_relabel_count;
        break;
      }
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

enum class TernaryLogicOp { cyclic_and, cyclic_or };
enum class LogicLaw { associativity, distributivity };

/// Exhaustive law check over all 27 ternary triples. `triples` holds every
/// violation in lexicographic order; `few_valued` is the subset using at
/// most two distinct values, which stays empty for both cyclic operations
/// (violations always involve all three values).
struct LawCounterexamples {
  std::vector<std::array<Digit, 3>> triples;
  std::vector<std::array<Digit, 3>> few_valued;
};

inline LawCounterexamples find_law_counterexamples(TernaryLogicOp op, LogicLaw law) {
  const auto primary = op == TernaryLogicOp::cyclic_and ? cyclic_and : cyclic_or;
  const auto dual = op == TernaryLogicOp::cyclic_and ? cyclic_or : cyclic_and;
  LawCounterexamples out;
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b)
      for (Digit c = 0; c < 3; ++c) {
        const bool violated =
            law == LogicLaw::associativity
                ? primary(primary(a, b), c) != primary(a, primary(b, c))
                : primary(a, dual(b, c)) != dual(primary(a, b), primary(a, c));
        if (!violated) continue;
        out.triples.push_back({a, b, c});
        const int distinct = 1 + (b != a) + (c != a && c != b);
        if (distinct <= 2) out.few_valued.push_back({a, b, c});
      }
  return out;
}

}  // namespace revq
