#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revq/matrix.hpp"
#include "revq/permutation.hpp"
#include "revq/radix.hpp"

namespace revq {

// ---------------------------------------------------------------------------
// Ternary logic operators
// ---------------------------------------------------------------------------

/// Encoding of the Lukasiewicz "unknown" value on digit set {0,1,2}.
inline constexpr Digit kUnknown = 2;

inline void check_ternary(Digit a, const char* who) {
  if (a < 0 || a > 2) throw std::out_of_range(std::string(who) + ": value must be in {0,1,2}");
}

/// The cyclic relation 0 -> 1 -> 2 -> 0 between distinct ternary values:
/// true iff a immediately precedes b. Nontransitive by construction, the
/// arbitration relation of rock-paper-scissors games.
inline bool cyclic_precedes(Digit a, Digit b) {
  check_ternary(a, "cyclic_precedes");
  check_ternary(b, "cyclic_precedes");
  if (a == b) throw std::invalid_argument("cyclic_precedes: relation is defined only between distinct values");
  return (b - a + 3) % 3 == 1;
}

/// Selection "the previous or the same" under the cyclic relation:
/// returns a if a precedes b, else b; equal arguments return themselves.
///
///   AND3 | 0 1 2        restricted to {0,1} this is Boolean AND, and each
///   -----+------        value appears exactly three times (balanced).
///     0  | 0 0 2
///     1  | 0 1 1
///     2  | 2 1 2
inline Digit cyclic_and(Digit a, Digit b) {
  check_ternary(a, "cyclic_and");
  check_ternary(b, "cyclic_and");
  if (a == b) return a;
  return cyclic_precedes(a, b) ? a : b;
}

/// Selection "the next or the same": returns a if b precedes a, else b.
///
///   OR3  | 0 1 2
///   -----+------
///     0  | 0 1 0
///     1  | 1 1 2
///     2  | 0 2 2
inline Digit cyclic_or(Digit a, Digit b) {
  check_ternary(a, "cyclic_or");
  check_ternary(b, "cyclic_or");
  if (a == b) return a;
  return cyclic_precedes(b, a) ? a : b;
}

namespace detail {
// Linear order 0 < unknown < 1 used by the three-valued MIN/MAX logic.
inline int lukasiewicz_rank(Digit a) {
  check_ternary(a, "lukasiewicz rank");
  if (a == 0) return 0;
  if (a == kUnknown) return 1;
  return 2;
}
}  // namespace detail

/// MIN under the order 0 < x < 1 (x = "unknown", encoded as 2). Unbalanced:
/// 0 wins against everything, so no two-wire reversible completion exists.
inline Digit lukasiewicz_and(Digit a, Digit b) {
  return detail::lukasiewicz_rank(a) <= detail::lukasiewicz_rank(b) ? a : b;
}

/// MAX under the same order.
inline Digit lukasiewicz_or(Digit a, Digit b) {
  return detail::lukasiewicz_rank(a) >= detail::lukasiewicz_rank(b) ? a : b;
}

/// Ternary negation (1 - a) mod 3: swaps 0 and 1, fixes 2. De Morgan holds
/// between cyclic_and and cyclic_or under this negation.
inline Digit ternary_not(Digit a) {
  check_ternary(a, "ternary_not");
  return ((1 - a) % 3 + 3) % 3;
}

// ---------------------------------------------------------------------------
// Named gate library
// ---------------------------------------------------------------------------

/// A named gate: classical-reversible gates carry their permutation and the
/// matrix is its 0/1 representation; the matrix is always unitary.
struct Gate {
  std::string name;
  RegisterShape shape;
  std::optional<Permutation> permutation;
  ComplexMatrix matrix;

  bool classical() const { return permutation.has_value(); }
};

namespace detail {

inline Gate classical_gate(std::string name, RegisterShape shape,
                           DigitWord (*fn)(const DigitWord&)) {
  const TruthTable table = TruthTable::from_function(shape, shape, fn);
  Permutation p = permutation_from_table(table);
  ComplexMatrix m = to_matrix(p);
  return Gate{std::move(name), std::move(shape), std::move(p), std::move(m)};
}

inline std::map<std::string, Gate> build_gate_registry() {
  std::map<std::string, Gate> gates;
  auto add = [&gates](std::string name, RegisterShape shape, DigitWord (*fn)(const DigitWord&)) {
    gates.emplace(name, classical_gate(name, std::move(shape), fn));
  };

  add("NOT", {2}, [](const DigitWord& d) -> DigitWord { return {1 - d[0]}; });
  add("CNOT", {2, 2}, [](const DigitWord& d) -> DigitWord { return {d[0], d[1] ^ d[0]}; });
  add("TOFFOLI", {2, 2, 2},
      [](const DigitWord& d) -> DigitWord { return {d[0], d[1], d[2] ^ (d[0] & d[1])}; });
  add("X3", {3}, [](const DigitWord& d) -> DigitWord { return {(d[0] + 1) % 3}; });
  add("X3_INV", {3}, [](const DigitWord& d) -> DigitWord { return {(d[0] + 2) % 3}; });

  // Two-value ternary implementations of Boolean AND/OR: the logic value in
  // the first output, (b - a) mod 3 in the second.
  add("AND_C", {3, 3},
      [](const DigitWord& d) -> DigitWord { return {cyclic_and(d[0], d[1]), (d[1] - d[0] + 3) % 3}; });
  add("OR_C", {3, 3},
      [](const DigitWord& d) -> DigitWord { return {cyclic_or(d[0], d[1]), (d[1] - d[0] + 3) % 3}; });

  // Step operators realizing AND_C = C2_STAR after CX_STAR and
  // OR_C = C1 after CX_STAR.
  add("CX_STAR", {3, 3},
      [](const DigitWord& d) -> DigitWord { return {d[0], (d[1] - d[0] + 3) % 3}; });
  add("SUB_MOD3", {3, 3},
      [](const DigitWord& d) -> DigitWord { return {d[0], (d[1] - d[0] + 3) % 3}; });
  add("C2_STAR", {3, 3},
      [](const DigitWord& d) -> DigitWord {
        return {d[1] == 2 ? (d[0] + 2) % 3 : d[0], d[1]};
      });
  add("C1", {3, 3},
      [](const DigitWord& d) -> DigitWord {
        return {d[1] == 1 ? (d[0] + 1) % 3 : d[0], d[1]};
      });

  // Binary/ternary hybrid AND/OR on one bit and one trit. Six states
  // instead of the Toffoli gate's eight.
  //
  //   AND23: (a,b) -> | 00->00 01->01 02->12 10->02 11->10 12->11
  //   OR23:  (a,b) -> | 00->00 01->11 02->02 10->12 11->10 12->01
  add("AND23", {2, 3}, [](const DigitWord& d) -> DigitWord {
    static constexpr Digit table[6][2] = {{0, 0}, {0, 1}, {1, 2}, {0, 2}, {1, 0}, {1, 1}};
    const int i = d[0] * 3 + d[1];
    return {table[i][0], table[i][1]};
  });
  add("OR23", {2, 3}, [](const DigitWord& d) -> DigitWord {
    static constexpr Digit table[6][2] = {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {1, 0}, {0, 1}};
    const int i = d[0] * 3 + d[1];
    return {table[i][0], table[i][1]};
  });

  return gates;
}

}  // namespace detail

inline const std::map<std::string, Gate>& gate_registry() {
  static const std::map<std::string, Gate> gates = detail::build_gate_registry();
  return gates;
}

/// Looks up a gate by its canonical upper-case name.
inline const Gate& gate(const std::string& name) {
  const auto& gates = gate_registry();
  const auto it = gates.find(name);
  if (it == gates.end()) throw std::invalid_argument("unknown gate: " + name);
  return it->second;
}

inline std::vector<std::string> gate_names() {
  std::vector<std::string> names;
  for (const auto& [name, g] : gate_registry()) names.push_back(name);
  return names;
}

}  // namespace revq
