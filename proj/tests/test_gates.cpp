#include <catch2/catch_amalgamated.hpp>

#include "revq/gates.hpp"

using namespace revq;
using C = ComplexMatrix::value_type;

namespace {

// Reference rows typed from the published truth tables, (a, b) -> (a', b')
// over lexicographic inputs.
constexpr Digit kAnd23[6][2] = {{0, 0}, {0, 1}, {1, 2}, {0, 2}, {1, 0}, {1, 1}};
constexpr Digit kOr23[6][2] = {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {1, 0}, {0, 1}};
constexpr Digit kAndC[9][2] = {{0, 0}, {0, 1}, {2, 2}, {0, 2}, {1, 0},
                               {1, 1}, {2, 1}, {1, 2}, {2, 0}};
constexpr Digit kOrC[9][2] = {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {1, 0},
                              {2, 1}, {0, 1}, {2, 2}, {2, 0}};
constexpr Digit kCyclicAnd[3][3] = {{0, 0, 2}, {0, 1, 1}, {2, 1, 2}};
constexpr Digit kCyclicOr[3][3] = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
constexpr Digit kLukAnd[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
constexpr Digit kLukOr[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};

template <std::size_t N>
void check_rows(const Gate& g, const Digit (&rows)[N][2]) {
  REQUIRE(g.shape.dimension() == static_cast<std::int64_t>(N));
  REQUIRE(g.classical());
  for (std::size_t i = 0; i < N; ++i) {
    const DigitWord out = index_to_digits(g.shape, (*g.permutation)(static_cast<int>(i)));
    INFO("gate " << g.name << " input index " << i);
    CHECK(out == DigitWord{rows[i][0], rows[i][1]});
  }
}

}  // namespace

TEST_CASE("cyclic relation") {
  CHECK(cyclic_precedes(0, 1));
  CHECK(cyclic_precedes(1, 2));
  CHECK(cyclic_precedes(2, 0));
  CHECK_FALSE(cyclic_precedes(1, 0));
  CHECK_FALSE(cyclic_precedes(2, 1));
  CHECK_FALSE(cyclic_precedes(0, 2));
  CHECK_THROWS_AS(cyclic_precedes(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_precedes(3, 0), std::out_of_range);
}

TEST_CASE("cyclic AND/OR reproduce their truth tables") {
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b) {
      CHECK(cyclic_and(a, b) == kCyclicAnd[a][b]);
      CHECK(cyclic_or(a, b) == kCyclicOr[a][b]);
    }
  CHECK(cyclic_and(0, 2) == 2);
  CHECK(cyclic_or(2, 1) == 2);
  CHECK(cyclic_and(1, 1) == 1);
}

TEST_CASE("cyclic AND/OR restrict to Boolean AND/OR") {
  for (Digit a = 0; a < 2; ++a)
    for (Digit b = 0; b < 2; ++b) {
      CHECK(cyclic_and(a, b) == (a & b));
      CHECK(cyclic_or(a, b) == (a | b));
    }
}

TEST_CASE("three-valued MIN/MAX tables") {
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b) {
      CHECK(lukasiewicz_and(a, b) == kLukAnd[a][b]);
      CHECK(lukasiewicz_or(a, b) == kLukOr[a][b]);
    }
  CHECK(lukasiewicz_and(1, kUnknown) == kUnknown);
  CHECK(lukasiewicz_or(kUnknown, kUnknown) == kUnknown);
  for (Digit b = 0; b < 3; ++b) CHECK(lukasiewicz_and(0, b) == 0);
}

TEST_CASE("ternary negation") {
  CHECK(ternary_not(0) == 1);
  CHECK(ternary_not(1) == 0);
  CHECK(ternary_not(2) == 2);
  CHECK_THROWS_AS(ternary_not(3), std::out_of_range);
}

TEST_CASE("De Morgan identity over all pairs") {
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b)
      CHECK(ternary_not(cyclic_and(a, b)) == cyclic_or(ternary_not(a), ternary_not(b)));
}

TEST_CASE("cyclic AND/OR are neither associative nor distributive") {
  bool assoc_and = false, assoc_or = false, distrib_and = false, distrib_or = false;
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b)
      for (Digit c = 0; c < 3; ++c) {
        assoc_and |= cyclic_and(cyclic_and(a, b), c) != cyclic_and(a, cyclic_and(b, c));
        assoc_or |= cyclic_or(cyclic_or(a, b), c) != cyclic_or(a, cyclic_or(b, c));
        distrib_and |=
            cyclic_and(a, cyclic_or(b, c)) != cyclic_or(cyclic_and(a, b), cyclic_and(a, c));
        distrib_or |=
            cyclic_or(a, cyclic_and(b, c)) != cyclic_and(cyclic_or(a, b), cyclic_or(a, c));
      }
  CHECK(assoc_and);
  CHECK(assoc_or);
  CHECK(distrib_and);
  CHECK(distrib_or);
}

TEST_CASE("hybrid bit/trit gates match their tables") {
  check_rows(gate("AND23"), kAnd23);
  check_rows(gate("OR23"), kOr23);
  CHECK(gate("AND23").shape == RegisterShape{2, 3});
  // sample rows called out explicitly
  CHECK(index_to_digits({2, 3}, (*gate("AND23").permutation)(3)) == DigitWord{0, 2});  // (1,0)
  CHECK(index_to_digits({2, 3}, (*gate("OR23").permutation)(1)) == DigitWord{1, 1});   // (0,1)
}

TEST_CASE("two-trit gates match their tables and component formulas") {
  check_rows(gate("AND_C"), kAndC);
  check_rows(gate("OR_C"), kOrC);
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b) {
      const DigitWord and_out =
          index_to_digits({3, 3}, (*gate("AND_C").permutation)(3 * a + b));
      CHECK(and_out[0] == cyclic_and(a, b));
      CHECK(and_out[1] == (b - a + 3) % 3);
    }
  CHECK(index_to_digits({3, 3}, (*gate("AND_C").permutation)(7)) == DigitWord{1, 2});  // (2,1)
}

TEST_CASE("step operators and the gate decompositions") {
  const auto& cx = *gate("CX_STAR").permutation;
  CHECK(*gate("SUB_MOD3").permutation == cx);
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b)
      CHECK(cx(3 * a + b) == 3 * a + (b - a + 3) % 3);
  CHECK(compose(*gate("C2_STAR").permutation, cx) == *gate("AND_C").permutation);
  CHECK(compose(*gate("C1").permutation, cx) == *gate("OR_C").permutation);
}

TEST_CASE("gate periods") {
  CHECK(order(*gate("AND_C").permutation) == 7);
  CHECK(order(*gate("OR_C").permutation) == 7);
  CHECK(power(*gate("AND_C").permutation, 6) == inverse(*gate("AND_C").permutation));
  CHECK(power(*gate("OR_C").permutation, 6) == inverse(*gate("OR_C").permutation));
  CHECK(order(*gate("TOFFOLI").permutation) == 2);
  CHECK(order(*gate("AND23").permutation) == 4);
  CHECK(order(*gate("OR23").permutation) == 4);
}

TEST_CASE("cyclic increment laws") {
  const auto& x3 = *gate("X3").permutation;
  CHECK(x3 == Permutation({1, 2, 0}));
  CHECK(power(x3, 3) == Permutation::identity(3));
  CHECK(*gate("X3_INV").permutation == power(x3, 2));
  CHECK(*gate("X3_INV").permutation == inverse(x3));
  const Digit cells[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(gate("X3").matrix(r, c) == C(cells[r][c]));
}

TEST_CASE("Toffoli equals its projector expansion") {
  const auto p0 = projector(2, 0);
  const auto p1 = projector(2, 1);
  const auto expansion =
      tensor(tensor(p1, p1), gate("NOT").matrix) +
      tensor(tensor(p0, p0) + tensor(p0, p1) + tensor(p1, p0), ComplexMatrix::identity(2));
  CHECK(expansion == gate("TOFFOLI").matrix);
  CHECK(*gate("TOFFOLI").permutation == Permutation({0, 1, 2, 3, 4, 5, 7, 6}));
}

TEST_CASE("controlled step operators equal their projector sums") {
  const auto i3 = ComplexMatrix::identity(3);
  CHECK(conditional(3, {i3, gate("X3_INV").matrix, gate("X3").matrix}) ==
        gate("CX_STAR").matrix);
  CHECK(tensor(i3, i3 - projector(3, 2)) + tensor(gate("X3_INV").matrix, projector(3, 2)) ==
        gate("C2_STAR").matrix);
  CHECK(tensor(i3, i3 - projector(3, 1)) + tensor(gate("X3").matrix, projector(3, 1)) ==
        gate("C1").matrix);
}

TEST_CASE("fanout behavior") {
  const auto& or_c = *gate("OR_C").permutation;
  for (Digit b = 0; b < 2; ++b) CHECK(or_c(b) == 3 * b + b);  // OR_C(0,b) = (b,b)
  const auto and_inv = inverse(*gate("AND_C").permutation);
  const auto or_inv = inverse(or_c);
  for (Digit a = 0; a < 3; ++a) {
    CHECK(and_inv(3 * a) == 3 * a + a);
    CHECK(or_inv(3 * a) == 3 * a + a);
  }
}

TEST_CASE("registry invariants") {
  const auto names = gate_names();
  CHECK(names.size() == 13);
  for (const auto& name : names) {
    const Gate& g = gate(name);
    CHECK(g.name == name);
    REQUIRE(g.classical());
    CHECK(g.matrix == to_matrix(*g.permutation));
    CHECK(is_unitary(g.matrix));
  }
  CHECK_THROWS_AS(gate("NOSUCH"), std::invalid_argument);
}
