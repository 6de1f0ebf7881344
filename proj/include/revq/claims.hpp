#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "revq/circuit.hpp"
#include "revq/embedding.hpp"
#include "revq/enumeration.hpp"
#include "revq/gates.hpp"
#include "revq/matrix.hpp"
#include "revq/permutation.hpp"

namespace revq {

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

/// One independently checkable claim with a stable identifier.
struct Claim {
  std::string id;
  std::string summary;
  std::function<ClaimResult()> run;
};

namespace claims_detail {

// Reference tables, row-major over lexicographic inputs.
inline constexpr Digit kAnd23[6][2] = {{0, 0}, {0, 1}, {1, 2}, {0, 2}, {1, 0}, {1, 1}};
inline constexpr Digit kOr23[6][2] = {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {1, 0}, {0, 1}};
inline constexpr Digit kCyclicAnd[3][3] = {{0, 0, 2}, {0, 1, 1}, {2, 1, 2}};
inline constexpr Digit kCyclicOr[3][3] = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
inline constexpr Digit kLukAnd[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
inline constexpr Digit kLukOr[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
inline constexpr Digit kAndC[9][2] = {{0, 0}, {0, 1}, {2, 2}, {0, 2}, {1, 0},
                                      {1, 1}, {2, 1}, {1, 2}, {2, 0}};
inline constexpr Digit kOrC[9][2] = {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {1, 0},
                                     {2, 1}, {0, 1}, {2, 2}, {2, 0}};
inline constexpr Digit kX3Matrix[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
inline constexpr Digit kX3InvMatrix[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};

inline ClaimResult pass(std::string detail) { return {true, std::move(detail)}; }
inline ClaimResult fail(std::string detail) { return {false, std::move(detail)}; }

template <std::size_t N>
bool gate_matches_rows(const Gate& g, const Digit (&rows)[N][2]) {
  if (static_cast<std::size_t>(g.shape.dimension()) != N) return false;
  for (std::size_t i = 0; i < N; ++i) {
    const auto got = index_to_digits(g.shape, g.permutation->operator()(static_cast<int>(i)));
    if (got[0] != rows[i][0] || got[1] != rows[i][1]) return false;
  }
  return true;
}

inline bool matrix_is(const ComplexMatrix& m, const Digit (&cells)[3][3]) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (m(r, c) != ComplexMatrix::value_type(cells[r][c])) return false;
  return true;
}

inline TruthTable table_of(Digit (*fn)(Digit, Digit)) {
  return TruthTable::from_function({3, 3}, {3}, [fn](const DigitWord& d) -> DigitWord {
    return {fn(d[0], d[1])};
  });
}

inline ClaimResult check_twotri_tables() {
  if (!gate_matches_rows(gate("AND23"), kAnd23)) return fail("AND23 rows differ");
  if (!gate_matches_rows(gate("OR23"), kOr23)) return fail("OR23 rows differ");
  // Boolean corner restriction in the first output.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (index_to_digits({2, 3}, (*gate("AND23").permutation)(3 * a + b))[0] != (a & b))
        return fail("AND23 does not restrict to Boolean AND");
      if (index_to_digits({2, 3}, (*gate("OR23").permutation)(3 * a + b))[0] != (a | b))
        return fail("OR23 does not restrict to Boolean OR");
    }
  // Two-step construction: b -> b - a (mod 3), then NOT on the bit wire
  // controlled on b = 2 (AND) or b = 1 (OR).
  const RegisterShape shape{2, 3};
  const auto sub = permutation_from_table(TruthTable::from_function(
      shape, shape, [](const DigitWord& d) -> DigitWord { return {d[0], (d[1] - d[0] + 3) % 3}; }));
  const auto not_if2 = permutation_from_table(TruthTable::from_function(
      shape, shape, [](const DigitWord& d) -> DigitWord { return {d[1] == 2 ? 1 - d[0] : d[0], d[1]}; }));
  const auto not_if1 = permutation_from_table(TruthTable::from_function(
      shape, shape, [](const DigitWord& d) -> DigitWord { return {d[1] == 1 ? 1 - d[0] : d[0], d[1]}; }));
  if (compose(not_if2, sub) != *gate("AND23").permutation)
    return fail("two-step construction does not rebuild AND23");
  if (compose(not_if1, sub) != *gate("OR23").permutation)
    return fail("two-step construction does not rebuild OR23");
  return pass("rows=12 construction=ok");
}

inline ClaimResult check_cyclog_tables() {
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b) {
      if (cyclic_and(a, b) != kCyclicAnd[a][b]) return fail("cyclic AND cell differs");
      if (cyclic_or(a, b) != kCyclicOr[a][b]) return fail("cyclic OR cell differs");
    }
  const bool relation = cyclic_precedes(0, 1) && cyclic_precedes(1, 2) && cyclic_precedes(2, 0) &&
                        !cyclic_precedes(1, 0) && !cyclic_precedes(2, 1) && !cyclic_precedes(0, 2);
  if (!relation) return fail("cyclic relation differs from 0->1->2->0");
  return pass("cells=18");
}

inline ClaimResult check_luklog_tables() {
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b) {
      if (lukasiewicz_and(a, b) != kLukAnd[a][b]) return fail("Lukasiewicz AND cell differs");
      if (lukasiewicz_or(a, b) != kLukOr[a][b]) return fail("Lukasiewicz OR cell differs");
    }
  return pass("cells=18");
}

inline ClaimResult check_tritri_tables() {
  if (!gate_matches_rows(gate("AND_C"), kAndC)) return fail("AND_C rows differ");
  if (!gate_matches_rows(gate("OR_C"), kOrC)) return fail("OR_C rows differ");
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b) {
      const auto and_row = index_to_digits({3, 3}, (*gate("AND_C").permutation)(3 * a + b));
      const auto or_row = index_to_digits({3, 3}, (*gate("OR_C").permutation)(3 * a + b));
      if (and_row[0] != cyclic_and(a, b) || and_row[1] != (b - a + 3) % 3)
        return fail("AND_C does not follow (cyclic AND, b - a)");
      if (or_row[0] != cyclic_or(a, b) || or_row[1] != (b - a + 3) % 3)
        return fail("OR_C does not follow (cyclic OR, b - a)");
      if (a < 2 && b < 2) {
        if (and_row[0] != (a & b)) return fail("AND_C does not restrict to Boolean AND");
        if (or_row[0] != (a | b)) return fail("OR_C does not restrict to Boolean OR");
      }
    }
  return pass("rows=18");
}

inline ClaimResult check_and_decomposition() {
  const auto& and_c = *gate("AND_C").permutation;
  const auto& or_c = *gate("OR_C").permutation;
  if (compose(*gate("C2_STAR").permutation, *gate("CX_STAR").permutation) != and_c)
    return fail("C2_STAR after CX_STAR != AND_C");
  if (compose(*gate("C1").permutation, *gate("CX_STAR").permutation) != or_c)
    return fail("C1 after CX_STAR != OR_C");
  if (!approx_equal(gate("C2_STAR").matrix * gate("CX_STAR").matrix, gate("AND_C").matrix))
    return fail("matrix product differs for AND_C");
  if (!approx_equal(gate("C1").matrix * gate("CX_STAR").matrix, gate("OR_C").matrix))
    return fail("matrix product differs for OR_C");
  return pass("permutations=exact matrices<=1e-12");
}

inline ClaimResult check_conditional_dynamics() {
  const auto i2 = ComplexMatrix::identity(2);
  const auto i3 = ComplexMatrix::identity(3);
  const auto i4 = ComplexMatrix::identity(4);
  const auto& not_m = gate("NOT").matrix;
  if (conditional(2, {i2, not_m}) != gate("CNOT").matrix)
    return fail("conditional(2,[I,NOT]) != CNOT matrix");
  if (conditional(2, {i4, conditional(2, {i2, not_m})}) != gate("TOFFOLI").matrix)
    return fail("nested conditional != Toffoli matrix");
  if (conditional(3, {i3, gate("X3_INV").matrix, gate("X3").matrix}) != gate("CX_STAR").matrix)
    return fail("projector sum != CX_STAR matrix");
  const auto c2 = tensor(i3, i3 - projector(3, 2)) + tensor(gate("X3_INV").matrix, projector(3, 2));
  const auto c1 = tensor(i3, i3 - projector(3, 1)) + tensor(gate("X3").matrix, projector(3, 1));
  if (c2 != gate("C2_STAR").matrix) return fail("projector sum != C2_STAR matrix");
  if (c1 != gate("C1").matrix) return fail("projector sum != C1 matrix");
  return pass("CNOT, Toffoli, CX_STAR, C2_STAR, C1 all exact");
}

inline ClaimResult check_toffoli_projector() {
  const auto p0 = projector(2, 0);
  const auto p1 = projector(2, 1);
  const auto expansion =
      tensor(tensor(p1, p1), gate("NOT").matrix) +
      tensor(tensor(p0, p0) + tensor(p0, p1) + tensor(p1, p0), ComplexMatrix::identity(2));
  if (expansion != gate("TOFFOLI").matrix) return fail("projector expansion != Toffoli matrix");
  return pass("entries=0/1 exact");
}

inline ClaimResult check_x3_laws() {
  const auto& x3 = *gate("X3").permutation;
  const auto& x3_inv = *gate("X3_INV").permutation;
  if (power(x3, 3) != Permutation::identity(3)) return fail("X3^3 != identity");
  if (x3_inv != power(x3, 2)) return fail("X3_INV != X3^2");
  if (x3_inv != inverse(x3)) return fail("X3_INV != inverse(X3)");
  if (!matrix_is(gate("X3").matrix, kX3Matrix)) return fail("X3 matrix cells differ");
  if (!matrix_is(gate("X3_INV").matrix, kX3InvMatrix)) return fail("X3_INV matrix cells differ");
  return pass("X3^3=id X3_INV=X3^2 matrices=exact");
}

inline ClaimResult check_order_7() {
  const auto& and_c = *gate("AND_C").permutation;
  const auto& or_c = *gate("OR_C").permutation;
  const auto o_and = order(and_c);
  const auto o_or = order(or_c);
  if (o_and != 7 || o_or != 7) {
    std::ostringstream msg;
    msg << "AND_C=" << o_and << " OR_C=" << o_or << " expected 7";
    return fail(msg.str());
  }
  if (power(and_c, 7) != Permutation::identity(9)) return fail("AND_C^7 != identity");
  if (power(or_c, 7) != Permutation::identity(9)) return fail("OR_C^7 != identity");
  if (power(and_c, 6) != inverse(and_c)) return fail("AND_C^6 != inverse");
  if (power(or_c, 6) != inverse(or_c)) return fail("OR_C^6 != inverse");
  if (order(*gate("TOFFOLI").permutation) != 2) return fail("order(TOFFOLI) != 2");
  if (order(*gate("X3").permutation) != 3) return fail("order(X3) != 3");
  return pass("AND_C=7 OR_C=7 TOFFOLI=2 X3=3");
}

inline ClaimResult check_demorgan() {
  for (Digit a = 0; a < 3; ++a)
    for (Digit b = 0; b < 3; ++b)
      if (ternary_not(cyclic_and(a, b)) != cyclic_or(ternary_not(a), ternary_not(b)))
        return fail("De Morgan fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return pass("pairs=9");
}

inline ClaimResult check_law_counterexamples() {
  int total = 0;
  int few_valued = 0;
  for (const auto op : {TernaryLogicOp::cyclic_and, TernaryLogicOp::cyclic_or})
    for (const auto law : {LogicLaw::associativity, LogicLaw::distributivity}) {
      const auto found = find_law_counterexamples(op, law);
      if (found.triples.empty()) return fail("a law has no counterexample");
      total += static_cast<int>(found.triples.size());
      few_valued += static_cast<int>(found.few_valued.size());
    }
  // Boolean corner stays associative.
  for (Digit a = 0; a < 2; ++a)
    for (Digit b = 0; b < 2; ++b)
      for (Digit c = 0; c < 2; ++c) {
        if (cyclic_and(cyclic_and(a, b), c) != cyclic_and(a, cyclic_and(b, c)))
          return fail("Boolean corner violates AND associativity");
        if (cyclic_or(cyclic_or(a, b), c) != cyclic_or(a, cyclic_or(b, c)))
          return fail("Boolean corner violates OR associativity");
      }
  std::ostringstream msg;
  msg << "violations=" << total << " with<=2values=" << few_valued << " boolean-corner=clean";
  return pass(msg.str());
}

inline ClaimResult check_luklog_unbalanced() {
  if (is_balanced_component(table_of(lukasiewicz_and), 0))
    return fail("Lukasiewicz AND reported balanced");
  if (is_balanced_component(table_of(lukasiewicz_or), 0))
    return fail("Lukasiewicz OR reported balanced");
  for (const auto& name : gate_names()) {
    const Gate& g = gate(name);
    const TruthTable t = to_truth_table(*g.permutation, g.shape);
    for (int c = 0; c < static_cast<int>(g.shape.wires()); ++c)
      if (!is_balanced_component(t, c))
        return fail("gate " + name + " component " + std::to_string(c) + " unbalanced");
  }
  return pass("lukasiewicz=unbalanced library-gates=balanced");
}

inline ClaimResult check_count_2160() {
  std::int64_t sums[2] = {0, 0};
  int idx = 0;
  for (const auto& base : {boolean_and_base(), boolean_or_base()}) {
    const ExtensionQuery q{base, {3, 3}, 0};
    const auto structured = enumerate_extensions(q, ScanMode::structured);
    const auto scanned = enumerate_extensions(q, ScanMode::full_scan);
    if (structured.size() != 2160) {
      std::ostringstream msg;
      msg << "expected=2160 got=" << structured.size();
      return fail(msg.str());
    }
    if (structured != scanned) return fail("structured search differs from 9!-scan oracle");
    for (const auto& f1 : enumerate_balanced_f1(base)) sums[idx] += count_f2_completions(f1);
    ++idx;
  }
  if (sums[0] != 2160 || sums[1] != 2160) return fail("sum of f2 completions != 2160");
  const auto and_list = enumerate_extensions({boolean_and_base(), {3, 3}, 0});
  const auto or_list = enumerate_extensions({boolean_or_base(), {3, 3}, 0});
  if (std::find(and_list.begin(), and_list.end(), *gate("AND_C").permutation) == and_list.end())
    return fail("AND_C missing from its extension list");
  if (std::find(or_list.begin(), or_list.end(), *gate("OR_C").permutation) == or_list.end())
    return fail("OR_C missing from its extension list");
  return pass("expected=2160 got=2160 (AND and OR, scan-validated)");
}

inline ClaimResult check_balanced_10() {
  const auto and_tables = enumerate_balanced_f1(boolean_and_base());
  const auto or_tables = enumerate_balanced_f1(boolean_or_base());
  if (and_tables.size() != 10 || or_tables.size() != 10) {
    std::ostringstream msg;
    msg << "expected=10 got AND=" << and_tables.size() << " OR=" << or_tables.size();
    return fail(msg.str());
  }
  if (std::find(and_tables.begin(), and_tables.end(), table_of(cyclic_and)) == and_tables.end())
    return fail("cyclic AND table missing from candidates");
  if (std::find(or_tables.begin(), or_tables.end(), table_of(cyclic_or)) == or_tables.end())
    return fail("cyclic OR table missing from candidates");
  return pass("expected=10 got=10 (both bases, cyclic tables present)");
}

inline ClaimResult check_symmetric_2() {
  const auto and_sym = filter_symmetric(enumerate_balanced_f1(boolean_and_base()));
  const auto or_sym = filter_symmetric(enumerate_balanced_f1(boolean_or_base()));
  if (and_sym.size() != 2 || or_sym.size() != 2) {
    std::ostringstream msg;
    msg << "expected=2 got AND=" << and_sym.size() << " OR=" << or_sym.size();
    return fail(msg.str());
  }
  if (std::find(and_sym.begin(), and_sym.end(), table_of(cyclic_and)) == and_sym.end())
    return fail("cyclic AND table not among the symmetric pair");
  if (std::find(or_sym.begin(), or_sym.end(), table_of(cyclic_or)) == or_sym.end())
    return fail("cyclic OR table not among the symmetric pair");
  return pass("expected=2 got=2 (both bases, cyclic tables present)");
}

inline ClaimResult check_extensions_23() {
  const auto and_res = enumerate_extensions_23(boolean_and_base());
  const auto or_res = enumerate_extensions_23(boolean_or_base());
  std::ostringstream msg;
  msg << "unconstrained AND=" << and_res.all.size() << " OR=" << or_res.all.size()
      << " relabelings AND=" << and_res.global_relabel_count
      << " OR=" << or_res.global_relabel_count;
  if (and_res.all.size() != 36 || or_res.all.size() != 36) return fail(msg.str());
  if (and_res.global_relabel_count != 6 || or_res.global_relabel_count != 6)
    return fail(msg.str());
  if (std::find(and_res.all.begin(), and_res.all.end(), *gate("AND23").permutation) ==
      and_res.all.end())
    return fail("AND23 missing from [2,3] extensions");
  if (std::find(or_res.all.begin(), or_res.all.end(), *gate("OR23").permutation) ==
      or_res.all.end())
    return fail("OR23 missing from [2,3] extensions");
  return pass(msg.str());
}

inline ClaimResult check_fanout() {
  const auto& or_c = *gate("OR_C").permutation;
  for (Digit b = 0; b < 2; ++b)
    if (or_c(b) != 3 * b + b) return fail("OR_C(0,b) != (b,b) for binary b");
  const auto and_inv = inverse(*gate("AND_C").permutation);
  const auto or_inv = inverse(or_c);
  for (Digit a = 0; a < 3; ++a) {
    if (and_inv(3 * a) != 3 * a + a) return fail("inverse AND_C (a,0) != (a,a)");
    if (or_inv(3 * a) != 3 * a + a) return fail("inverse OR_C (a,0) != (a,a)");
  }
  return pass("binary fanout via OR_C, ternary fanout via both inverses");
}

inline ClaimResult check_embed_roundtrip() {
  // All 16 Boolean functions of two bits.
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Digit> cells(4);
    for (int i = 0; i < 4; ++i) cells[i] = (mask >> i) & 1;
    const TruthTable f({2, 2}, {2}, cells);
    const Embedding e = embed(f);
    if (restrict_table(e) != f) return fail("restrict(embed(f)) != f for a Boolean f");
    if (!un_embed_check(e)) return fail("inverse embedding check failed for a Boolean f");
    if (compose(inverse(e.permutation), e.permutation) != Permutation::identity(e.permutation.size()))
      return fail("inverse-then-forward not identity for a Boolean f");
  }
  // All 27 ternary unary functions.
  for (int code = 0; code < 27; ++code) {
    const std::vector<Digit> cells{code % 3, (code / 3) % 3, (code / 9) % 3};
    const TruthTable f({3}, {3}, cells);
    const Embedding e = embed(f);
    if (restrict_table(e) != f) return fail("restrict(embed(f)) != f for a ternary f");
    if (!un_embed_check(e)) return fail("inverse embedding check failed for a ternary f");
  }
  const Embedding and_embed = embed(boolean_and_base());
  if (and_embed.permutation != *gate("TOFFOLI").permutation)
    return fail("embed(Boolean AND) != Toffoli");
  if (and_embed.report != EmbeddingReport{1, 2}) return fail("embed(AND) report != (1 ancilla, 2 garbage)");
  const Embedding id_embed = embed(TruthTable({2}, {2}, {0, 1}));
  if (id_embed.permutation != *gate("CNOT").permutation)
    return fail("embed(identity bit) != CNOT");
  return pass("functions=43 embed(AND)=Toffoli embed(id)=CNOT");
}

inline ClaimResult check_quantum_classical_agreement() {
  for (const auto& name : gate_names()) {
    const Gate& g = gate(name);
    if (!is_unitary(g.matrix)) return fail("gate " + name + " matrix not unitary");
    for (std::int64_t i = 0; i < g.shape.dimension(); ++i) {
      const auto out = apply(g.matrix, StateVector::basis(g.shape, i));
      const int target = (*g.permutation)(static_cast<int>(i));
      for (std::int64_t j = 0; j < g.shape.dimension(); ++j) {
        const double expected = j == target ? 1.0 : 0.0;
        if (std::abs(out.amplitude(static_cast<std::size_t>(j)) -
                     ComplexMatrix::value_type(expected)) > kUnitaryTol)
          return fail("gate " + name + " quantum/classical mismatch on basis state");
      }
    }
  }
  if (max_abs_diff(not_path(0.0), ComplexMatrix::identity(2)) > kUnitaryTol)
    return fail("not_path(0) != I");
  if (max_abs_diff(not_path(1.0), gate("NOT").matrix) > kUnitaryTol)
    return fail("not_path(1) != NOT");
  for (int k = 0; k <= 19; ++k) {
    const double t = k / 19.0;
    const auto u = not_path(t);
    if (!is_unitary(u)) return fail("not_path(t) not unitary");
    const auto s = apply(u, StateVector::basis(RegisterShape{2}, 0));
    double norm2 = 0.0;
    for (const auto& amp : s.amplitudes()) norm2 += std::norm(amp);
    if (std::abs(norm2 - 1.0) > kUnitaryTol) return fail("not_path(t) does not preserve norm");
  }
  return pass("gates=13 basis-states=all not_path endpoints+20 samples ok");
}

}  // namespace claims_detail

/// Every verifiable claim, in fixed report order. The CLI `verify` command
/// and the acceptance suite both draw from this inventory.
inline const std::vector<Claim>& claim_registry() {
  using namespace claims_detail;
  static const std::vector<Claim> claims = {
      {"twotri-tables", "bit/trit AND and OR tables, corner restriction, two-step construction",
       check_twotri_tables},
      {"cyclog-tables", "cyclic ternary AND/OR truth tables and the cyclic relation",
       check_cyclog_tables},
      {"luklog-tables", "three-valued MIN/MAX truth tables", check_luklog_tables},
      {"tritri-tables", "two-trit AND/OR tables, component formulas, corner restriction",
       check_tritri_tables},
      {"and-decomposition", "AND/OR gates factor into their two step operators",
       check_and_decomposition},
      {"conditional-dynamics", "controlled operators equal their projector sums",
       check_conditional_dynamics},
      {"toffoli-projector", "Toffoli matrix equals its projector expansion",
       check_toffoli_projector},
      {"x3-laws", "cyclic-increment laws and its matrix cells", check_x3_laws},
      {"order-7", "gate periods: ternary AND/OR = 7, Toffoli = 2, X3 = 3", check_order_7},
      {"demorgan", "De Morgan identity for cyclic AND/OR under (1 - a) mod 3",
       check_demorgan},
      {"law-counterexamples", "associativity and distributivity fail; Boolean corner clean",
       check_law_counterexamples},
      {"luklog-unbalanced", "MIN/MAX tables unbalanced; every library gate balanced",
       check_luklog_unbalanced},
      {"count-2160", "2160 reversible extensions per base gate, scan-validated",
       check_count_2160},
      {"balanced-10", "ten balanced first-component candidates per base gate",
       check_balanced_10},
      {"symmetric-2", "exactly two symmetric candidates per base gate", check_symmetric_2},
      {"extensions-23", "bit/trit search: 36 unconstrained, 6 up to trit relabeling",
       check_extensions_23},
      {"fanout", "fanout behavior of OR gate and of both inverses", check_fanout},
      {"embed-roundtrip", "reversible embedding round-trips all small functions",
       check_embed_roundtrip},
      {"quantum-classical-agreement", "matrix simulation matches permutation action",
       check_quantum_classical_agreement},
  };
  return claims;
}

inline const Claim* find_claim(const std::string& id) {
  for (const auto& claim : claim_registry())
    if (claim.id == id) return &claim;
  return nullptr;
}

}  // namespace revq
