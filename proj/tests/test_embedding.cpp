#include <catch2/catch_amalgamated.hpp>

#include "revq/embedding.hpp"
#include "revq/gates.hpp"

using namespace revq;

TEST_CASE("Boolean AND embeds as the Toffoli gate") {
  const Embedding e = embed(TruthTable({2, 2}, {2}, {0, 0, 0, 1}));
  CHECK(e.combined_shape == RegisterShape{2, 2, 2});
  CHECK(e.permutation == Permutation({0, 1, 2, 3, 4, 5, 7, 6}));
  CHECK(e.report == EmbeddingReport{1, 2});
}

TEST_CASE("the identity bit embeds as CNOT") {
  const Embedding e = embed(TruthTable({2}, {2}, {0, 1}));
  CHECK(e.permutation == Permutation({0, 1, 3, 2}));
  CHECK(e.report == EmbeddingReport{1, 1});
}

TEST_CASE("a constant-zero function embeds as the identity") {
  const Embedding e = embed(TruthTable({2, 2}, {2}, {0, 0, 0, 0}));
  CHECK(e.permutation == Permutation::identity(8));
  CHECK(e.report.ancilla_wires == 1);
  CHECK(e.report.garbage_wires == 2);
}

TEST_CASE("restrict recovers every Boolean function of two bits") {
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Digit> cells(4);
    for (int i = 0; i < 4; ++i) cells[i] = (mask >> i) & 1;
    const TruthTable f({2, 2}, {2}, cells);
    const Embedding e = embed(f);
    CHECK(restrict_table(e) == f);
    CHECK(un_embed_check(e));
    CHECK(compose(inverse(e.permutation), e.permutation) == Permutation::identity(8));
  }
}

TEST_CASE("restrict recovers every unary ternary function") {
  for (int code = 0; code < 27; ++code) {
    const std::vector<Digit> cells{code % 3, (code / 3) % 3, (code / 9) % 3};
    const TruthTable f({3}, {3}, cells);
    const Embedding e = embed(f);
    CHECK(restrict_table(e) == f);
    CHECK(un_embed_check(e));
  }
}

TEST_CASE("input wires pass through unchanged") {
  const TruthTable f = TruthTable::from_function(
      {2, 3}, {3, 2}, [](const DigitWord& d) -> DigitWord {
        return {(d[0] + d[1]) % 3, (d[0] ^ (d[1] % 2))};
      });
  const Embedding e = embed(f);
  for (std::int64_t i = 0; i < e.combined_shape.dimension(); ++i) {
    const DigitWord in = index_to_digits(e.combined_shape, i);
    const DigitWord out = index_to_digits(e.combined_shape, e.permutation(static_cast<int>(i)));
    CHECK(DigitWord(out.begin(), out.begin() + 2) == DigitWord(in.begin(), in.begin() + 2));
  }
  CHECK(restrict_table(e) == f);
  CHECK(un_embed_check(e));
  CHECK(e.report == EmbeddingReport{2, 2});
}

TEST_CASE("the added offset is XOR on bits and mod-3 addition on trits") {
  const TruthTable f({2}, {2, 3}, {1, 2, 1, 1});  // f(0) = (1,2), f(1) = (1,1)
  const Embedding e = embed(f);
  for (std::int64_t i = 0; i < e.combined_shape.dimension(); ++i) {
    const DigitWord in = index_to_digits(e.combined_shape, i);
    const DigitWord out = index_to_digits(e.combined_shape, e.permutation(static_cast<int>(i)));
    const auto fa = f.row(in[0]);
    CHECK(out[1] == (in[1] ^ fa[0]));
    CHECK(out[2] == (in[2] + fa[1]) % 3);
  }
}

TEST_CASE("restricting CNOT itself yields the identity function") {
  const TruthTable t = restrict_table(*gate("CNOT").permutation, RegisterShape{2}, RegisterShape{2});
  CHECK(t == TruthTable({2}, {2}, {0, 1}));
}

TEST_CASE("shape mismatch is rejected") {
  CHECK_THROWS_AS(restrict_table(Permutation::identity(6), RegisterShape{2}, RegisterShape{2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(un_embed_check(Permutation::identity(6), RegisterShape{2}, RegisterShape{2}),
                  std::invalid_argument);
}
