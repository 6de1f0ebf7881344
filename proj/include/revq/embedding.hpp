#pragma once

#include <stdexcept>
#include <vector>

#include "revq/permutation.hpp"
#include "revq/radix.hpp"
#include "revq/truth_table.hpp"

namespace revq {

/// Ancilla/garbage bookkeeping for a reversible embedding: every output wire
/// of the embedded function costs one zero-initialized ancilla wire, and
/// every input wire is carried through as garbage.
struct EmbeddingReport {
  int ancilla_wires = 0;
  int garbage_wires = 0;

  friend bool operator==(const EmbeddingReport&, const EmbeddingReport&) = default;
};

/// A reversible embedding g : (a, b) -> (a, b + f(a)) of a total function f,
/// over the combined register [input wires of f ++ output wires of f].
/// Addition is per-wire modulo the output wire's radix.
struct Embedding {
  RegisterShape input_shape;
  RegisterShape output_shape;
  RegisterShape combined_shape;
  Permutation permutation;
  EmbeddingReport report;
};

/// Builds the embedding of f. Every total f embeds: for fixed a the map
/// b -> b + f(a) is a bijection on the ancilla wires, so g is a bijection.
inline Embedding embed(const TruthTable& f) {
  const RegisterShape combined = f.input_shape().concat(f.output_shape());
  const std::size_t n_in = f.input_shape().wires();
  const std::size_t n_out = f.output_shape().wires();
  std::vector<int> images(static_cast<std::size_t>(combined.dimension()));
  for (std::int64_t i = 0; i < combined.dimension(); ++i) {
    DigitWord word = index_to_digits(combined, i);
    const DigitWord a(word.begin(), word.begin() + n_in);
    const auto fa = f.row(digits_to_index(f.input_shape(), a));
    for (std::size_t w = 0; w < n_out; ++w)
      word[n_in + w] = (word[n_in + w] + fa[w]) % f.output_shape().radix(w);
    images[static_cast<std::size_t>(i)] = static_cast<int>(digits_to_index(combined, word));
  }
  return Embedding{f.input_shape(), f.output_shape(), combined,
                   Permutation(std::move(images)),
                   EmbeddingReport{static_cast<int>(n_out), static_cast<int>(n_in)}};
}

/// Reads the embedded function back out of a combined-shape permutation:
/// the table a -> output wires of g(a, 0).
inline TruthTable restrict_table(const Permutation& g, const RegisterShape& input_shape,
                                 const RegisterShape& output_shape) {
  const RegisterShape combined = input_shape.concat(output_shape);
  if (combined.dimension() != g.size())
    throw std::invalid_argument("restrict_table: permutation size does not match combined shape");
  const std::size_t n_in = input_shape.wires();
  std::vector<Digit> entries;
  entries.reserve(static_cast<std::size_t>(input_shape.dimension()) * output_shape.wires());
  for (std::int64_t a = 0; a < input_shape.dimension(); ++a) {
    DigitWord word = index_to_digits(input_shape, a);
    word.resize(combined.wires(), 0);  // ancilla wires start at zero
    const DigitWord image = index_to_digits(combined, g(static_cast<int>(digits_to_index(combined, word))));
    entries.insert(entries.end(), image.begin() + n_in, image.end());
  }
  return TruthTable(input_shape, output_shape, std::move(entries));
}

inline TruthTable restrict_table(const Embedding& e) {
  return restrict_table(e.permutation, e.input_shape, e.output_shape);
}

/// Checks that the inverse of g subtracts what g adds: inverse(g) maps
/// (a, b) to (a, b - f(a)) for every input, with f recovered via
/// restrict_table. Exhaustive over the combined register.
inline bool un_embed_check(const Permutation& g, const RegisterShape& input_shape,
                           const RegisterShape& output_shape) {
  const RegisterShape combined = input_shape.concat(output_shape);
  if (combined.dimension() != g.size())
    throw std::invalid_argument("un_embed_check: permutation size does not match combined shape");
  const TruthTable f = restrict_table(g, input_shape, output_shape);
  const Permutation g_inv = inverse(g);
  const std::size_t n_in = input_shape.wires();
  for (std::int64_t i = 0; i < combined.dimension(); ++i) {
    DigitWord word = index_to_digits(combined, i);
    const DigitWord a(word.begin(), word.begin() + n_in);
    const auto fa = f.row(digits_to_index(input_shape, a));
    DigitWord expected = word;
    for (std::size_t w = 0; w < output_shape.wires(); ++w) {
      const int radix = output_shape.radix(w);
      expected[n_in + w] = ((word[n_in + w] - fa[w]) % radix + radix) % radix;
    }
    if (g_inv(static_cast<int>(i)) != digits_to_index(combined, expected)) return false;
  }
  return true;
}

inline bool un_embed_check(const Embedding& e) {
  return un_embed_check(e.permutation, e.input_shape, e.output_shape);
}

}  // namespace revq
