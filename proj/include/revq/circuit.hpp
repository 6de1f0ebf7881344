#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revq/gates.hpp"
#include "revq/matrix.hpp"
#include "revq/permutation.hpp"
#include "revq/radix.hpp"

namespace revq {

/// One gate application: a library gate name and the register wires it acts
/// on, in gate-wire order.
struct CircuitStep {
  std::string gate_name;
  std::vector<int> wires;

  friend bool operator==(const CircuitStep&, const CircuitStep&) = default;
};

/// Ordered gate applications over a mixed-radix register. Immutable in use:
/// append returns an extended copy.
class Circuit {
 public:
  explicit Circuit(RegisterShape shape) : shape_(std::move(shape)) {}

  const RegisterShape& shape() const { return shape_; }
  const std::vector<CircuitStep>& steps() const { return steps_; }

  /// Extended circuit with one more step. The wire list must name distinct
  /// in-range wires whose radices match the gate's shape in order.
  Circuit append(const std::string& gate_name, const std::vector<int>& wires) const {
    const Gate& g = gate(gate_name);
    if (wires.size() != g.shape.wires())
      throw std::invalid_argument("append: gate " + gate_name + " needs " +
                                  std::to_string(g.shape.wires()) + " wires, got " +
                                  std::to_string(wires.size()));
    std::vector<bool> used(shape_.wires(), false);
    for (std::size_t k = 0; k < wires.size(); ++k) {
      const int w = wires[k];
      if (w < 0 || w >= static_cast<int>(shape_.wires()))
        throw std::out_of_range("append: wire " + std::to_string(w) + " out of range");
      if (used[w]) throw std::invalid_argument("append: duplicate wire " + std::to_string(w));
      used[w] = true;
      if (shape_.radix(w) != g.shape.radix(k))
        throw std::invalid_argument("append: wire " + std::to_string(w) + " has radix " +
                                    std::to_string(shape_.radix(w)) + ", gate " + gate_name +
                                    " expects " + std::to_string(g.shape.radix(k)));
    }
    Circuit out = *this;
    out.steps_.push_back(CircuitStep{gate_name, wires});
    return out;
  }

 private:
  RegisterShape shape_;
  std::vector<CircuitStep> steps_;
};

namespace detail {

// Applies one classical step to a digit word in place.
inline void apply_step_classical(const CircuitStep& step, DigitWord& word) {
  const Gate& g = gate(step.gate_name);
  if (!g.classical())
    throw std::invalid_argument("classical simulation: gate " + step.gate_name +
                                " has no permutation");
  DigitWord local(step.wires.size());
  for (std::size_t k = 0; k < step.wires.size(); ++k) local[k] = word[step.wires[k]];
  const DigitWord image =
      index_to_digits(g.shape, (*g.permutation)(static_cast<int>(digits_to_index(g.shape, local))));
  for (std::size_t k = 0; k < step.wires.size(); ++k) word[step.wires[k]] = image[k];
}

}  // namespace detail

/// Runs the circuit on a digit word. All gates must be classical.
inline DigitWord simulate_classical(const Circuit& c, const DigitWord& input) {
  if (!digits_valid(c.shape(), input))
    throw std::invalid_argument("simulate_classical: input does not fit the register");
  DigitWord word = input;
  for (const CircuitStep& step : c.steps()) detail::apply_step_classical(step, word);
  return word;
}

/// Whole-register operator acting as the gate on the selected wires (in the
/// listed order) and as the identity elsewhere. Built column by column:
/// decompose the basis index, feed the selected digits through the gate
/// matrix, reassemble. Handles reordered and non-adjacent wire lists.
inline ComplexMatrix lift(const Gate& g, const std::vector<int>& wires,
                          const RegisterShape& shape) {
  if (wires.size() != g.shape.wires())
    throw std::invalid_argument("lift: wire count does not match gate arity");
  for (std::size_t k = 0; k < wires.size(); ++k) {
    const int w = wires[k];
    if (w < 0 || w >= static_cast<int>(shape.wires()))
      throw std::out_of_range("lift: wire " + std::to_string(w) + " out of range");
    if (shape.radix(w) != g.shape.radix(k))
      throw std::invalid_argument("lift: radix mismatch on wire " + std::to_string(w));
  }
  const std::int64_t dim = shape.dimension();
  check_dense_dimension(dim);
  ComplexMatrix out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  const std::int64_t local_dim = g.shape.dimension();
  for (std::int64_t col = 0; col < dim; ++col) {
    DigitWord word = index_to_digits(shape, col);
    DigitWord local(wires.size());
    for (std::size_t k = 0; k < wires.size(); ++k) local[k] = word[wires[k]];
    const std::int64_t lcol = digits_to_index(g.shape, local);
    for (std::int64_t lrow = 0; lrow < local_dim; ++lrow) {
      const auto amp = g.matrix(static_cast<std::size_t>(lrow), static_cast<std::size_t>(lcol));
      if (amp == ComplexMatrix::value_type{}) continue;
      const DigitWord image = index_to_digits(g.shape, lrow);
      for (std::size_t k = 0; k < wires.size(); ++k) word[wires[k]] = image[k];
      out(static_cast<std::size_t>(digits_to_index(shape, word)), static_cast<std::size_t>(col)) =
          amp;
    }
  }
  return out;
}

/// Runs the circuit on a state vector by applying each lifted step operator.
/// On basis states of a classical circuit this agrees with simulate_classical.
inline StateVector simulate_quantum(const Circuit& c, const StateVector& input) {
  if (input.shape() != c.shape())
    throw std::invalid_argument("simulate_quantum: state shape does not match circuit");
  StateVector state = input;
  for (const CircuitStep& step : c.steps())
    state = apply(lift(gate(step.gate_name), step.wires, c.shape()), state);
  return state;
}

/// Circuit with the inverse action: steps reversed, each gate replaced by
/// its inverse. Gates whose inverse is itself a library gate map to that
/// gate; the rest expand to order-1 repetitions of the same gate (e.g. the
/// order-7 ternary AND inverts as six consecutive applications).
inline Circuit inverse_circuit(const Circuit& c) {
  Circuit out(c.shape());
  for (auto it = c.steps().rbegin(); it != c.steps().rend(); ++it) {
    const Gate& g = gate(it->gate_name);
    if (!g.classical())
      throw std::invalid_argument("inverse_circuit: gate " + it->gate_name +
                                  " has no permutation");
    if (it->gate_name == "X3") {
      out = out.append("X3_INV", it->wires);
    } else if (it->gate_name == "X3_INV") {
      out = out.append("X3", it->wires);
    } else {
      const std::int64_t n = order(*g.permutation);
      for (std::int64_t k = 0; k + 1 < n; ++k) out = out.append(it->gate_name, it->wires);
      if (n == 1) continue;  // identity gate needs no step
    }
  }
  return out;
}

/// Whole-circuit permutation. Requires an all-classical circuit.
inline Permutation as_permutation(const Circuit& c) {
  const std::int64_t dim = c.shape().dimension();
  std::vector<int> images(static_cast<std::size_t>(dim));
  for (std::int64_t i = 0; i < dim; ++i) {
    const DigitWord out = simulate_classical(c, index_to_digits(c.shape(), i));
    images[static_cast<std::size_t>(i)] = static_cast<int>(digits_to_index(c.shape(), out));
  }
  return Permutation(std::move(images));
}

/// Whole-circuit unitary: the product of the lifted step operators.
inline ComplexMatrix as_matrix(const Circuit& c) {
  const std::int64_t dim = c.shape().dimension();
  check_dense_dimension(dim);
  ComplexMatrix acc = ComplexMatrix::identity(static_cast<std::size_t>(dim));
  for (const CircuitStep& step : c.steps())
    acc = lift(gate(step.gate_name), step.wires, c.shape()) * acc;
  return acc;
}

/// Text format: first non-comment line `wires: r1 r2 ...`, then one line per
/// step `gate NAME w1 w2 ...`. `#` starts a comment; blank lines are ignored.
inline Circuit parse_circuit(std::istream& in) {
  std::string line;
  bool have_shape = false;
  Circuit circuit({2});
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;  // blank
    if (!have_shape) {
      if (head != "wires:")
        throw std::invalid_argument("circuit: expected 'wires:' header, got '" + head + "'");
      std::vector<int> radices;
      int r;
      while (tokens >> r) radices.push_back(r);
      if (!tokens.eof()) throw std::invalid_argument("circuit: malformed radix list");
      circuit = Circuit(RegisterShape(radices));
      have_shape = true;
    } else {
      if (head != "gate")
        throw std::invalid_argument("circuit: expected 'gate' line, got '" + head + "'");
      std::string name;
      if (!(tokens >> name)) throw std::invalid_argument("circuit: missing gate name");
      std::vector<int> wires;
      int w;
      while (tokens >> w) wires.push_back(w);
      if (!tokens.eof()) throw std::invalid_argument("circuit: malformed wire list");
      circuit = circuit.append(name, wires);
    }
  }
  if (!have_shape) throw std::invalid_argument("circuit: missing 'wires:' header");
  return circuit;
}

inline void format_circuit(std::ostream& out, const Circuit& c) {
  out << "wires:";
  for (int r : c.shape().radices()) out << ' ' << r;
  out << '\n';
  for (const CircuitStep& step : c.steps()) {
    out << "gate " << step.gate_name;
    for (int w : step.wires) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace revq
