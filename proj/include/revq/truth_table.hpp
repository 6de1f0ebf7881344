#pragma once

#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revq/radix.hpp"

namespace revq {

/// Total (possibly irreversible) function between mixed-radix registers,
/// stored as one output word per input index in lexicographic input order.
class TruthTable {
 public:
  TruthTable(RegisterShape input_shape, RegisterShape output_shape, std::vector<Digit> entries)
      : input_(std::move(input_shape)), output_(std::move(output_shape)), entries_(std::move(entries)) {
    const std::int64_t rows = input_.dimension();
    const std::size_t width = output_.wires();
    if (entries_.size() != static_cast<std::size_t>(rows) * width)
      throw std::invalid_argument("TruthTable: entry count does not match shapes");
    for (std::int64_t i = 0; i < rows; ++i)
      for (std::size_t w = 0; w < width; ++w) {
        const Digit d = entries_[static_cast<std::size_t>(i) * width + w];
        if (d < 0 || d >= output_.radix(w))
          throw std::out_of_range("TruthTable: output digit " + std::to_string(d) +
                                  " out of range for radix " + std::to_string(output_.radix(w)));
      }
  }

  /// Builds the table by evaluating fn on every input word.
  static TruthTable from_function(const RegisterShape& input_shape,
                                  const RegisterShape& output_shape,
                                  const std::function<DigitWord(const DigitWord&)>& fn) {
    std::vector<Digit> entries;
    entries.reserve(static_cast<std::size_t>(input_shape.dimension()) * output_shape.wires());
    for (std::int64_t i = 0; i < input_shape.dimension(); ++i) {
      const DigitWord out = fn(index_to_digits(input_shape, i));
      if (out.size() != output_shape.wires())
        throw std::invalid_argument("TruthTable::from_function: wrong output width");
      entries.insert(entries.end(), out.begin(), out.end());
    }
    return TruthTable(input_shape, output_shape, std::move(entries));
  }

  const RegisterShape& input_shape() const { return input_; }
  const RegisterShape& output_shape() const { return output_; }
  std::int64_t rows() const { return input_.dimension(); }

  /// Output word for the input with the given flat index.
  std::span<const Digit> row(std::int64_t index) const {
    if (index < 0 || index >= rows()) throw std::out_of_range("TruthTable::row: index out of range");
    const std::size_t width = output_.wires();
    return {entries_.data() + static_cast<std::size_t>(index) * width, width};
  }

  DigitWord apply(const DigitWord& input) const {
    const auto r = row(digits_to_index(input_, input));
    return DigitWord(r.begin(), r.end());
  }

  /// Row-major serialization of all output digits.
  const std::vector<Digit>& flat() const { return entries_; }

  friend bool operator==(const TruthTable& a, const TruthTable& b) = default;

 private:
  RegisterShape input_;
  RegisterShape output_;
  std::vector<Digit> entries_;
};

namespace detail {
inline std::vector<int> parse_radix_header(const std::string& line, const char* key) {
  std::istringstream in(line);
  std::string tag;
  in >> tag;
  if (tag != key) throw std::invalid_argument(std::string("truth table: expected '") + key +
                                              "' header, got '" + tag + "'");
  std::vector<int> radices;
  int r;
  while (in >> r) radices.push_back(r);
  if (!in.eof()) throw std::invalid_argument("truth table: malformed radix list");
  return radices;
}
}  // namespace detail

/// Text format: `in: r r ...`, `out: r r ...`, then one line per input in
/// lexicographic order with the output digits separated by spaces.
inline TruthTable parse_truth_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("truth table: missing 'in:' header");
  const RegisterShape input(detail::parse_radix_header(line, "in:"));
  if (!std::getline(in, line)) throw std::invalid_argument("truth table: missing 'out:' header");
  const RegisterShape output(detail::parse_radix_header(line, "out:"));

  std::vector<Digit> entries;
  entries.reserve(static_cast<std::size_t>(input.dimension()) * output.wires());
  std::int64_t got = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<Digit> digits;
    Digit d;
    while (row >> d) digits.push_back(d);
    if (!row.eof()) throw std::invalid_argument("truth table: non-numeric output digit");
    if (digits.empty()) continue;  // blank line
    if (digits.size() != output.wires())
      throw std::invalid_argument("truth table: row has " + std::to_string(digits.size()) +
                                  " digits, expected " + std::to_string(output.wires()));
    entries.insert(entries.end(), digits.begin(), digits.end());
    ++got;
  }
  if (got != input.dimension())
    throw std::invalid_argument("truth table: got " + std::to_string(got) + " rows, expected " +
                                std::to_string(input.dimension()));
  return TruthTable(input, output, std::move(entries));
}

inline void format_truth_table(std::ostream& out, const TruthTable& t) {
  out << "in:";
  for (int r : t.input_shape().radices()) out << ' ' << r;
  out << "\nout:";
  for (int r : t.output_shape().radices()) out << ' ' << r;
  out << '\n';
  for (std::int64_t i = 0; i < t.rows(); ++i) {
    const auto row = t.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) out << (w ? " " : "") << row[w];
    out << '\n';
  }
}

}  // namespace revq
