#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "revq/truth_table.hpp"

using namespace revq;

TEST_CASE("construction validates shape and digits") {
  CHECK_NOTHROW(TruthTable({2, 2}, {2}, {0, 0, 0, 1}));
  CHECK_THROWS_AS(TruthTable({2, 2}, {2}, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable({2, 2}, {2}, {0, 0, 0, 2}), std::out_of_range);
}

TEST_CASE("from_function and apply") {
  const TruthTable sub = TruthTable::from_function(
      {3, 3}, {3}, [](const DigitWord& d) -> DigitWord { return {(d[1] - d[0] + 3) % 3}; });
  CHECK(sub.rows() == 9);
  CHECK(sub.apply({2, 0}) == DigitWord{1});
  CHECK(sub.row(7)[0] == 2);  // input (2,1)
}

TEST_CASE("text format round trip") {
  const TruthTable t({2, 3}, {3, 2}, {0, 1, 1, 0, 2, 1, 2, 0, 0, 0, 1, 1});
  std::ostringstream out;
  format_truth_table(out, t);
  std::istringstream in(out.str());
  CHECK(parse_truth_table(in) == t);
}

TEST_CASE("format matches the documented layout") {
  std::ostringstream out;
  format_truth_table(out, TruthTable({2, 2}, {2}, {0, 0, 0, 1}));
  CHECK(out.str() == "in: 2 2\nout: 2\n0\n0\n0\n1\n");
}

TEST_CASE("parse errors") {
  const auto expect_throw = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_truth_table(in), std::exception);
  };
  expect_throw("");
  expect_throw("out: 2\nin: 2\n0\n1\n");                 // headers swapped
  expect_throw("in: 2\nout: 2\n0\n");                    // missing row
  expect_throw("in: 2\nout: 2\n0\n1\n0\n");              // extra row
  expect_throw("in: 2\nout: 2\n0 1\n1\n");               // wrong width
  expect_throw("in: 2\nout: 2\n0\n2\n");                 // digit out of range
  expect_throw("in: 2\nout: 2\n0\nx\n");                 // non-numeric
  expect_throw("in: 2 x\nout: 2\n0\n1\n");               // malformed radix
}

TEST_CASE("blank lines between rows are tolerated") {
  std::istringstream in("in: 2\nout: 2\n\n1\n\n0\n");
  const TruthTable t = parse_truth_table(in);
  CHECK(t.apply({0}) == DigitWord{1});
  CHECK(t.apply({1}) == DigitWord{0});
}
