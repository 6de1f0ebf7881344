// Command-line front end for the revq library: dump gate tables and
// matrices, run circuit files, embed truth tables reversibly, run the
// exhaustive searches, and execute the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "revq/revq.hpp"

namespace {

using namespace revq;

// Complex entries print as `re+imi` with six significant digits; exact
// integers come out without a decimal point.
std::string format_complex(std::complex<double> z) {
  double re = z.real() + 0.0;  // collapse negative zero
  double im = z.imag() + 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
  return buf;
}

void print_digits(std::ostream& out, const DigitWord& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? " " : "") << digits[i];
}

int usage() {
  std::cerr << "usage: revq <command> [args]\n"
               "  table <gate>                    truth table, one row per input\n"
               "  matrix <gate>                   unitary matrix, row per line\n"
               "  order <gate>                    period of the gate's permutation\n"
               "  run <file> --input d1 d2 ...    classical simulation of a circuit file\n"
               "  run <file> --state a1 a2 ...    state-vector simulation (amplitudes re or re,im)\n"
               "  embed <file>                    reversible embedding of a truth-table file\n"
               "  enumerate <mode> <AND|OR>       mode: extensions|balanced|symmetric|counterexamples\n"
               "  verify <claim|all>              run verification checks\n";
  return 2;
}

int cmd_table(const std::string& name) {
  const Gate& g = gate(name);
  for (std::int64_t i = 0; i < g.shape.dimension(); ++i) {
    print_digits(std::cout, index_to_digits(g.shape, i));
    std::cout << " -> ";
    print_digits(std::cout, index_to_digits(g.shape, (*g.permutation)(static_cast<int>(i))));
    std::cout << '\n';
  }
  return 0;
}

int cmd_matrix(const std::string& name) {
  const ComplexMatrix& m = gate(name).matrix;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      std::cout << (c ? " " : "") << format_complex(m(r, c));
    std::cout << '\n';
  }
  return 0;
}

int cmd_order(const std::string& name) {
  std::cout << order(*gate(name).permutation) << '\n';
  return 0;
}

int parse_int(const std::string& token) {
  std::size_t used = 0;
  const int value = std::stoi(token, &used);
  if (used != token.size()) throw std::invalid_argument("bad integer: " + token);
  return value;
}

std::complex<double> parse_amplitude(const std::string& token) {
  const auto comma = token.find(',');
  std::size_t used = 0;
  if (comma == std::string::npos) {
    const double re = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad amplitude: " + token);
    return {re, 0.0};
  }
  const std::string re_part = token.substr(0, comma);
  const std::string im_part = token.substr(comma + 1);
  const double re = std::stod(re_part, &used);
  if (used != re_part.size()) throw std::invalid_argument("bad amplitude: " + token);
  const double im = std::stod(im_part, &used);
  if (used != im_part.size()) throw std::invalid_argument("bad amplitude: " + token);
  return {re, im};
}

int cmd_run(const std::vector<std::string>& args) {
  if (args.size() < 2) return usage();
  std::ifstream file(args[0]);
  if (!file) {
    std::cerr << "error: cannot open circuit file " << args[0] << '\n';
    return 2;
  }
  const Circuit circuit = parse_circuit(file);
  const std::string mode = args[1];
  const std::vector<std::string> rest(args.begin() + 2, args.end());
  if (mode == "--input") {
    DigitWord input;
    for (const auto& tok : rest) input.push_back(parse_int(tok));
    const DigitWord out = simulate_classical(circuit, input);
    print_digits(std::cout, out);
    std::cout << '\n';
    return 0;
  }
  if (mode == "--state") {
    std::vector<std::complex<double>> amps;
    for (const auto& tok : rest) amps.push_back(parse_amplitude(tok));
    const StateVector out = simulate_quantum(circuit, StateVector(circuit.shape(), amps));
    for (std::size_t i = 0; i < out.size(); ++i)
      std::cout << (i ? " " : "") << format_complex(out.amplitude(i));
    std::cout << '\n';
    return 0;
  }
  return usage();
}

int cmd_embed(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open truth-table file " << path << '\n';
    return 2;
  }
  const Embedding e = embed(parse_truth_table(file));
  for (std::int64_t i = 0; i < e.combined_shape.dimension(); ++i) {
    print_digits(std::cout, index_to_digits(e.combined_shape, i));
    std::cout << " -> ";
    print_digits(std::cout,
                 index_to_digits(e.combined_shape, e.permutation(static_cast<int>(i))));
    std::cout << '\n';
  }
  std::cout << "ancilla=" << e.report.ancilla_wires << " garbage=" << e.report.garbage_wires
            << '\n';
  return 0;
}

int cmd_enumerate(const std::string& mode, const std::string& base_name) {
  if (base_name != "AND" && base_name != "OR") {
    std::cerr << "error: base must be AND or OR\n";
    return 2;
  }
  const TruthTable base = base_name == "AND" ? boolean_and_base() : boolean_or_base();
  std::size_t count = 0;
  if (mode == "extensions") {
    const auto list = enumerate_extensions({base, {3, 3}, 0});
    for (const auto& p : list) {
      for (int i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p(i);
      std::cout << '\n';
    }
    count = list.size();
  } else if (mode == "balanced" || mode == "symmetric") {
    auto tables = enumerate_balanced_f1(base);
    if (mode == "symmetric") tables = filter_symmetric(tables);
    for (const auto& t : tables) {
      const auto& cells = t.flat();
      for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? " " : "") << cells[i];
      std::cout << '\n';
    }
    count = tables.size();
  } else if (mode == "counterexamples") {
    const auto op =
        base_name == "AND" ? TernaryLogicOp::cyclic_and : TernaryLogicOp::cyclic_or;
    const auto assoc = find_law_counterexamples(op, LogicLaw::associativity);
    const auto distrib = find_law_counterexamples(op, LogicLaw::distributivity);
    for (const auto& t : assoc.triples)
      std::cout << "assoc " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    for (const auto& t : distrib.triples)
      std::cout << "distrib " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    count = assoc.triples.size() + distrib.triples.size();
  } else {
    std::cerr << "error: unknown enumerate mode " << mode << '\n';
    return 2;
  }
  std::cout << "count=" << count << '\n';
  return 0;
}

int cmd_verify(const std::string& id) {
  std::vector<const Claim*> selected;
  if (id == "all") {
    for (const auto& claim : claim_registry()) selected.push_back(&claim);
  } else {
    const Claim* claim = find_claim(id);
    if (claim == nullptr) {
      std::cerr << "error: unknown claim " << id << '\n';
      return 2;
    }
    selected.push_back(claim);
  }
  bool all_pass = true;
  for (const Claim* claim : selected) {
    const ClaimResult result = claim->run();
    all_pass = all_pass && result.pass;
    std::cout << (result.pass ? "PASS " : "FAIL ") << claim->id << ' ' << result.detail << '\n';
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (args.empty()) return usage();
    const std::string& cmd = args[0];
    if (cmd == "table" && args.size() == 2) return cmd_table(args[1]);
    if (cmd == "matrix" && args.size() == 2) return cmd_matrix(args[1]);
    if (cmd == "order" && args.size() == 2) return cmd_order(args[1]);
    if (cmd == "run" && args.size() >= 2)
      return cmd_run({args.begin() + 1, args.end()});
    if (cmd == "embed" && args.size() == 2) return cmd_embed(args[1]);
    if (cmd == "enumerate" && args.size() == 3) return cmd_enumerate(args[1], args[2]);
    if (cmd == "verify" && args.size() == 2) return cmd_verify(args[1]);
    return usage();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
