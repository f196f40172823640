#include <doctest.h>

#include <stdexcept>

#include "partlab/automata.hpp"
#include "partlab/valuation.hpp"

using namespace partlab;

TEST_CASE("nu2 automata: anchor evaluations") {
  const Dfao lsb1 = build_nu2_automaton(1, ReadDirection::lsb_first);
  const Dfao msb1 = build_nu2_automaton(1, ReadDirection::msb_first);
  CHECK(dfao_eval(lsb1, 2) == 2);  // nu_2(b(4)) = nu_2(4) = 2
  CHECK(dfao_eval(msb1, 2) == 2);
  CHECK(dfao_eval(lsb1, 6) == 2);  // digits 0,1,1 from the lowest power
  CHECK(dfao_eval(msb1, 6) == 2);  // digits 1,1,0 from the highest power

  const Dfao lsb3 = build_nu2_automaton(3, ReadDirection::lsb_first);
  CHECK(dfao_eval(lsb3, 5) == 1);  // odd n
  CHECK(dfao_eval(lsb3, 8) == 3);

  CHECK_THROWS_AS(build_nu2_automaton(4, ReadDirection::lsb_first), std::domain_error);
  CHECK_THROWS_AS(build_nu2_automaton(-1, ReadDirection::msb_first), std::domain_error);
  CHECK_THROWS_AS(dfao_eval(lsb1, 0), std::invalid_argument);
}

TEST_CASE("figure topologies: state and edge counts") {
  const Dfao lsb = build_nu2_automaton(5, ReadDirection::lsb_first);
  CHECK(lsb.state_count() == 4);
  const Dfao msb = build_nu2_automaton(1, ReadDirection::msb_first);
  CHECK(msb.state_count() == 2);
  // start state of the 4-state machine has no output, final states do
  CHECK_FALSE(lsb.outputs[lsb.initial].has_value());
  CHECK(msb.outputs[msb.initial].has_value());
  const Dfao y3 = build_yp_automaton(3, ReadDirection::lsb_first);
  CHECK(y3.state_count() == 3);
  const Dfao y3m = build_yp_automaton(7, ReadDirection::msb_first);
  CHECK(y3m.state_count() == 7);
}

TEST_CASE("single-digit evaluation takes one step from the start state") {
  const Dfao y5 = build_yp_automaton(5, ReadDirection::lsb_first);
  for (std::uint64_t n = 1; n <= 4; ++n)
    CHECK(dfao_eval(y5, n) == static_cast<long>(inverse_mod_p(n, 5)));
}

TEST_CASE("y_p automata anchors") {
  const Dfao y3 = build_yp_automaton(3, ReadDirection::msb_first);
  CHECK(dfao_eval(y3, 2) == 2);  // 2^{-1} mod 3
  const Dfao y5 = build_yp_automaton(5, ReadDirection::msb_first);
  CHECK(dfao_eval(y5, 10) == 3);
  const Dfao y7 = build_yp_automaton(7, ReadDirection::lsb_first);
  CHECK(dfao_eval(y7, 49) == 1);  // n_s = 1 at index 2
}

TEST_CASE("direction equivalence and closed-form agreement to 20000") {
  SequencePrefix t = ptm(20001);
  for (long m : {-19L, -3L, 1L, 3L, 9L}) {
    const Dfao lsb = build_nu2_automaton(m, ReadDirection::lsb_first);
    const Dfao msb = build_nu2_automaton(m, ReadDirection::msb_first);
    for (std::uint64_t n = 1; n <= 20000; ++n) {
      const long expected = static_cast<long>(nu2_c_closed_form(m, n, t.values).value());
      CHECK(dfao_eval(lsb, n) == expected);
      CHECK(dfao_eval(msb, n) == expected);
    }
  }
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    const Dfao lsb = build_yp_automaton(p, ReadDirection::lsb_first);
    const Dfao msb = build_yp_automaton(p, ReadDirection::msb_first);
    YZSequences yz = y_z_sequences(p, 20000);
    for (std::uint64_t n = 1; n <= 20000; ++n) {
      const long expected = static_cast<long>(yz.y.values[n].get_ui());
      CHECK(dfao_eval(lsb, n) == expected);
      CHECK(dfao_eval(msb, n) == expected);
    }
  }
}

TEST_CASE("kernel probe: constant sequence has one class") {
  std::vector<long> c(2000, 5);
  KernelProbe probe = kernel_probe(c, 2, 3);
  CHECK(probe.distinct_count == 1);
  CHECK(probe.saturated);
}

TEST_CASE("kernel probe: nu2 family saturates at 4 classes") {
  SequencePrefix t = ptm(10001);
  std::vector<long> seq(10000);
  seq[0] = 0;
  for (std::size_t n = 1; n < seq.size(); ++n)
    seq[n] = static_cast<long>(nu2_c_closed_form(3, n, t.values).value());
  KernelProbe probe = kernel_probe(seq, 2, 6);
  CHECK(probe.saturated);
  CHECK(probe.distinct_count == 4);
  CHECK(probe.compared_length == 156);
}

TEST_CASE("kernel probe: y_3 saturates at 3 classes") {
  YZSequences yz = y_z_sequences(3, 10000);
  std::vector<long> seq(10000);
  for (std::size_t n = 0; n < seq.size(); ++n)
    seq[n] = static_cast<long>(yz.y.values[n + 1].get_ui());
  KernelProbe probe = kernel_probe(seq, 3, 5);
  CHECK(probe.saturated);
  CHECK(probe.distinct_count == 3);
}

TEST_CASE("kernel probe: an eventually-periodic-free counter sequence is not saturated") {
  // seq[n] = number of binary digits of n+1: classes keep splitting by depth
  std::vector<long> seq(20000);
  for (std::size_t n = 0; n < seq.size(); ++n) {
    std::uint64_t v = n + 1;
    long bits = 0;
    while (v) {
      ++bits;
      v >>= 1;
    }
    seq[n] = bits;
  }
  KernelProbe probe = kernel_probe(seq, 2, 5);
  CHECK_FALSE(probe.saturated);
}

TEST_CASE("kernel probe refuses too-short prefixes") {
  std::vector<long> seq(100, 1);
  CHECK_THROWS_AS(kernel_probe(seq, 2, 6, 32), std::invalid_argument);
  CHECK_THROWS_AS(kernel_probe(seq, 2, 0), std::invalid_argument);
}

TEST_CASE("y sequences are not periodic at desk scale") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    YZSequences yz = y_z_sequences(p, 10000);
    for (std::size_t period = 1; period <= 2000; ++period) {
      bool periodic = true;
      for (std::size_t n = 1; n + period <= 10000; ++n) {
        if (yz.y.values[n] != yz.y.values[n + period]) {
          periodic = false;
          break;
        }
      }
      if (periodic) FAIL("y_", p, " matched period ", period);
    }
  }
}

TEST_CASE("functional equations hold for p in {3,5,7}") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    CheckReport r = verify_functional_equations(p, 500);
    CHECK(r.passed());
  }
}

TEST_CASE("perturbed y value is caught with its failing index") {
  const std::uint64_t p = 3;
  const std::size_t N = 100;
  YZSequences yz = y_z_sequences(p, N + 1);
  std::vector<Integer> y1(N + 1), z1(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    y1[n] = yz.y.values[n + 1];
    z1[n] = yz.z.values[n + 1];
  }
  y1[40] += 1;  // corrupt one value
  CheckReport r = verify_functional_equations_on(p, N, y1, z1);
  CHECK_FALSE(r.passed());
  bool mentions_index = false;
  for (const auto& ce : r.counterexamples)
    if (ce.params.find("index") != std::string::npos) mentions_index = true;
  CHECK(mentions_index);
}

TEST_CASE("DOT export: one-state loop machine and figure counts") {
  Dfao one;
  one.alphabet_size = 2;
  one.direction = ReadDirection::lsb_first;
  one.outputs = {7L};
  one.transitions = {{0, 0}};
  one.state_names = {"q0"};
  const std::string dot = export_dot(one);
  CHECK(dot.find("q0 -> q0 [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("q0 -> q0 [label=\"1\"]") != std::string::npos);

  // figure-style counts: 2 nodes, 4 edges for the msb nu2 machine
  const Dfao msb = build_nu2_automaton(1, ReadDirection::msb_first);
  const Dfao parsed = parse_dot(export_dot(msb));
  CHECK(parsed.state_count() == 2);
  std::size_t edges = 0;
  for (const auto& row : parsed.transitions) edges += row.size();
  CHECK(edges == 4);

  const Dfao y3 = build_yp_automaton(3, ReadDirection::lsb_first);
  CHECK(parse_dot(export_dot(y3)).state_count() == 3);
}

TEST_CASE("DOT export round-trips and is deterministic") {
  for (ReadDirection dir : {ReadDirection::lsb_first, ReadDirection::msb_first}) {
    for (long m : {1L, 5L, -3L}) {
      const Dfao a = build_nu2_automaton(m, dir);
      CHECK(parse_dot(export_dot(a)) == a);
      CHECK(export_dot(a) == export_dot(a));
    }
    for (std::uint64_t p : {3ull, 5ull}) {
      const Dfao a = build_yp_automaton(p, dir);
      CHECK(parse_dot(export_dot(a)) == a);
    }
  }
}
