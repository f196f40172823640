#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partlab/report.hpp"
#include "partlab/sequences.hpp"

namespace partlab {

/* Digit reading conventions. LSB_FIRST feeds the base-k digits of n from
 * the 0'th power upward; MSB_FIRST feeds them from the leading digit
 * downward. (In prose these are often called "left to right" and "right
 * to left" respectively, a perennial source of confusion; the enum names
 * are the contract here.) Evaluation always uses the canonical digit
 * string of n with no leading zeros, so n >= 1. */
enum class ReadDirection { lsb_first, msb_first };

/* Deterministic finite automaton with output over digit alphabet
 * {0..k-1}. Transitions are total. A state may carry no output (e.g. a
 * start state that is never final on canonical input); evaluation is
 * defined only after at least one digit is read and must end in a
 * labeled state. Immutable after construction, safe to share. */
struct Dfao {
  std::uint32_t alphabet_size = 2;
  ReadDirection direction = ReadDirection::lsb_first;
  std::uint32_t initial = 0;
  std::vector<std::optional<long>> outputs;        // per state
  std::vector<std::vector<std::uint32_t>> transitions;  // [state][digit]
  std::vector<std::string> state_names;            // stable, used by DOT export

  std::size_t state_count() const { return outputs.size(); }
  bool operator==(const Dfao&) const = default;
};

/* Runs the digits of n (n >= 1) through the automaton in its declared
 * direction and returns the output of the final state. */
long dfao_eval(const Dfao& a, std::uint64_t n);

/* Automaton computing nu_2(c_m(n)) for odd m != -1, built from the
 * recurrence w(2n+1) = 1, w(4n) = w(n), w(4n+2) = nu_2(m+1) + 1:
 * each transition below implements one branch of the recurrence.
 * Even m has a constant valuation and no automaton is built for it
 * (std::domain_error). */
Dfao build_nu2_automaton(long m, ReadDirection dir);

/* Automaton computing y_p(n) = (lowest nonzero base-p digit of n)^{-1}
 * mod p, for prime p >= 3. The MSB_FIRST machine has p states (start plus
 * one per inverse value, remembering the most recent nonzero digit); the
 * LSB_FIRST machine makes the inverse states absorbing instead. */
Dfao build_yp_automaton(std::uint64_t p, ReadDirection dir);

/* Empirical k-kernel probe: counts distinct subsequences
 * (seq[k^i n + j])_n for i <= depth, 0 <= j < k^i, all compared on a
 * common index window of length len(seq) / k^depth. The window must hold
 * at least min_overlap points, otherwise the probe refuses to run
 * (std::invalid_argument): too-short comparisons must never declare two
 * subsequences equal. Saturated means depth `depth` added no class over
 * depth-1. */
struct KernelProbe {
  std::uint64_t k = 2;
  unsigned depth = 0;
  std::size_t compared_length = 0;
  std::size_t distinct_count = 0;
  bool saturated = false;
};
KernelProbe kernel_probe(std::span<const long> seq, std::uint64_t k, unsigned depth,
                         std::size_t min_overlap = 32);

/* Checks, coefficientwise up to order N:
 *  - over the integers:  Y_p(x) = x^{p-1} Y_p(x^p) + W_p(x)/(1-x^p),
 *  - mod p:              x^{p-1} Y_p(x)^p - Y_p(x) + W_p(x)/(1-x^p) = 0,
 *  - mod p:              x^{p-1} Z_p(x)^p - Z_p(x) - W_p(x)/(1-x^p) = 0,
 * where Y_p, Z_p are the generating functions of y_p(n+1), z_p(n+1) and
 * W_p(x) = sum_{r=1}^{p-1} (r^{-1} mod p) x^{r-1}. */
CheckReport verify_functional_equations(std::uint64_t p, std::size_t N);

/* Same checks against caller-supplied y/z prefixes (used to confirm the
 * checker reports a failure index when a value is perturbed). */
CheckReport verify_functional_equations_on(std::uint64_t p, std::size_t N,
                                           std::span<const Integer> y1,
                                           std::span<const Integer> z1);

/* Deterministic DOT rendering (stable state order and edge order; one
 * edge per (state, digit)). parse_dot round-trips the exported text. */
std::string export_dot(const Dfao& a);
Dfao parse_dot(const std::string& text);

}  // namespace partlab
