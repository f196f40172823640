#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partlab/extnat.hpp"
#include "partlab/integer.hpp"
#include "partlab/report.hpp"
#include "partlab/sequences.hpp"

namespace partlab {

/* Verification lab: every check below recomputes its own exact data,
 * walks the declared grid point by point and returns a CheckReport.
 * Checks always work on exact integers (never on pre-reduced residues),
 * so valuations of differences are exact. Grids abort early only via the
 * counterexample list, never silently. */

/* d_m(n) = 0 mod p^{nu_p(m)+1} for 1 <= n <= N (m >= 1). */
CheckReport check_parylem1(std::uint64_t p, long m, std::size_t N);

/* d_m(pn) = d_m(n) mod p^{nu_p(m)+2} for 1 <= n <= N. */
CheckReport check_parylem2(std::uint64_t p, long m, std::size_t N);

/* For m = p^alpha and p not dividing n:
 * d_m(n) = (-1)^{n+1} C(pm, n) mod p^{alpha+2} when n <= pm, and
 * d_m(n) = d_m(n - pm) mod p^{alpha+2} when n > pm. */
CheckReport check_parylem3(std::uint64_t p, unsigned alpha, std::size_t N);

/* Generalized Wolstenholme congruence with the p = 3 correction:
 * C(pm, pi) = C(m, i) mod p^E with
 *   E = nu_p(m) + nu_p(C(m,i)) + 3 - chi,
 *   chi = [p=3] - [p=3 and nu_3(m) >= 1 and nu_3(C(m,i)) = 0]. */
struct BinomCongruence {
  unsigned modulus_exponent = 0;
  unsigned chi = 0;
  bool pass = false;
};
BinomCongruence binom_congruence(std::uint64_t p, std::uint64_t m, std::uint64_t i);
CheckReport check_parylem4_grid(std::span<const std::uint64_t> primes, std::uint64_t m_max);

/* The two harmonic-sum forms of Wolstenholme's theorem for p >= 5:
 * nu_p(numerator of sum 1/g) >= 2 and nu_p(numerator of sum 1/g^2) >= 1. */
CheckReport check_wolstenholme(std::span<const std::uint64_t> primes);

/* Alternating-sum identity for vartheta_m(n) = d_m(pn) - d_m(n), plus the
 * explicit closed form
 *   d_m(pn) - d_m(n) = sum_{j=0}^{min(m,n)} (-1)^{j+1} C(pm,pj) C(n-j+m-1, n-j),
 * both mod p^{2 nu_p(m) + 3 - [p=3]}, for 1 <= n <= N. */
CheckReport check_modp_lemma(std::uint64_t p, long m, std::size_t N);

/* d_m(pn) = d_m(n) mod p^{nu_p(m)+3}; requires p >= 5, or p = 3 with
 * nu_3(m) >= 1 (std::invalid_argument otherwise, naming the condition). */
CheckReport check_parythm3(std::uint64_t p, long m, std::size_t N);

/* Churchhouse / Rodseth-Gupta congruences for c_1(n) = b(2n):
 *   c_1(2^{2k+1} t) - c_1(2^{2k-1} t) = 0 mod 2^{3k+2},
 *   c_1(2^{2k}   t) - c_1(2^{2k-2} t) = 0 mod 2^{3k},
 * over 1 <= k <= k_max and odd t <= t_max; sharpness is verified by
 * requiring the minimum valuation over each searched family to equal the
 * stated exponent exactly (i.e. it is attained by at least one t). */
CheckReport churchhouse_congruences(unsigned k_max, std::uint64_t t_max);

/* Search for (p, m) with d_m(pn) = d_m(n) mod p^{nu_p(m)+k_exp} for every
 * 1 <= n <= N. Sorted set output, independent of iteration order. */
std::vector<std::pair<std::uint64_t, long>> speccong_search(
    std::span<const std::uint64_t> p_set, long m_lo, long m_hi, unsigned k_exp, std::size_t N,
    unsigned jobs = 1);
CheckReport speccong_report(std::span<const std::uint64_t> p_set, long m_lo, long m_hi,
                            unsigned k_exp, std::size_t N, unsigned jobs = 1);

/* Conjecture harness. Equality claims are checked as equalities;
 * ">= with equality infinitely often" claims are checked as the
 * inequality everywhere plus a witness note when equality is attained in
 * range (absence of a witness in a finite range falsifies nothing and is
 * reported as a note, not a counterexample). Reports carry the
 * CONJECTURE banner and never claim proof. */
enum class ConjectureSelector { conj1, conj2, phi4_a, phi4_b, phi4_pow2, phi4_shift };
ConjectureSelector conjecture_selector_from_name(const std::string& name);

struct ConjectureGrid {
  std::size_t N = 500;                      // n range
  unsigned k_max = 5;                       // conj1: m = 2k, k <= k_max
  std::vector<std::uint64_t> p_set = {3, 5};  // conj2
  long m_max = 12;                          // conj2
  unsigned s_max = 4;                       // phi4 selectors
  long shift_m_max = 2;                     // phi4_shift: m <= shift_m_max
};
CheckReport conjecture_checks(ConjectureSelector sel, const ConjectureGrid& grid);

/* A_{p,(p-1)(p^alpha - 1)}(n) = -p (n_s^{-1} mod p) mod p^2 for
 * p^alpha <= n <= N. */
CheckReport check_a_pm_theorem(std::uint64_t p, unsigned alpha, std::size_t N);

/* nu_2(c_m(2n) - c_m(n)) = 1 for odd m != -1, 1 <= n <= N. */
CheckReport check_cor0(long m, std::size_t N);

/* Valuation agreement sweeps (closed forms against series-engine
 * coefficients). */
CheckReport check_mainthm(long m_lo, long m_hi, std::size_t N, unsigned jobs = 1);
CheckReport check_parycor2(std::span<const std::uint64_t> p_set, long m_abs_max, std::size_t N,
                           unsigned jobs = 1);

/* S_{k,m}(n) == colored_count_oracle(k, m, n) over the grid. */
CheckReport check_oracle_equivalence(std::uint64_t k_max, long m_max, std::size_t n_max);

/* DFAO outputs in both directions against the closed forms, n <= n_max. */
CheckReport check_dfao_agreement(std::size_t n_max);

/* Kernel probes saturate for the nu_2(c_m) and y_p families. */
CheckReport check_kernel_saturation(std::size_t prefix_len);

/* y_p + z_p = p pointwise and the summation formula
 * sum_{k<p^e} y_p(k) = p(p^e-1)/2 for the listed exponents. */
CheckReport check_y_sum(std::span<const std::pair<std::uint64_t, unsigned>> grid);

/* Digit-gap table rows: all m in 1..m_max with L_m(X) <= threshold. */
struct GapTableRow {
  long m = 0;
  ExtNat max_gap;          // M_m(X)
  std::size_t distinct = 0;  // L_m(X)
};
std::vector<GapTableRow> gap_table(std::size_t X, std::size_t threshold, long m_max = 100,
                                   unsigned jobs = 1);

}  // namespace partlab
