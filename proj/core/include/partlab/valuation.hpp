#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "partlab/digits.hpp"
#include "partlab/extnat.hpp"
#include "partlab/integer.hpp"
#include "partlab/sequences.hpp"

namespace partlab {

/* Closed form for nu_2(c_m(n)), n >= 1, m not in {0, -1}:
 *   nu_2(m) + 1       if m even,
 *   1                 if m odd and t_n != t_{n-1},
 *   nu_2(m+1) + 1     if m odd and t_n = t_{n-1}.
 * The PTM prefix is passed in so that sweeps stay linear-time. */
ExtNat nu2_c_closed_form(long m, std::size_t n, std::span<const Integer> ptm_prefix);

/* Same value for odd m via the period-doubling sequence:
 *   1 + (nu_2(n) mod 2) * nu_2(m+1),  n >= 1.
 * (t_n != t_{n-1} holds exactly when nu_2(n) is even.) */
ExtNat nu2_c_via_period_doubling(long m, std::size_t n);

/* Residue-and-valuation form for d_m(n), p >= 3 prime, m != 0:
 * for n >= 1,
 *   d_m(n) = p*m*(n_s^{-1} mod p)   (mod p^{nu_p(m)+2}),
 * where n_s is the lowest nonzero base-p digit of n, so
 * nu_p(d_m(n)) = nu_p(m) + 1; and d_m(0) = 1 with valuation 0. */
struct ResidueForm {
  ExtNat valuation;
  Integer residue;  // least nonnegative residue
  Integer modulus;  // p^{nu_p(m)+2}
};
ResidueForm nu_p_d_closed_form(std::uint64_t p, long m, std::size_t n);

/* Bundles the two closed forms behind one dispatch on p. For p = 2 the
 * PTM prefix is built once, covering n <= max_n. */
class ValuationProfile {
 public:
  ValuationProfile(std::uint64_t p, long m, std::size_t max_n);

  ExtNat closed_form(std::size_t n) const;
  ResidueForm residue_form(std::size_t n) const;  // p >= 3 only

  std::uint64_t p() const { return p_; }
  long m() const { return m_; }

 private:
  std::uint64_t p_;
  long m_;
  std::vector<Integer> ptm_;  // populated only for p = 2
};

/* y_p(1..N) and z_p(1..N), values in {1..p-1}, via
 *   y_p(n) = n^{-1} mod p for 1 <= n <= p-1,
 *   y_p(n) = y_p(n mod p) when p does not divide n,
 *   y_p(pn) = y_p(n),
 * and z_p(n) = p - y_p(n). Index 0 of each prefix is unused (set to 0). */
struct YZSequences {
  SequencePrefix y;
  SequencePrefix z;
};
YZSequences y_z_sequences(std::uint64_t p, std::size_t N);

/* sum_{k=1}^{p^e - 1} y_p(k) == p (p^e - 1) / 2. */
bool y_sum_check(std::uint64_t p, unsigned e);

/* Digit-gap statistics. For p = 2:
 *   u_m(n) = nu_2(c_m(n) / 2^{nu_2(c_m(n))} - 1),
 * the gap to the next nonzero binary digit of the odd part (infinity when
 * the odd part is exactly 1). For p >= 3, with U = d_m(n)/p^{nu_p(d_m(n))},
 *   v_{p,m}(n) = nu_p(U - (U mod p)),
 * where "U mod p" is the least nonnegative residue: subtracting it as an
 * integer is what makes v the distance to the next nonzero p-ary digit.
 *   M_m(X) = max of the gaps over 1..X, L_m(X) = number of distinct gaps. */
struct GapStatistics {
  std::vector<ExtNat> gaps;  // index 1..X; index 0 unused
  ExtNat max_gap;            // M_m(X)
  std::size_t distinct_count = 0;  // L_m(X)
};
GapStatistics gap_statistics(long m, std::size_t X, std::uint64_t p);

/* One gap value from an already computed coefficient. */
ExtNat digit_gap(const Integer& coefficient, std::uint64_t p);

}  // namespace partlab
