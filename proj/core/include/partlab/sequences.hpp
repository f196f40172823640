#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "partlab/integer.hpp"
#include "partlab/series.hpp"

namespace partlab {

/* The sequence families.
 *
 * S_{k,m}(n) is the coefficient of x^n in
 *     (1-x)^{-m} * prod_{i>=0} (1-x^{k^i})^{-m(k-1)},
 * which for m >= 1 counts k-ary partitions of n (sums of powers of k)
 * where a part equal to 1 takes one of k*m colors and every part > 1
 * takes one of (k-1)*m colors. Shorthands used throughout:
 *     c_m(n) = S_{2,m}(n),   d_m(n) = S_{p,m}(n) for a fixed prime p >= 3.
 *
 * b(n) counts plain binary partitions; t_n is the Prouhet-Thue-Morse
 * sign sequence, whose generating function is prod (1 - x^{2^i});
 * A_{p,m}(n) counts p-ary partitions where *every* part takes one of m
 * colors; D_p(n) is the coefficient of prod (1 - x^{p^i})^{p-1}. */

struct SequenceParams {
  std::uint64_t k = 0;  // base (0 when not applicable)
  long m = 0;           // color multiplier
  std::uint64_t p = 0;  // prime (0 when not applicable)

  bool operator==(const SequenceParams&) const = default;
  auto operator<=>(const SequenceParams&) const = default;
};

struct SequencePrefix {
  std::string name;
  SequenceParams params;
  std::vector<Integer> values;  // indices 0..N

  std::size_t max_index() const { return values.size() - 1; }
  const Integer& operator[](std::size_t n) const { return values[n]; }
};

/* b(0..N) by the Euler recurrence b(2n) = b(2n-1) + b(n), b(2n+1) = b(2n). */
SequencePrefix binary_partitions(std::size_t N);

/* t_0..t_N in {+1,-1}: t_0 = 1, t_{2n} = t_n, t_{2n+1} = -t_n. */
SequencePrefix ptm(std::size_t N);

/* S_{k,m}(0..N) through the series engine. k >= 2, m != 0. */
SequencePrefix s_km(std::uint64_t k, long m, std::size_t N);

/* S_{k,m}(0..N) for m >= 1 by the linear recurrence obtained from the
 * functional equation (1-x)^{km} H(x) = (1-x^k)^m H(x^k):
 *
 *   S(n) = -sum_{i=1}^{min(km,n)} (-1)^i C(km,i) S(n-i)
 *          + [k|n] * sum_{i=0}^{min(m,n/k)} (-1)^i C(m,i) S(n/k - i).
 *
 * Independent of the series path; the two are cross-checked in tests. */
SequencePrefix s_km_by_recurrence(std::uint64_t k, long m, std::size_t N);

/* The k = p >= 3 prime instance of the recurrence above (d_m family). */
SequencePrefix d_m_by_recurrence(std::uint64_t p, long m, std::size_t N);

/* c_{+-2}(0..N) by the dedicated recurrence
 *   c(0) = 1, c(1) = +-4,
 *   c(2n)   = +-2 c(2n-1) - c(2n-2) + c(n) + c(n-1),
 *   c(2n+1) = +-2 c(2n)   - c(2n-1) +- 2 c(n),
 * derived from (1 -+ x)^2 C_{+-2}(x) = (1 +- x)^2 C_{+-2}(x^2). */
SequencePrefix c_pm2_by_recurrence(int sign, std::size_t N);

/* Counting oracle, fully independent of series arithmetic: dynamic
 * programming over the parts k^0 < k^1 <= ... <= n, where a part with c
 * colors used j times contributes C(j+c-1, j) (multisets of colors).
 * one_colors/big_colors give the palette sizes for parts == 1 and > 1. */
Integer colored_count(std::uint64_t k, std::uint64_t one_colors, std::uint64_t big_colors,
                      std::size_t n);
std::vector<Integer> colored_count_prefix(std::uint64_t k, std::uint64_t one_colors,
                                          std::uint64_t big_colors, std::size_t N);

/* The S_{k,m} palette: (k*m, (k-1)*m). Requires m >= 1. */
Integer colored_count_oracle(std::uint64_t k, long m, std::size_t n);

/* A_{p,m}(0..N): every part takes one of m colors. */
SequencePrefix a_pm(std::uint64_t p, long m, std::size_t N);

/* D_p(0..N): coefficients of prod (1 - x^{p^i})^{p-1}. */
SequencePrefix d_p_cap(std::uint64_t p, std::size_t N);

/* d_{-1}(0..N) via d_{-1}(0) = 1, d_{-1}(n) = D_p(n) - D_p(n-1). */
SequencePrefix d_minus1(std::uint64_t p, std::size_t N);

/* t_m(0..N): Cauchy convolution of m copies of the PTM sequence,
 * i.e. the coefficients of (prod (1-x^{2^i}))^m. */
SequencePrefix t_m_convolution(long m, std::size_t N);

/* U_m(0..N) = sum_{i<=n} c_m(i). */
SequencePrefix u_m_partial_sums(long m, std::size_t N);

/* vartheta_m(0..N) with vartheta_m(n) = d_m(pn) - d_m(n); computes d_m to
 * order p*N once and slices. */
SequencePrefix vartheta(std::uint64_t p, long m, std::size_t N);

/* Cache keyed by (name, params, N). Requests for a larger N recompute from
 * scratch rather than extending; writes are serialized, so a shared cache
 * may be used from several threads. */
class PrefixCache {
 public:
  using Producer = std::function<SequencePrefix()>;

  std::shared_ptr<const SequencePrefix> get_or_compute(const std::string& name,
                                                       const SequenceParams& params,
                                                       std::size_t N, const Producer& make);

  std::size_t size() const;

 private:
  struct Key {
    std::string name;
    SequenceParams params;
    std::size_t N;
    auto operator<=>(const Key&) const = default;
  };
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const SequencePrefix>> entries_;
};

}  // namespace partlab
