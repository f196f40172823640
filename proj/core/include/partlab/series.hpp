#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "partlab/integer.hpp"

namespace partlab {

/* A formal power series over Integer known exactly up to a fixed
 * truncation order N (inclusive): coeffs holds exactly N+1 entries and
 * every ring operation agrees with exact series arithmetic on all
 * coefficients of index <= N. Values are immutable after construction;
 * all operations below are pure and safe to call concurrently.
 *
 * The truncation order is always chosen by the caller and never silently
 * extended. Errors: operations on mismatched orders throw
 * std::invalid_argument; inverses of series whose constant term is not a
 * unit (+-1) throw std::domain_error. */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
  explicit TruncatedSeries(std::vector<Integer> coeffs);
  TruncatedSeries(std::size_t order, std::initializer_list<long> low_coeffs);

  static TruncatedSeries one(std::size_t order);
  /* coeff * x^k, truncated at `order` (zero series if k > order). */
  static TruncatedSeries monomial(std::size_t order, std::size_t k, long coeff = 1);

  std::size_t order() const { return c_.size() - 1; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  std::span<const Integer> coeffs() const { return c_; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Integer> c_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);

/* Cauchy product truncated at the common order (schoolbook convolution). */
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/* Multiplicative inverse: requires f[0] in {+1, -1}, which is exactly the
 * condition under which 1/f has integer coefficients. */
TruncatedSeries inverse(const TruncatedSeries& f);

/* Exact m-th power by binary exponentiation; pow(f, 0) = 1, and negative
 * exponents are computed as pow(inverse(f), -m). */
TruncatedSeries pow(const TruncatedSeries& f, long m);

/* f(x^k) truncated at f.order(), k >= 2. */
TruncatedSeries substitute_power(const TruncatedSeries& f, std::uint64_t k);

/* (1 - x^q)^e for any integer e, truncated at N. Both signs expand by the
 * (generalized) binomial theorem, so no inversion is involved. */
TruncatedSeries binomial_power(long e, std::uint64_t q, std::size_t N);

/* prod_{i >= 0} (1 - x^{k^i})^e truncated at N. Only factors with
 * k^i <= N are multiplied: a factor with k^i > N is 1 + O(x^{N+1}), i.e.
 * congruent to 1 mod x^{N+1}, so dropping it is exact, not an
 * approximation. */
TruncatedSeries infinite_product(std::uint64_t k, long e, std::size_t N);

struct SeriesCongruence {
  bool congruent = true;
  std::size_t first_failure = 0;  // meaningful only when !congruent
};

/* Coefficientwise congruence f = g (mod M) up to the common order; on
 * failure reports the smallest failing index. Requires M >= 2 and equal
 * orders. */
SeriesCongruence series_congruent(const TruncatedSeries& f, const TruncatedSeries& g,
                                  const Integer& M);

}  // namespace partlab
