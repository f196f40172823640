#include "partlab/series.hpp"

#include <stdexcept>
#include <utility>

namespace partlab {

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<long> low_coeffs)
    : c_(order + 1) {
  std::size_t i = 0;
  for (long v : low_coeffs) {
    if (i > order) throw std::invalid_argument("TruncatedSeries: more coefficients than order+1");
    c_[i++] = v;
  }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries f(order);
  f.c_[0] = 1;
  return f;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, long coeff) {
  TruncatedSeries f(order);
  if (k <= order) f.c_[k] = coeff;
  return f;
}

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
  if (f.order() != g.order())
    throw std::invalid_argument(std::string(op) + ": truncation order mismatch");
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "add");
  std::vector<Integer> c(f.order() + 1);
  for (std::size_t i = 0; i <= f.order(); ++i) c[i] = f[i] + g[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "sub");
  std::vector<Integer> c(f.order() + 1);
  for (std::size_t i = 0; i <= f.order(); ++i) c[i] = f[i] - g[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "mul");
  const std::size_t N = f.order();
  std::vector<Integer> c(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    if (f[i] == 0) continue;  // sparse factors are common (binomial powers)
    const mpz_srcptr fi = f[i].get_mpz_t();
    for (std::size_t j = 0; j + i <= N; ++j) {
      if (g[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), fi, g[j].get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries inverse(const TruncatedSeries& f) {
  if (f[0] != 1 && f[0] != -1)
    throw std::domain_error("inverse: constant term must be +1 or -1 for an integer inverse");
  const std::size_t N = f.order();
  // f[0]^2 = 1, so g[n] = -f[0] * sum_{i=1..n} f[i] g[n-i], g[0] = f[0].
  std::vector<Integer> g(N + 1);
  g[0] = f[0];
  Integer acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (f[i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), f[i].get_mpz_t(), g[n - i].get_mpz_t());
    }
    g[n] = (f[0] == 1) ? Integer(-acc) : acc;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries pow(const TruncatedSeries& f, long m) {
  if (m == 0) return TruncatedSeries::one(f.order());
  if (m < 0) return pow(inverse(f), -m);
  TruncatedSeries base = f;
  TruncatedSeries acc = TruncatedSeries::one(f.order());
  unsigned long e = static_cast<unsigned long>(m);
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

TruncatedSeries substitute_power(const TruncatedSeries& f, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("substitute_power: k must be >= 2");
  const std::size_t N = f.order();
  std::vector<Integer> c(N + 1);
  for (std::size_t i = 0; i * k <= N; ++i) c[i * k] = f[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_power(long e, std::uint64_t q, std::size_t N) {
  if (q == 0) throw std::invalid_argument("binomial_power: q must be >= 1");
  std::vector<Integer> c(N + 1);
  if (e >= 0) {
    // (1 - x^q)^e: finite alternating binomial row
    const std::uint64_t top = static_cast<std::uint64_t>(e);
    for (std::uint64_t j = 0; j <= top && j * q <= N; ++j) {
      Integer b = binomial(top, j);
      c[j * q] = (j % 2 == 0) ? b : Integer(-b);
    }
  } else {
    // (1 - x^q)^{-E}: nonnegative binomial series C(j+E-1, j)
    const std::uint64_t E = static_cast<std::uint64_t>(-e);
    for (std::uint64_t j = 0; j * q <= N; ++j) c[j * q] = binomial(j + E - 1, j);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries infinite_product(std::uint64_t k, long e, std::size_t N) {
  if (k < 2) throw std::invalid_argument("infinite_product: k must be >= 2");
  if (e == 0) return TruncatedSeries::one(N);
  TruncatedSeries acc = TruncatedSeries::one(N);
  // Factors with k^i > N are 1 mod x^{N+1} and are skipped; this is exact.
  for (std::uint64_t q = 1; q <= N; q *= k) {
    acc = mul(acc, binomial_power(e, q, N));
    if (q > N / k) break;  // overflow guard for q *= k
  }
  return acc;
}

SeriesCongruence series_congruent(const TruncatedSeries& f, const TruncatedSeries& g,
                                  const Integer& M) {
  require_same_order(f, g, "series_congruent");
  if (M < 2) throw std::invalid_argument("series_congruent: modulus must be >= 2");
  Integer d;
  for (std::size_t n = 0; n <= f.order(); ++n) {
    d = f[n] - g[n];
    if (!mpz_divisible_p(d.get_mpz_t(), M.get_mpz_t())) return {false, n};
  }
  return {true, 0};
}

}  // namespace partlab
