#include "partlab/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace partlab {

namespace {

void require_prime_ge3(std::uint64_t p, const char* who) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be a prime >= 3");
}

void require_base(std::uint64_t k, const char* who) {
  if (k < 2) throw std::invalid_argument(std::string(who) + ": k must be >= 2");
}

void require_m_nonzero(long m, const char* who) {
  if (m == 0) throw std::invalid_argument(std::string(who) + ": m must be nonzero");
}

void require_m_positive(long m, const char* who) {
  if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

}  // namespace

SequencePrefix binary_partitions(std::size_t N) {
  SequencePrefix s{.name = "b", .params = {.k = 2}, .values = std::vector<Integer>(N + 1)};
  s.values[0] = 1;
  if (N >= 1) s.values[1] = 1;
  for (std::size_t n = 2; n <= N; ++n) {
    s.values[n] = s.values[n - 1];
    if (n % 2 == 0) s.values[n] += s.values[n / 2];
  }
  return s;
}

SequencePrefix ptm(std::size_t N) {
  SequencePrefix s{.name = "t", .params = {.k = 2}, .values = std::vector<Integer>(N + 1)};
  s.values[0] = 1;
  for (std::size_t n = 1; n <= N; ++n)
    s.values[n] = (n % 2 == 0) ? s.values[n / 2] : Integer(-s.values[n / 2]);
  return s;
}

SequencePrefix s_km(std::uint64_t k, long m, std::size_t N) {
  require_base(k, "s_km");
  require_m_nonzero(m, "s_km");
  TruncatedSeries h = mul(binomial_power(-m, 1, N),
                          infinite_product(k, -m * static_cast<long>(k - 1), N));
  std::vector<Integer> v(h.coeffs().begin(), h.coeffs().end());
  return SequencePrefix{.name = "s_km", .params = {.k = k, .m = m}, .values = std::move(v)};
}

SequencePrefix s_km_by_recurrence(std::uint64_t k, long m, std::size_t N) {
  require_base(k, "s_km_by_recurrence");
  require_m_positive(m, "s_km_by_recurrence");
  const std::uint64_t um = static_cast<std::uint64_t>(m);
  const std::uint64_t km = k * um;

  std::vector<Integer> c1(km + 1), c2(um + 1);
  for (std::uint64_t i = 0; i <= km; ++i) c1[i] = binomial(km, i);
  for (std::uint64_t i = 0; i <= um; ++i) c2[i] = binomial(um, i);

  std::vector<Integer> d(N + 1);
  d[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    const std::size_t top = std::min<std::size_t>(km, n);
    for (std::size_t i = 1; i <= top; ++i) {
      // -(-1)^i C(km,i) d(n-i)
      if (i & 1)
        mpz_addmul(acc.get_mpz_t(), c1[i].get_mpz_t(), d[n - i].get_mpz_t());
      else
        mpz_submul(acc.get_mpz_t(), c1[i].get_mpz_t(), d[n - i].get_mpz_t());
    }
    if (n % k == 0) {
      const std::size_t q = n / k;
      const std::size_t top2 = std::min<std::size_t>(um, q);
      for (std::size_t i = 0; i <= top2; ++i) {
        if (i & 1)
          mpz_submul(acc.get_mpz_t(), c2[i].get_mpz_t(), d[q - i].get_mpz_t());
        else
          mpz_addmul(acc.get_mpz_t(), c2[i].get_mpz_t(), d[q - i].get_mpz_t());
      }
    }
    d[n] = acc;
  }
  return SequencePrefix{
      .name = "s_km_rec", .params = {.k = k, .m = m}, .values = std::move(d)};
}

SequencePrefix d_m_by_recurrence(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "d_m_by_recurrence");
  require_m_positive(m, "d_m_by_recurrence");
  SequencePrefix s = s_km_by_recurrence(p, m, N);
  s.name = "d";
  s.params.p = p;
  return s;
}

SequencePrefix c_pm2_by_recurrence(int sign, std::size_t N) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("c_pm2_by_recurrence: sign must be +1 or -1");
  std::vector<Integer> c(N + 1);
  c[0] = 1;
  if (N >= 1) c[1] = 4 * sign;
  for (std::size_t n = 1; 2 * n <= N; ++n) {
    c[2 * n] = sign * 2 * c[2 * n - 1] - c[2 * n - 2] + c[n] + c[n - 1];
    if (2 * n + 1 <= N)
      c[2 * n + 1] = sign * 2 * c[2 * n] - c[2 * n - 1] + sign * 2 * c[n];
  }
  return SequencePrefix{
      .name = "c_pm2", .params = {.k = 2, .m = 2 * sign}, .values = std::move(c)};
}

std::vector<Integer> colored_count_prefix(std::uint64_t k, std::uint64_t one_colors,
                                          std::uint64_t big_colors, std::size_t N) {
  require_base(k, "colored_count_prefix");
  std::vector<Integer> dp(N + 1);
  dp[0] = 1;
  for (std::uint64_t part = 1; part <= N; part *= k) {
    const std::uint64_t colors = (part == 1) ? one_colors : big_colors;
    std::vector<Integer> next(N + 1);
    for (std::size_t t = 0; t <= N; ++t) {
      if (dp[t] == 0) continue;
      // j copies of this part, colored from `colors`: multiset weight
      for (std::uint64_t j = 0; t + j * part <= N; ++j) {
        Integer w = binomial(j + colors - 1, j);
        mpz_addmul(next[t + j * part].get_mpz_t(), w.get_mpz_t(), dp[t].get_mpz_t());
      }
    }
    dp = std::move(next);
    if (part > N / k) break;
  }
  return dp;
}

Integer colored_count(std::uint64_t k, std::uint64_t one_colors, std::uint64_t big_colors,
                      std::size_t n) {
  return colored_count_prefix(k, one_colors, big_colors, n)[n];
}

Integer colored_count_oracle(std::uint64_t k, long m, std::size_t n) {
  require_m_positive(m, "colored_count_oracle");
  const std::uint64_t um = static_cast<std::uint64_t>(m);
  return colored_count(k, k * um, (k - 1) * um, n);
}

SequencePrefix a_pm(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "a_pm");
  require_m_positive(m, "a_pm");
  TruncatedSeries f = infinite_product(p, -m, N);
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  return SequencePrefix{.name = "a_pm", .params = {.k = p, .m = m, .p = p}, .values = std::move(v)};
}

SequencePrefix d_p_cap(std::uint64_t p, std::size_t N) {
  require_prime_ge3(p, "d_p_cap");
  TruncatedSeries f = infinite_product(p, static_cast<long>(p - 1), N);
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  return SequencePrefix{.name = "D_p", .params = {.k = p, .p = p}, .values = std::move(v)};
}

SequencePrefix d_minus1(std::uint64_t p, std::size_t N) {
  SequencePrefix cap = d_p_cap(p, N);
  std::vector<Integer> v(N + 1);
  v[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) v[n] = cap.values[n] - cap.values[n - 1];
  return SequencePrefix{
      .name = "d", .params = {.k = p, .m = -1, .p = p}, .values = std::move(v)};
}

SequencePrefix t_m_convolution(long m, std::size_t N) {
  require_m_positive(m, "t_m_convolution");
  TruncatedSeries f = pow(infinite_product(2, 1, N), m);
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  return SequencePrefix{.name = "t_m", .params = {.k = 2, .m = m}, .values = std::move(v)};
}

SequencePrefix u_m_partial_sums(long m, std::size_t N) {
  require_m_positive(m, "u_m_partial_sums");
  SequencePrefix c = s_km_by_recurrence(2, m, N);
  std::vector<Integer> v(N + 1);
  v[0] = c.values[0];
  for (std::size_t n = 1; n <= N; ++n) v[n] = v[n - 1] + c.values[n];
  return SequencePrefix{.name = "U", .params = {.k = 2, .m = m}, .values = std::move(v)};
}

SequencePrefix vartheta(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "vartheta");
  require_m_positive(m, "vartheta");
  SequencePrefix d = s_km_by_recurrence(p, m, p * N);
  std::vector<Integer> v(N + 1);
  for (std::size_t n = 0; n <= N; ++n) v[n] = d.values[p * n] - d.values[n];
  return SequencePrefix{
      .name = "vartheta", .params = {.k = p, .m = m, .p = p}, .values = std::move(v)};
}

std::shared_ptr<const SequencePrefix> PrefixCache::get_or_compute(const std::string& name,
                                                                  const SequenceParams& params,
                                                                  std::size_t N,
                                                                  const Producer& make) {
  Key key{name, params, N};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  // Computed outside the lock: distinct keys proceed in parallel, a rare
  // duplicate computation for the same key is harmless (first insert wins).
  auto value = std::make_shared<const SequencePrefix>(make());
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = entries_.emplace(std::move(key), std::move(value));
  return it->second;
}

std::size_t PrefixCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

}  // namespace partlab
