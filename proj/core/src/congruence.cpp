#include "partlab/congruence.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "partlab/automata.hpp"
#include "partlab/digits.hpp"
#include "partlab/parallel.hpp"
#include "partlab/series.hpp"
#include "partlab/valuation.hpp"

namespace partlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string point(std::uint64_t p, long m, std::size_t n) {
  std::ostringstream os;
  os << "p=" << p << " m=" << m << " n=" << n;
  return os.str();
}

void require_prime_ge3(std::uint64_t p, const char* who) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be a prime >= 3");
}

std::uint64_t nu_exact(const Integer& x, std::uint64_t p) { return nu_p(x, p).value(); }

bool divisible(const Integer& x, const Integer& M) {
  return mpz_divisible_p(x.get_mpz_t(), M.get_mpz_t()) != 0;
}

/* Series-engine family H_{k,m} for consecutive m, one multiplication per
 * step: visit(m, coeffs) is called for m = first, first+sign, ... last. */
void skm_family_walk(std::uint64_t k, long first, long last, std::size_t N,
                     const std::function<void(long, const TruncatedSeries&)>& visit) {
  const int step = (last >= first) ? 1 : -1;
  TruncatedSeries g = mul(binomial_power(-1, 1, N),
                          infinite_product(k, -static_cast<long>(k - 1), N));
  if (step < 0) g = inverse(g);
  TruncatedSeries h = pow(g, std::abs(first));
  for (long m = first;; m += step) {
    if (m != 0) visit(m, h);
    if (m == last) break;
    h = mul(h, g);
  }
}

}  // namespace

CheckReport check_parylem1(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "check_parylem1");
  if (m < 1) throw std::invalid_argument("check_parylem1: m must be >= 1");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "parylem1";
  r.grid = point(p, m, N);
  const std::uint64_t alpha = nu_exact(Integer(m), p);
  const Integer M = integer_pow(p, alpha + 1);
  r.add_metadata("modulus", to_decimal(M));
  SequencePrefix d = d_m_by_recurrence(p, m, N);
  for (std::size_t n = 1; n <= N; ++n) {
    ++r.points_checked;
    if (!divisible(d.values[n], M)) {
      r.counterexamples.push_back({point(p, m, n), {{"d_m(n)", to_decimal(d.values[n])}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_parylem2(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "check_parylem2");
  if (m < 1) throw std::invalid_argument("check_parylem2: m must be >= 1");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "parylem2";
  r.grid = point(p, m, N);
  const std::uint64_t alpha = nu_exact(Integer(m), p);
  const Integer M = integer_pow(p, alpha + 2);
  r.add_metadata("modulus", to_decimal(M));
  r.add_metadata("prefix_order", std::to_string(p * N));
  SequencePrefix d = d_m_by_recurrence(p, m, p * N);
  for (std::size_t n = 1; n <= N; ++n) {
    ++r.points_checked;
    Integer diff = d.values[p * n] - d.values[n];
    if (!divisible(diff, M)) {
      r.counterexamples.push_back({point(p, m, n), {{"d_m(pn)-d_m(n)", to_decimal(diff)}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_parylem3(std::uint64_t p, unsigned alpha, std::size_t N) {
  require_prime_ge3(p, "check_parylem3");
  const auto t0 = Clock::now();
  const Integer mz = integer_pow(p, alpha);
  const long m = static_cast<long>(mz.get_ui());
  const std::uint64_t pm = p * static_cast<std::uint64_t>(m);
  CheckReport r;
  r.name = "parylem3";
  {
    std::ostringstream os;
    os << "p=" << p << " alpha=" << alpha << " n=1.." << N << " (p not dividing n)";
    r.grid = os.str();
  }
  const Integer M = integer_pow(p, alpha + 2);
  r.add_metadata("modulus", to_decimal(M));
  SequencePrefix d = d_m_by_recurrence(p, m, N);
  for (std::size_t n = 1; n <= N; ++n) {
    if (n % p == 0) continue;
    ++r.points_checked;
    Integer expected;
    if (n <= pm) {
      expected = binomial(pm, n);
      if (n % 2 == 0) expected = -expected;  // (-1)^{n+1}
    } else {
      expected = d.values[n - pm];
    }
    Integer diff = d.values[n] - expected;
    if (!divisible(diff, M)) {
      r.counterexamples.push_back({point(p, m, n), {{"difference", to_decimal(diff)}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

BinomCongruence binom_congruence(std::uint64_t p, std::uint64_t m, std::uint64_t i) {
  require_prime_ge3(p, "binom_congruence");
  if (m < 1 || i > m) throw std::invalid_argument("binom_congruence: need 1 <= m and i <= m");
  const Integer cmi = binomial(m, i);
  const std::uint64_t am = nu_exact(Integer(static_cast<unsigned long>(m)), p);
  const std::uint64_t ac = nu_exact(cmi, p);
  const unsigned chi =
      (p == 3 ? 1u : 0u) - ((p == 3 && am >= 1 && ac == 0) ? 1u : 0u);
  const unsigned e = static_cast<unsigned>(am + ac + 3 - chi);
  const Integer diff = binomial(p * m, p * i) - cmi;
  return {e, chi, divisible(diff, integer_pow(p, e))};
}

CheckReport check_parylem4_grid(std::span<const std::uint64_t> primes, std::uint64_t m_max) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "parylem4";
  {
    std::ostringstream os;
    os << "p in {";
    for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
    os << "} m=1.." << m_max << " i=0..m";
    r.grid = os.str();
  }
  for (std::uint64_t p : primes) {
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      for (std::uint64_t i = 0; i <= m; ++i) {
        ++r.points_checked;
        BinomCongruence b = binom_congruence(p, m, i);
        if (!b.pass) {
          std::ostringstream os;
          os << "p=" << p << " m=" << m << " i=" << i << " E=" << b.modulus_exponent;
          r.counterexamples.push_back(
              {os.str(), {{"difference", to_decimal(binomial(p * m, p * i) - binomial(m, i))}}});
        }
      }
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_wolstenholme(std::span<const std::uint64_t> primes) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "wolstenholme";
  r.grid = "harmonic sums over 1..p-1";
  for (std::uint64_t p : primes) {
    if (p < 5 || !is_prime(p))
      throw std::invalid_argument("check_wolstenholme: primes must be >= 5");
    // Common denominator (p-1)! has zero p-valuation, so the valuation of
    // the numerator equals the valuation of the rational sum.
    Integer fact = 1;
    for (std::uint64_t g = 1; g < p; ++g) fact *= static_cast<unsigned long>(g);
    Integer h1 = 0, h2 = 0;
    for (std::uint64_t g = 1; g < p; ++g) {
      Integer q = fact / static_cast<unsigned long>(g);
      h1 += q;
      h2 += q * q;  // denominator ((p-1)!)^2 for the square sum
    }
    r.points_checked += 2;
    if (nu_p(h1, p) < ExtNat(2))
      r.counterexamples.push_back(
          {"p=" + std::to_string(p) + " sum 1/g", {{"numerator", to_decimal(h1)}}});
    if (nu_p(h2, p) < ExtNat(1))
      r.counterexamples.push_back(
          {"p=" + std::to_string(p) + " sum 1/g^2", {{"numerator", to_decimal(h2)}}});
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_modp_lemma(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "check_modp_lemma");
  if (m < 1) throw std::invalid_argument("check_modp_lemma: m must be >= 1");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "modp";
  r.grid = point(p, m, N);
  const std::uint64_t um = static_cast<std::uint64_t>(m);
  const std::uint64_t alpha = nu_exact(Integer(m), p);
  const Integer M = integer_pow(p, 2 * alpha + 3 - (p == 3 ? 1 : 0));
  r.add_metadata("modulus", to_decimal(M));
  r.add_metadata("prefix_order", std::to_string(p * N));

  SequencePrefix theta = vartheta(p, m, N);
  std::vector<Integer> cm(um + 1), cpm(um + 1);
  for (std::uint64_t j = 0; j <= um; ++j) {
    cm[j] = binomial(um, j);
    cpm[j] = binomial(p * um, p * j);
  }

  // vartheta_m(1) = 0 (mod M)
  ++r.points_checked;
  if (!divisible(theta.values[1], M))
    r.counterexamples.push_back(
        {point(p, m, 1) + " theta(1)", {{"theta(1)", to_decimal(theta.values[1])}}});

  for (std::size_t n = 1; n <= N; ++n) {
    ++r.points_checked;
    const std::size_t top = std::min<std::size_t>(um, n);
    // alternating-sum identity
    Integer lhs = 0;
    for (std::size_t i = 0; i <= top; ++i) {
      if (i & 1)
        mpz_submul(lhs.get_mpz_t(), cm[i].get_mpz_t(), theta.values[n - i].get_mpz_t());
      else
        mpz_addmul(lhs.get_mpz_t(), cm[i].get_mpz_t(), theta.values[n - i].get_mpz_t());
    }
    Integer rhs = (n <= um) ? Integer(binomial(p * um, p * n) - cm[n]) : Integer(0);
    if (n % 2 == 0) rhs = -rhs;  // (-1)^{n+1}
    if (!divisible(Integer(lhs - rhs), M)) {
      r.counterexamples.push_back({point(p, m, n) + " alternating-sum",
                                   {{"lhs", to_decimal(lhs)}, {"rhs", to_decimal(rhs)}}});
      break;
    }
    // explicit closed form for d_m(pn) - d_m(n)
    Integer closed = 0;
    for (std::size_t j = 0; j <= top; ++j) {
      Integer term = (cpm[j] - cm[j]) * binomial(n - j + um - 1, n - j);
      if (j & 1)
        closed += term;
      else
        closed -= term;  // (-1)^{j+1}
    }
    if (!divisible(Integer(theta.values[n] - closed), M)) {
      r.counterexamples.push_back(
          {point(p, m, n) + " closed-form",
           {{"theta(n)", to_decimal(theta.values[n])}, {"rhs", to_decimal(closed)}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_parythm3(std::uint64_t p, long m, std::size_t N) {
  require_prime_ge3(p, "check_parythm3");
  if (m < 1) throw std::invalid_argument("check_parythm3: m must be >= 1");
  const std::uint64_t alpha = nu_exact(Integer(m), p);
  if (p == 3 && alpha < 1)
    throw std::invalid_argument(
        "check_parythm3: requires p >= 5, or p = 3 with nu_3(m) >= 1; "
        "got p = 3 with nu_3(m) = 0");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "parythm3";
  r.grid = point(p, m, N);
  const Integer M = integer_pow(p, alpha + 3);
  r.add_metadata("modulus", to_decimal(M));
  SequencePrefix d = d_m_by_recurrence(p, m, p * N);
  for (std::size_t n = 1; n <= N; ++n) {
    ++r.points_checked;
    Integer diff = d.values[p * n] - d.values[n];
    if (!divisible(diff, M)) {
      r.counterexamples.push_back({point(p, m, n), {{"d_m(pn)-d_m(n)", to_decimal(diff)}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport churchhouse_congruences(unsigned k_max, std::uint64_t t_max) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "churchhouse";
  {
    std::ostringstream os;
    os << "k=1.." << k_max << " odd t<=" << t_max;
    r.grid = os.str();
  }
  const std::uint64_t top_index = (1ull << (2 * k_max + 1)) * t_max;
  r.add_metadata("prefix_order", std::to_string(2 * top_index));
  SequencePrefix b = binary_partitions(2 * top_index);
  auto c1 = [&](std::uint64_t n) -> const Integer& { return b.values[2 * n]; };

  for (unsigned k = 1; k <= k_max; ++k) {
    std::uint64_t min1 = ~0ull, min2 = ~0ull;
    for (std::uint64_t t = 1; t <= t_max; t += 2) {
      r.points_checked += 2;
      const Integer d1 = c1((1ull << (2 * k + 1)) * t) - c1((1ull << (2 * k - 1)) * t);
      const Integer d2 = c1((1ull << (2 * k)) * t) - c1((1ull << (2 * k - 2)) * t);
      const std::uint64_t v1 = nu_exact(d1, 2), v2 = nu_exact(d2, 2);
      min1 = std::min(min1, v1);
      min2 = std::min(min2, v2);
      if (v1 < 3 * k + 2) {
        std::ostringstream os;
        os << "k=" << k << " t=" << t << " family c_1(2^{2k+1}t)-c_1(2^{2k-1}t)";
        r.counterexamples.push_back({os.str(), {{"difference", to_decimal(d1)}}});
      }
      if (v2 < 3 * k) {
        std::ostringstream os;
        os << "k=" << k << " t=" << t << " family c_1(2^{2k}t)-c_1(2^{2k-2}t)";
        r.counterexamples.push_back({os.str(), {{"difference", to_decimal(d2)}}});
      }
    }
    // Sharpness: the stated exponents are attained (no higher power of 2
    // divides every member of the family).
    r.points_checked += 2;
    if (min1 != 3 * k + 2)
      r.counterexamples.push_back({"k=" + std::to_string(k) + " sharpness family 1",
                                   {{"min_valuation", std::to_string(min1)}}});
    if (min2 != 3 * k)
      r.counterexamples.push_back({"k=" + std::to_string(k) + " sharpness family 2",
                                   {{"min_valuation", std::to_string(min2)}}});
    std::ostringstream os;
    os << "k=" << k << ": min valuations " << min1 << "/" << min2;
    r.notes.push_back(os.str());
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

std::vector<std::pair<std::uint64_t, long>> speccong_search(
    std::span<const std::uint64_t> p_set, long m_lo, long m_hi, unsigned k_exp, std::size_t N,
    unsigned jobs) {
  if (k_exp < 3) throw std::invalid_argument("speccong_search: k_exp must be >= 3");
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("speccong_search: bad m range");
  for (std::uint64_t p : p_set) require_prime_ge3(p, "speccong_search");

  struct Task {
    std::uint64_t p;
    long m;
  };
  std::vector<Task> tasks;
  for (std::uint64_t p : p_set)
    for (long m = m_lo; m <= m_hi; ++m) tasks.push_back({p, m});
  std::vector<char> hit(tasks.size(), 0);

  parallel_for(0, tasks.size(), jobs, [&](std::size_t ti) {
    const std::uint64_t p = tasks[ti].p;
    const long m = tasks[ti].m;
    const std::uint64_t um = static_cast<std::uint64_t>(m);
    const std::uint64_t alpha = nu_exact(Integer(m), p);
    const Integer M = integer_pow(p, alpha + k_exp);
    const std::uint64_t pm = p * um;
    std::vector<Integer> c1(pm + 1), c2(um + 1);
    for (std::uint64_t i = 0; i <= pm; ++i) c1[i] = binomial(pm, i);
    for (std::uint64_t i = 0; i <= um; ++i) c2[i] = binomial(um, i);

    // Exact recurrence with early abort on the first failing multiple of p;
    // most (p, m) fail at n = p already, so the grid stays cheap.
    const std::size_t top_n = p * N;
    std::vector<Integer> d(top_n + 1);
    d[0] = 1;
    Integer acc;
    bool ok = true;
    for (std::size_t n = 1; n <= top_n && ok; ++n) {
      acc = 0;
      const std::size_t top = std::min<std::size_t>(pm, n);
      for (std::size_t i = 1; i <= top; ++i) {
        if (i & 1)
          mpz_addmul(acc.get_mpz_t(), c1[i].get_mpz_t(), d[n - i].get_mpz_t());
        else
          mpz_submul(acc.get_mpz_t(), c1[i].get_mpz_t(), d[n - i].get_mpz_t());
      }
      if (n % p == 0) {
        const std::size_t q = n / p;
        const std::size_t top2 = std::min<std::size_t>(um, q);
        for (std::size_t i = 0; i <= top2; ++i) {
          if (i & 1)
            mpz_submul(acc.get_mpz_t(), c2[i].get_mpz_t(), d[q - i].get_mpz_t());
          else
            mpz_addmul(acc.get_mpz_t(), c2[i].get_mpz_t(), d[q - i].get_mpz_t());
        }
      }
      d[n] = acc;
      if (n % p == 0 && !divisible(Integer(d[n] - d[n / p]), M)) ok = false;
    }
    hit[ti] = ok ? 1 : 0;
  });

  std::vector<std::pair<std::uint64_t, long>> found;
  for (std::size_t ti = 0; ti < tasks.size(); ++ti)
    if (hit[ti]) found.emplace_back(tasks[ti].p, tasks[ti].m);
  std::sort(found.begin(), found.end());
  return found;
}

CheckReport speccong_report(std::span<const std::uint64_t> p_set, long m_lo, long m_hi,
                            unsigned k_exp, std::size_t N, unsigned jobs) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "speccong";
  {
    std::ostringstream os;
    os << "p in {";
    for (std::size_t i = 0; i < p_set.size(); ++i) os << (i ? "," : "") << p_set[i];
    os << "} m=" << m_lo << ".." << m_hi << " k_exp=" << k_exp << " n=1.." << N;
    r.grid = os.str();
  }
  r.add_metadata("exponent_convention", "nu_p(m)+k_exp");
  auto found = speccong_search(p_set, m_lo, m_hi, k_exp, N, jobs);
  r.points_checked = p_set.size() * static_cast<std::uint64_t>(m_hi - m_lo + 1);
  for (const auto& [p, m] : found) {
    std::ostringstream os;
    os << "(" << p << "," << m << ")";
    r.notes.push_back(os.str());
  }
  r.add_metadata("pairs_found", std::to_string(found.size()));
  r.runtime_seconds = seconds_since(t0);
  return r;
}

ConjectureSelector conjecture_selector_from_name(const std::string& name) {
  if (name == "conj1") return ConjectureSelector::conj1;
  if (name == "conj2") return ConjectureSelector::conj2;
  if (name == "phi4-a" || name == "phi4_a") return ConjectureSelector::phi4_a;
  if (name == "phi4-b" || name == "phi4_b") return ConjectureSelector::phi4_b;
  if (name == "phi4-pow2" || name == "phi4_pow2") return ConjectureSelector::phi4_pow2;
  if (name == "phi4-shift" || name == "phi4_shift") return ConjectureSelector::phi4_shift;
  throw std::invalid_argument(
      "unknown conjecture selector '" + name +
      "'; available: conj1 conj2 phi4-a phi4-b phi4-pow2 phi4-shift");
}

namespace {

CheckReport conjecture_conj1(const ConjectureGrid& grid) {
  CheckReport r;
  r.name = "conj1";
  {
    std::ostringstream os;
    os << "m=2k, k=1.." << grid.k_max << " and odd m<=11, n=1.." << grid.N;
    r.grid = os.str();
  }
  r.add_metadata("prefix_order", std::to_string(4 * grid.N));
  // Even m = 2k: exact valuation nu_2(n) + 2 nu_2(k) + 3.
  for (unsigned k = 1; k <= grid.k_max; ++k) {
    const long m = 2 * static_cast<long>(k);
    SequencePrefix c = s_km_by_recurrence(2, m, 4 * grid.N);
    const std::uint64_t base = 2 * nu_exact(Integer(k), 2) + 3;
    for (std::size_t n = 1; n <= grid.N; ++n) {
      ++r.points_checked;
      const std::uint64_t v = nu_exact(Integer(c.values[4 * n] - c.values[n]), 2);
      const std::uint64_t want = nu_exact(Integer(static_cast<long>(n)), 2) + base;
      if (v != want) {
        std::ostringstream os;
        os << "m=" << m << " n=" << n << " nu=" << v << " expected=" << want;
        r.counterexamples.push_back(
            {os.str(), {{"difference", to_decimal(c.values[4 * n] - c.values[n])}}});
      }
    }
  }
  // Odd m: lower bounds nu_2(n)+3 (m = 4k+1) and nu_2(n)+6 (m = 4k+3),
  // with equality expected infinitely often; attainment is a note.
  for (long m : {1L, 5L, 9L, 3L, 7L, 11L}) {
    SequencePrefix c = s_km_by_recurrence(2, m, 4 * grid.N);
    const std::uint64_t off = (m % 4 == 1) ? 3 : 6;
    bool attained = false;
    for (std::size_t n = 1; n <= grid.N; ++n) {
      ++r.points_checked;
      const std::uint64_t v = nu_exact(Integer(c.values[4 * n] - c.values[n]), 2);
      const std::uint64_t bound = nu_exact(Integer(static_cast<long>(n)), 2) + off;
      if (v < bound) {
        std::ostringstream os;
        os << "m=" << m << " n=" << n << " nu=" << v << " bound=" << bound;
        r.counterexamples.push_back(
            {os.str(), {{"difference", to_decimal(c.values[4 * n] - c.values[n])}}});
      }
      if (v == bound) attained = true;
    }
    std::ostringstream os;
    os << "m=" << m << ": equality " << (attained ? "attained" : "not attained")
       << " in range";
    r.notes.push_back(os.str());
  }
  return r;
}

CheckReport conjecture_conj2(const ConjectureGrid& grid) {
  CheckReport r;
  r.name = "conj2";
  {
    std::ostringstream os;
    os << "p in {";
    for (std::size_t i = 0; i < grid.p_set.size(); ++i) os << (i ? "," : "") << grid.p_set[i];
    os << "} m=1.." << grid.m_max << " n=1.." << grid.N;
    r.grid = os.str();
  }
  for (std::uint64_t p : grid.p_set) {
    for (long m = 1; m <= grid.m_max; ++m) {
      SequencePrefix d = s_km_by_recurrence(p, m, p * p * grid.N);
      const std::uint64_t alpha = nu_exact(Integer(m), p);
      const bool last_residue = (static_cast<std::uint64_t>(m) % p == p - 1);
      bool attained = false;
      for (std::size_t n = 1; n <= grid.N; ++n) {
        ++r.points_checked;
        const Integer diff = d.values[p * p * n] - d.values[n];
        const std::uint64_t v = nu_exact(diff, p);
        const std::uint64_t nun = nu_exact(Integer(static_cast<long>(n)), p);
        if (!last_residue) {
          const std::uint64_t want = nun + 2 * alpha + 3 - (p == 3 ? 1 : 0);
          if (v != want) {
            std::ostringstream os;
            os << point(p, m, n) << " nu=" << v << " expected=" << want;
            r.counterexamples.push_back({os.str(), {{"difference", to_decimal(diff)}}});
          }
        } else {
          const std::uint64_t bound = nun + 4 - (p == 3 ? 1 : 0);
          if (v < bound) {
            std::ostringstream os;
            os << point(p, m, n) << " nu=" << v << " bound=" << bound;
            r.counterexamples.push_back({os.str(), {{"difference", to_decimal(diff)}}});
          }
          if (v == bound) attained = true;
        }
      }
      if (last_residue) {
        std::ostringstream os;
        os << "p=" << p << " m=" << m << " (m = p-1 mod p): inequality form; equality "
           << (attained ? "attained" : "not attained") << " in range";
        r.notes.push_back(os.str());
      }
    }
  }
  return r;
}

CheckReport conjecture_phi4_a(const ConjectureGrid& grid) {
  CheckReport r;
  r.name = "phi4-a";
  r.grid = "a_n = phi_4(S_{4,1}(n+1)), recurrence indices n=0.." + std::to_string(grid.N);
  const std::size_t top = 16 * grid.N + 16;
  r.add_metadata("prefix_order", std::to_string(top + 1));
  SequencePrefix s = s_km_by_recurrence(4, 1, top + 1);
  auto a = [&](std::size_t n) { return phi_k(s.values[n + 1], 4); };
  auto expect = [&](std::size_t lhs, std::size_t rhs, const char* what) {
    ++r.points_checked;
    if (a(lhs) != a(rhs)) {
      std::ostringstream os;
      os << what << " fails: a(" << lhs << ")=" << a(lhs).str() << " a(" << rhs
         << ")=" << a(rhs).str();
      r.counterexamples.push_back({os.str(), {}});
    }
  };
  const bool anchors = a(0) == ExtNat(1) && a(7) == ExtNat(1) && a(1) == ExtNat(0) &&
                       a(3) == ExtNat(0);
  ++r.points_checked;
  if (!anchors) r.counterexamples.push_back({"anchor values a0,a1,a3,a7", {}});
  for (std::size_t n = 0; n <= grid.N; ++n) {
    expect(4 * n + 2, 4 * n, "a(4n+2)=a(4n)");
    expect(8 * n + 5, 4 * n + 1, "a(8n+5)=a(4n+1)");
    expect(8 * n + 3, 4 * n + 1, "a(8n+3)=a(4n+1)");
    expect(8 * n + 1, 4 * n + 1, "a(8n+1)=a(4n+1)");
    expect(16 * n + 7, 2 * n, "a(16n+7)=a(2n)");
    expect(16 * n + 15, n, "a(16n+15)=a(n)");
  }
  return r;
}

CheckReport conjecture_phi4_b(const ConjectureGrid& grid) {
  CheckReport r;
  r.name = "phi4-b";
  r.grid = "b_n = phi_4(S_{4,2}(n+1)), recurrence indices n=0.." + std::to_string(grid.N);
  const std::size_t top = 16 * grid.N + 16;
  r.add_metadata("prefix_order", std::to_string(top + 1));
  SequencePrefix s = s_km_by_recurrence(4, 2, top + 1);
  auto b = [&](std::size_t n) { return phi_k(s.values[n + 1], 4); };
  auto expect = [&](std::size_t lhs, std::size_t rhs, const char* what) {
    ++r.points_checked;
    if (b(lhs) != b(rhs)) {
      std::ostringstream os;
      os << what << " fails: b(" << lhs << ")=" << b(lhs).str() << " b(" << rhs
         << ")=" << b(rhs).str();
      r.counterexamples.push_back({os.str(), {}});
    }
  };
  const bool anchors = b(0) == ExtNat(1) && b(1) == ExtNat(1) && b(3) == ExtNat(2);
  ++r.points_checked;
  if (!anchors) r.counterexamples.push_back({"anchor values b0,b1,b3", {}});
  for (std::size_t n = 0; n <= grid.N; ++n) {
    expect(4 * n + 2, 4 * n, "b(4n+2)=b(4n)");
    expect(4 * n + 1, 4 * n, "b(4n+1)=b(4n)");
    expect(8 * n + 7, 2 * n + 1, "b(8n+7)=b(2n+1)");
    expect(16 * n + 11, 8 * n + 3, "b(16n+11)=b(8n+3)");
    expect(16 * n + 3, 8 * n + 3, "b(16n+3)=b(8n+3)");
  }
  return r;
}

CheckReport conjecture_phi4_pow2(const ConjectureGrid& grid) {
  CheckReport r;
  r.name = "phi4-pow2";
  {
    std::ostringstream os;
    os << "s=2.." << grid.s_max << " n=1.." << grid.N;
    r.grid = os.str();
  }
  for (unsigned s = 2; s <= grid.s_max; ++s) {
    const long m = 1L << s;
    SequencePrefix c = s_km_by_recurrence(4, m, grid.N);
    for (std::size_t n = 1; n <= grid.N; ++n) {
      ++r.points_checked;
      const std::uint64_t nu2n = nu_exact(Integer(2 * static_cast<long>(n)), 2);
      const std::uint64_t want_nu = s + 1 + (nu2n % 2);
      const std::uint64_t want_phi = (s + 1) / 2 + ((s + 1) * nu2n) % 2;
      if (nu_p(c.values[n], 2) != ExtNat(want_nu) ||
          phi_k(c.values[n], 4) != ExtNat(want_phi)) {
        std::ostringstream os;
        os << "s=" << s << " n=" << n << " nu2=" << nu_p(c.values[n], 2).str()
           << " expected=" << want_nu;
        r.counterexamples.push_back({os.str(), {{"S_{4,2^s}(n)", to_decimal(c.values[n])}}});
      }
    }
  }
  return r;
}

CheckReport conjecture_phi4_shift(const ConjectureGrid& grid) {
  CheckReport r;
  r.name = "phi4-shift";
  {
    std::ostringstream os;
    os << "s=3.." << grid.s_max << " m=0.." << grid.shift_m_max << " n=1.." << grid.N;
    r.grid = os.str();
  }
  for (unsigned s = 3; s <= grid.s_max; ++s) {
    SequencePrefix base = s_km_by_recurrence(4, 1L << (s - 1), grid.N);
    for (long m = 0; m <= grid.shift_m_max; ++m) {
      const long colors = (1L << s) * m + (1L << (s - 1));
      SequencePrefix c = s_km_by_recurrence(4, colors, grid.N);
      for (std::size_t n = 1; n <= grid.N; ++n) {
        ++r.points_checked;
        if (phi_k(c.values[n], 4) != phi_k(base.values[n], 4)) {
          std::ostringstream os;
          os << "s=" << s << " m=" << m << " n=" << n;
          r.counterexamples.push_back(
              {os.str(),
               {{"S_{4,2^s m+2^{s-1}}(n)", to_decimal(c.values[n])},
                {"S_{4,2^{s-1}}(n)", to_decimal(base.values[n])}}});
        }
      }
    }
  }
  return r;
}

}  // namespace

CheckReport conjecture_checks(ConjectureSelector sel, const ConjectureGrid& grid) {
  const auto t0 = Clock::now();
  CheckReport r;
  switch (sel) {
    case ConjectureSelector::conj1:
      r = conjecture_conj1(grid);
      break;
    case ConjectureSelector::conj2:
      r = conjecture_conj2(grid);
      break;
    case ConjectureSelector::phi4_a:
      r = conjecture_phi4_a(grid);
      break;
    case ConjectureSelector::phi4_b:
      r = conjecture_phi4_b(grid);
      break;
    case ConjectureSelector::phi4_pow2:
      r = conjecture_phi4_pow2(grid);
      break;
    case ConjectureSelector::phi4_shift:
      r = conjecture_phi4_shift(grid);
      break;
  }
  r.conjecture = true;
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_a_pm_theorem(std::uint64_t p, unsigned alpha, std::size_t N) {
  require_prime_ge3(p, "check_a_pm_theorem");
  if (alpha < 1) throw std::invalid_argument("check_a_pm_theorem: alpha must be >= 1");
  const auto t0 = Clock::now();
  const Integer pa = integer_pow(p, alpha);
  const long m = static_cast<long>((p - 1) * (pa.get_ui() - 1));
  CheckReport r;
  r.name = "a-pm-theorem";
  {
    std::ostringstream os;
    os << "p=" << p << " alpha=" << alpha << " m=" << m << " n=" << pa.get_ui() << ".." << N;
    r.grid = os.str();
  }
  const Integer M(static_cast<unsigned long>(p * p));
  SequencePrefix a = a_pm(p, m, N);
  for (std::size_t n = static_cast<std::size_t>(pa.get_ui()); n <= N; ++n) {
    ++r.points_checked;
    // the governing digit is the lowest nonzero one at index >= alpha
    // (the alpha low digits are absorbed by the binomial product); one
    // exists since n >= p^alpha
    const DigitExpansion e = digits(static_cast<std::uint64_t>(n), p);
    std::size_t s = alpha;
    while (s < e.digits.size() && e.digits[s] == 0) ++s;
    Integer expected = -Integer(static_cast<long>(p)) *
                       static_cast<unsigned long>(inverse_mod_p(e.digits[s], p));
    const bool residue_ok = divisible(Integer(a.values[n] - expected), M);
    const bool valuation_ok = nu_p(a.values[n], p) == ExtNat(1);
    if (!residue_ok || !valuation_ok) {
      r.counterexamples.push_back({point(p, m, n), {{"A_{p,m}(n)", to_decimal(a.values[n])}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_cor0(long m, std::size_t N) {
  if (m % 2 == 0) throw std::invalid_argument("check_cor0: m must be odd");
  if (m == -1) throw std::invalid_argument("check_cor0: m = -1 excluded");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "cor0";
  {
    std::ostringstream os;
    os << "m=" << m << " n=1.." << N;
    r.grid = os.str();
  }
  r.add_metadata("prefix_order", std::to_string(2 * N));
  SequencePrefix c = (m >= 1) ? s_km_by_recurrence(2, m, 2 * N) : s_km(2, m, 2 * N);
  for (std::size_t n = 1; n <= N; ++n) {
    ++r.points_checked;
    const Integer diff = c.values[2 * n] - c.values[n];
    if (nu_p(diff, 2) != ExtNat(1)) {
      r.counterexamples.push_back(
          {"m=" + std::to_string(m) + " n=" + std::to_string(n),
           {{"c_m(2n)-c_m(n)", to_decimal(diff)}}});
      break;
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_mainthm(long m_lo, long m_hi, std::size_t N, unsigned jobs) {
  if (m_lo > m_hi) throw std::invalid_argument("check_mainthm: bad m range");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "mainthm";
  {
    std::ostringstream os;
    os << "m=" << m_lo << ".." << m_hi << " (excluding 0 and -1), n=1.." << N;
    r.grid = os.str();
  }
  SequencePrefix t = ptm(N);
  std::span<const Integer> tspan(t.values);

  // Positive and negative halves walk the series family independently.
  std::vector<std::vector<Counterexample>> ces(2);
  std::vector<std::uint64_t> counts(2, 0);
  auto run_half = [&](std::size_t half) {
    long first = 0, last = 0;
    if (half == 0) {
      first = 1;
      last = std::max(m_hi, 1L);
      if (m_hi < 1) return;
    } else {
      first = -1;
      last = std::min(m_lo, -1L);
      if (m_lo > -1) return;
    }
    skm_family_walk(2, first, last, N, [&](long m, const TruncatedSeries& h) {
      if (m < m_lo || m > m_hi || m == 0 || m == -1) return;
      for (std::size_t n = 1; n <= N; ++n) {
        ++counts[half];
        const ExtNat expected = nu2_c_closed_form(m, n, tspan);
        if (nu_p(h[n], 2) != expected) {
          std::ostringstream os;
          os << "m=" << m << " n=" << n << " expected nu=" << expected.str();
          ces[half].push_back({os.str(), {{"c_m(n)", to_decimal(h[n])}}});
        }
      }
    });
  };
  parallel_for(0, 2, jobs, run_half);
  for (auto& v : ces)
    for (auto& ce : v) r.counterexamples.push_back(std::move(ce));
  r.points_checked = counts[0] + counts[1];
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_parycor2(std::span<const std::uint64_t> p_set, long m_abs_max, std::size_t N,
                           unsigned jobs) {
  if (m_abs_max < 1) throw std::invalid_argument("check_parycor2: m_abs_max must be >= 1");
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "parycor2";
  {
    std::ostringstream os;
    os << "p in {";
    for (std::size_t i = 0; i < p_set.size(); ++i) os << (i ? "," : "") << p_set[i];
    os << "} m=-" << m_abs_max << ".." << m_abs_max << " (nonzero), n=1.." << N;
    r.grid = os.str();
  }
  struct Task {
    std::uint64_t p;
    bool negative;
  };
  std::vector<Task> tasks;
  for (std::uint64_t p : p_set) {
    require_prime_ge3(p, "check_parycor2");
    tasks.push_back({p, false});
    tasks.push_back({p, true});
  }
  std::vector<std::vector<Counterexample>> ces(tasks.size());
  std::vector<std::uint64_t> counts(tasks.size(), 0);

  parallel_for(0, tasks.size(), jobs, [&](std::size_t ti) {
    const std::uint64_t p = tasks[ti].p;
    // lowest nonzero digit inverses, shared across m
    std::vector<std::uint64_t> inv_ns(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n) {
      std::size_t a = n;
      while (a % p == 0) a /= p;
      inv_ns[n] = inverse_mod_p(a % p, p);
    }
    const long first = tasks[ti].negative ? -1 : 1;
    const long last = tasks[ti].negative ? -m_abs_max : m_abs_max;
    skm_family_walk(p, first, last, N, [&](long m, const TruncatedSeries& h) {
      const std::uint64_t alpha = nu_exact(Integer(m), p);
      const Integer modulus = integer_pow(p, alpha + 2);
      Integer residue, expected;
      for (std::size_t n = 1; n <= N; ++n) {
        ++counts[ti];
        bool ok = nu_p(h[n], p) == ExtNat(alpha + 1);
        if (ok) {
          expected = Integer(static_cast<long>(p)) * m *
                     static_cast<unsigned long>(inv_ns[n]);
          mpz_mod(expected.get_mpz_t(), expected.get_mpz_t(), modulus.get_mpz_t());
          mpz_mod(residue.get_mpz_t(), h[n].get_mpz_t(), modulus.get_mpz_t());
          ok = residue == expected;
        }
        if (!ok) {
          std::ostringstream os;
          os << point(p, m, n);
          ces[ti].push_back({os.str(), {{"d_m(n)", to_decimal(h[n])}}});
        }
      }
    });
  });
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    r.points_checked += counts[ti];
    for (auto& ce : ces[ti]) r.counterexamples.push_back(std::move(ce));
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_oracle_equivalence(std::uint64_t k_max, long m_max, std::size_t n_max) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "oracle";
  {
    std::ostringstream os;
    os << "k=2.." << k_max << " m=1.." << m_max << " n=0.." << n_max;
    r.grid = os.str();
  }
  for (std::uint64_t k = 2; k <= k_max; ++k) {
    for (long m = 1; m <= m_max; ++m) {
      SequencePrefix s = s_km(k, m, n_max);
      std::vector<Integer> oracle = colored_count_prefix(
          k, k * static_cast<std::uint64_t>(m), (k - 1) * static_cast<std::uint64_t>(m), n_max);
      for (std::size_t n = 0; n <= n_max; ++n) {
        ++r.points_checked;
        if (s.values[n] != oracle[n]) {
          std::ostringstream os;
          os << "k=" << k << " m=" << m << " n=" << n;
          r.counterexamples.push_back({os.str(),
                                       {{"series", to_decimal(s.values[n])},
                                        {"oracle", to_decimal(oracle[n])}}});
        }
      }
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_dfao_agreement(std::size_t n_max) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "dfao-agree";
  r.grid = "nu2 family odd m in {-19..19}\\{-1}, y_p family p in {3,5,7}, n=1.." +
           std::to_string(n_max);
  SequencePrefix t = ptm(n_max);
  std::span<const Integer> tspan(t.values);
  for (long m = -19; m <= 19; m += 2) {
    if (m == -1) continue;
    const Dfao lsb = build_nu2_automaton(m, ReadDirection::lsb_first);
    const Dfao msb = build_nu2_automaton(m, ReadDirection::msb_first);
    for (std::size_t n = 1; n <= n_max; ++n) {
      ++r.points_checked;
      const long expected = static_cast<long>(nu2_c_closed_form(m, n, tspan).value());
      const long a = dfao_eval(lsb, n), b = dfao_eval(msb, n);
      if (a != expected || b != expected) {
        std::ostringstream os;
        os << "m=" << m << " n=" << n << " lsb=" << a << " msb=" << b
           << " expected=" << expected;
        r.counterexamples.push_back({os.str(), {}});
        break;
      }
    }
  }
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    const Dfao lsb = build_yp_automaton(p, ReadDirection::lsb_first);
    const Dfao msb = build_yp_automaton(p, ReadDirection::msb_first);
    YZSequences yz = y_z_sequences(p, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      ++r.points_checked;
      const long expected = static_cast<long>(yz.y.values[n].get_ui());
      const long a = dfao_eval(lsb, n), b = dfao_eval(msb, n);
      if (a != expected || b != expected) {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " lsb=" << a << " msb=" << b
           << " expected=" << expected;
        r.counterexamples.push_back({os.str(), {}});
        break;
      }
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_kernel_saturation(std::size_t prefix_len) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "kernel";
  r.grid = "nu2 family odd m in {-19..19}\\{-1} (k=2, depth 6); y_p p in {3,5,7}; prefix " +
           std::to_string(prefix_len);
  SequencePrefix t = ptm(prefix_len + 1);
  std::span<const Integer> tspan(t.values);
  for (long m = -19; m <= 19; m += 2) {
    if (m == -1) continue;
    std::vector<long> seq(prefix_len);
    seq[0] = 0;  // nu_2(c_m(0)) = nu_2(1) = 0
    for (std::size_t n = 1; n < prefix_len; ++n)
      seq[n] = static_cast<long>(nu2_c_closed_form(m, n, tspan).value());
    KernelProbe probe = kernel_probe(seq, 2, 6);
    ++r.points_checked;
    if (!probe.saturated) {
      r.counterexamples.push_back({"nu2 family m=" + std::to_string(m),
                                   {{"distinct", std::to_string(probe.distinct_count)}}});
    } else if (m == 3) {
      r.add_metadata("nu2_m3_classes", std::to_string(probe.distinct_count));
    }
  }
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    // deepest probe the prefix supports at >= 32 comparable points, capped
    unsigned depth = 2;
    std::uint64_t pd = p * p;
    while (depth < 6 && prefix_len / (pd * p) >= 32) {
      pd *= p;
      ++depth;
    }
    YZSequences yz = y_z_sequences(p, prefix_len);
    std::vector<long> seq(prefix_len);
    for (std::size_t n = 0; n < prefix_len; ++n)
      seq[n] = static_cast<long>(yz.y.values[n + 1].get_ui());
    KernelProbe probe = kernel_probe(seq, p, depth);
    ++r.points_checked;
    if (!probe.saturated)
      r.counterexamples.push_back({"y_p family p=" + std::to_string(p),
                                   {{"distinct", std::to_string(probe.distinct_count)}}});
    else
      r.add_metadata("y" + std::to_string(p) + "_classes",
                     std::to_string(probe.distinct_count));
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport check_y_sum(std::span<const std::pair<std::uint64_t, unsigned>> grid) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.name = "ysum";
  r.grid = "sum_{k<p^e} y_p(k) = p(p^e-1)/2 plus y+z=p pointwise";
  for (const auto& [p, e_max] : grid) {
    for (unsigned e = 1; e <= e_max; ++e) {
      ++r.points_checked;
      if (!y_sum_check(p, e)) {
        r.counterexamples.push_back(
            {"p=" + std::to_string(p) + " e=" + std::to_string(e), {}});
      }
    }
    YZSequences yz = y_z_sequences(p, 10000);
    for (std::size_t n = 1; n <= 10000; ++n) {
      ++r.points_checked;
      if (yz.y.values[n] + yz.z.values[n] != static_cast<unsigned long>(p)) {
        r.counterexamples.push_back(
            {"p=" + std::to_string(p) + " n=" + std::to_string(n) + " y+z != p", {}});
        break;
      }
    }
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

std::vector<GapTableRow> gap_table(std::size_t X, std::size_t threshold, long m_max,
                                   unsigned jobs) {
  std::vector<GapTableRow> all(static_cast<std::size_t>(m_max));
  parallel_for(0, static_cast<std::size_t>(m_max), jobs, [&](std::size_t i) {
    const long m = static_cast<long>(i) + 1;
    GapStatistics g = gap_statistics(m, X, 2);
    all[i] = {m, g.max_gap, g.distinct_count};
  });
  std::vector<GapTableRow> rows;
  for (const auto& row : all)
    if (row.distinct <= threshold) rows.push_back(row);
  return rows;
}

}  // namespace partlab
