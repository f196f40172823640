#include "partlab/valuation.hpp"

#include <stdexcept>

namespace partlab {

namespace {

std::uint64_t nu2_of_size_t(std::size_t n) {
  std::uint64_t v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace

ExtNat nu2_c_closed_form(long m, std::size_t n, std::span<const Integer> ptm_prefix) {
  if (m == 0 || m == -1)
    throw std::domain_error("nu2_c_closed_form: defined for m not in {0, -1}");
  if (n < 1) throw std::invalid_argument("nu2_c_closed_form: n must be >= 1");
  if (ptm_prefix.size() <= n)
    throw std::invalid_argument("nu2_c_closed_form: PTM prefix too short");
  if (m % 2 == 0) return ExtNat(nu_p(Integer(m), 2).value() + 1);
  if (ptm_prefix[n] != ptm_prefix[n - 1]) return ExtNat(1);
  return ExtNat(nu_p(Integer(m) + 1, 2).value() + 1);
}

ExtNat nu2_c_via_period_doubling(long m, std::size_t n) {
  if (m % 2 == 0) throw std::domain_error("nu2_c_via_period_doubling: m must be odd");
  if (m == -1) throw std::domain_error("nu2_c_via_period_doubling: m = -1 excluded");
  if (n < 1) throw std::invalid_argument("nu2_c_via_period_doubling: n must be >= 1");
  const std::uint64_t e = nu2_of_size_t(n) % 2;
  return ExtNat(1 + e * nu_p(Integer(m) + 1, 2).value());
}

ResidueForm nu_p_d_closed_form(std::uint64_t p, long m, std::size_t n) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("nu_p_d_closed_form: p must be a prime >= 3");
  if (m == 0) throw std::domain_error("nu_p_d_closed_form: m must be nonzero");
  const std::uint64_t alpha = nu_p(Integer(m), p).value();
  Integer modulus = integer_pow(p, alpha + 2);
  if (n == 0) return {ExtNat(0), Integer(1), std::move(modulus)};
  DigitExpansion e = digits(static_cast<std::uint64_t>(n), p);
  Integer residue = Integer(static_cast<long>(p)) * m *
                    static_cast<unsigned long>(inverse_mod_p(e.n_s, p));
  mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
  return {ExtNat(alpha + 1), std::move(residue), std::move(modulus)};
}

ValuationProfile::ValuationProfile(std::uint64_t p, long m, std::size_t max_n) : p_(p), m_(m) {
  if (p == 2) {
    if (m == 0 || m == -1)
      throw std::domain_error("ValuationProfile: p = 2 requires m not in {0, -1}");
    SequencePrefix t = ptm(max_n);
    ptm_ = std::move(t.values);
  } else {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("ValuationProfile: p must be prime");
    if (m == 0) throw std::domain_error("ValuationProfile: m must be nonzero");
  }
}

ExtNat ValuationProfile::closed_form(std::size_t n) const {
  if (p_ == 2) return nu2_c_closed_form(m_, n, ptm_);
  if (n == 0) return ExtNat(0);
  return ExtNat(nu_p(Integer(m_), p_).value() + 1);
}

ResidueForm ValuationProfile::residue_form(std::size_t n) const {
  if (p_ == 2) throw std::domain_error("ValuationProfile: residue form is for p >= 3");
  return nu_p_d_closed_form(p_, m_, n);
}

YZSequences y_z_sequences(std::uint64_t p, std::size_t N) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("y_z_sequences: p must be a prime >= 3");
  std::vector<std::uint64_t> inv(p);
  for (std::uint64_t r = 1; r < p; ++r) inv[r] = inverse_mod_p(r, p);

  SequencePrefix y{.name = "y", .params = {.k = p, .p = p}, .values = std::vector<Integer>(N + 1)};
  SequencePrefix z{.name = "z", .params = {.k = p, .p = p}, .values = std::vector<Integer>(N + 1)};
  for (std::size_t n = 1; n <= N; ++n) {
    std::size_t a = n;
    while (a % p == 0) a /= p;  // y_p(pn) = y_p(n)
    const std::uint64_t v = inv[a % p];  // y_p(a) = y_p(a mod p) = (a mod p)^{-1}
    y.values[n] = static_cast<unsigned long>(v);
    z.values[n] = static_cast<unsigned long>(p - v);
  }
  return {std::move(y), std::move(z)};
}

bool y_sum_check(std::uint64_t p, unsigned e) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("y_sum_check: p must be a prime >= 3");
  if (e < 1) throw std::invalid_argument("y_sum_check: exponent must be >= 1");
  Integer bound = integer_pow(p, e);
  std::vector<std::uint64_t> inv(p);
  for (std::uint64_t r = 1; r < p; ++r) inv[r] = inverse_mod_p(r, p);
  Integer sum = 0;
  for (Integer n = 1; n < bound; ++n) {
    Integer a = n;
    while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
      mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
    sum += static_cast<unsigned long>(inv[mpz_fdiv_ui(a.get_mpz_t(), p)]);
  }
  return 2 * sum == static_cast<unsigned long>(p) * (bound - 1);
}

ExtNat digit_gap(const Integer& coefficient, std::uint64_t p) {
  if (coefficient == 0) throw std::domain_error("digit_gap: zero coefficient");
  const std::uint64_t v = (p == 2) ? nu_p(coefficient, 2).value() : nu_p(coefficient, p).value();
  Integer unit = coefficient / integer_pow(p, v);
  if (p == 2) {
    unit -= 1;
    return unit == 0 ? ExtNat::infinity() : nu_p(unit, 2);
  }
  Integer r;
  mpz_mod_ui(r.get_mpz_t(), unit.get_mpz_t(), static_cast<unsigned long>(p));
  unit -= r;
  return unit == 0 ? ExtNat::infinity() : nu_p(unit, p);
}

GapStatistics gap_statistics(long m, std::size_t X, std::uint64_t p) {
  if (m < 1) throw std::invalid_argument("gap_statistics: m must be >= 1");
  if (p != 2 && (p < 3 || !is_prime(p)))
    throw std::invalid_argument("gap_statistics: p must be 2 or a prime >= 3");
  SequencePrefix c = s_km_by_recurrence(p == 2 ? 2 : p, m, X);
  GapStatistics g;
  g.gaps.resize(X + 1);
  g.max_gap = ExtNat(0);
  std::vector<ExtNat> seen;
  for (std::size_t n = 1; n <= X; ++n) {
    ExtNat u = digit_gap(c.values[n], p);
    g.gaps[n] = u;
    if (u > g.max_gap) g.max_gap = u;
    bool is_new = true;
    for (ExtNat s : seen)
      if (s == u) {
        is_new = false;
        break;
      }
    if (is_new) seen.push_back(u);
  }
  g.distinct_count = seen.size();
  return g;
}

}  // namespace partlab
