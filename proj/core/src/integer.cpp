#include "partlab/integer.hpp"

#include <stdexcept>

namespace partlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;  // exact for this range
}

namespace {

ExtNat valuation_impl(const Integer& x, std::uint64_t base) {
  if (x == 0) return ExtNat::infinity();
  Integer stripped;
  Integer b(static_cast<unsigned long>(base));
  const mp_bitcnt_t v = mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), b.get_mpz_t());
  return ExtNat(static_cast<std::uint64_t>(v));
}

}  // namespace

ExtNat nu_p(const Integer& x, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
  return valuation_impl(x, p);
}

ExtNat phi_k(const Integer& x, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("phi_k: k must be >= 2");
  return valuation_impl(x, k);
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse_mod_p: a divisible by p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Integer integer_pow(std::uint64_t base, std::uint64_t exp) {
  Integer r;
  Integer b(static_cast<unsigned long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

unsigned floor_log(std::uint64_t n, std::uint64_t k) {
  unsigned e = 0;
  std::uint64_t pw = 1;
  while (pw <= n / k) {
    pw *= k;
    ++e;
  }
  return e;
}

}  // namespace partlab
