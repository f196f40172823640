#include "partlab/digits.hpp"

#include <stdexcept>

namespace partlab {

Integer DigitExpansion::reconstruct() const {
  Integer n = 0;
  Integer pw = 1;
  for (std::uint32_t d : digits) {
    n += d * pw;
    pw *= static_cast<unsigned long>(base);
  }
  return n;
}

DigitExpansion digits(const Integer& n, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("digits: base must be >= 2");
  if (n == 0) throw std::domain_error("digits: n = 0 has no lowest nonzero digit");
  if (n < 0) throw std::domain_error("digits: n must be positive");

  DigitExpansion e;
  e.base = base;
  Integer a = n;
  Integer b(static_cast<unsigned long>(base));
  Integer q, r;
  while (a != 0) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    e.digits.push_back(static_cast<std::uint32_t>(r.get_ui()));
    a.swap(q);
  }
  e.s = 0;
  while (e.digits[e.s] == 0) ++e.s;
  e.n_s = e.digits[e.s];
  return e;
}

DigitExpansion digits(std::uint64_t n, std::uint64_t base) {
  return digits(Integer(static_cast<unsigned long>(n)), base);
}

}  // namespace partlab
