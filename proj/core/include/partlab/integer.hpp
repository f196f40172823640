#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "partlab/extnat.hpp"

namespace partlab {

/* Exact arbitrary-precision signed integer. Every coefficient and witness
 * in this library is an Integer; nothing is ever rounded or reduced unless
 * an operation says so explicitly. */
using Integer = mpz_class;

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

bool is_prime(std::uint64_t n);

/* Largest e with p^e | x, for prime p; nu_p(0) = +infinity. Sign of x is
 * ignored. Throws std::invalid_argument if p is not prime. */
ExtNat nu_p(const Integer& x, std::uint64_t p);

/* Largest e with k^e | x for an arbitrary base k >= 2 (k may be composite,
 * in which case phi_k is famously not additive); phi_k(0) = +infinity. */
ExtNat phi_k(const Integer& x, std::uint64_t k);

/* Exact binomial coefficient C(n, k); zero for k > n. */
Integer binomial(std::uint64_t n, std::uint64_t k);

/* Inverse of a mod prime p, for a not divisible by p. */
std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p);

/* p^e as an Integer. */
Integer integer_pow(std::uint64_t base, std::uint64_t exp);

/* Floor of log_k(n) for n >= 1, k >= 2. */
unsigned floor_log(std::uint64_t n, std::uint64_t k);

}  // namespace partlab
