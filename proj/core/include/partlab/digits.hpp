#pragma once

#include <cstdint>
#include <vector>

#include "partlab/integer.hpp"

namespace partlab {

/* Canonical base-p expansion of n >= 1, lowest power first, with the index
 * s and value n_s of the lowest nonzero digit. digits.back() != 0. */
struct DigitExpansion {
  std::uint64_t base = 0;
  std::vector<std::uint32_t> digits;  // digits[i] is the coefficient of base^i
  std::size_t s = 0;                  // index of the lowest nonzero digit
  std::uint32_t n_s = 0;              // value of that digit

  Integer reconstruct() const;
};

/* Throws std::domain_error for n = 0 (no lowest nonzero digit exists) and
 * std::invalid_argument for base < 2. */
DigitExpansion digits(const Integer& n, std::uint64_t base);
DigitExpansion digits(std::uint64_t n, std::uint64_t base);

}  // namespace partlab
