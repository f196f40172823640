#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace partlab {

/* The extended naturals N ∪ {+infinity}: codomain of the valuation
 * functions nu_p and phi_k. Infinity compares greater than every
 * finite value. */
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by design

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.value_ = kInf;
    return e;
  }

  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr bool is_infinite() const { return value_ == kInf; }

  constexpr std::uint64_t value() const {
    if (!is_finite()) throw std::domain_error("ExtNat: value() of +infinity");
    return value_;
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) = default;
  friend constexpr auto operator<=>(ExtNat a, ExtNat b) {
    return a.value_ <=> b.value_;  // kInf is the largest representable
  }

  std::string str() const { return is_finite() ? std::to_string(value_) : "inf"; }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

}  // namespace partlab
