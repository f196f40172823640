#include <doctest.h>

#include <stdexcept>

#include "partlab/sequences.hpp"
#include "partlab/valuation.hpp"

using namespace partlab;

TEST_CASE("nu2 closed form: the three branches") {
  SequencePrefix t = ptm(100);
  // m = 2: constant valuation 2 (c_{+-2}(n) = 4 mod 8)
  for (std::size_t n = 1; n <= 100; ++n) {
    CHECK(nu2_c_closed_form(2, n, t.values) == ExtNat(2));
    CHECK(nu2_c_closed_form(-2, n, t.values) == ExtNat(2));
  }
  // m = 3: 1 at n = 1 (t_1 != t_0), nu_2(4)+1 = 3 at n = 2 (t_2 = t_1)
  CHECK(nu2_c_closed_form(3, 1, t.values) == ExtNat(1));
  CHECK(nu2_c_closed_form(3, 2, t.values) == ExtNat(3));
  CHECK_THROWS_AS(nu2_c_closed_form(0, 1, t.values), std::domain_error);
  CHECK_THROWS_AS(nu2_c_closed_form(-1, 1, t.values), std::domain_error);
}

TEST_CASE("nu2 closed form against coefficients (small sweep)") {
  SequencePrefix t = ptm(300);
  for (long m : {-6L, -3L, -2L, 1L, 3L, 4L, 12L}) {
    SequencePrefix c = s_km(2, m, 300);
    for (std::size_t n = 1; n <= 300; ++n)
      CHECK(nu2_c_closed_form(m, n, t.values) == nu_p(c.values[n], 2));
  }
}

TEST_CASE("period-doubling form equals the closed form for odd m") {
  SequencePrefix t = ptm(5000);
  for (long m : {-19L, -3L, 1L, 3L, 7L, 15L}) {
    for (std::size_t n = 1; n <= 5000; ++n)
      CHECK(nu2_c_via_period_doubling(m, n) == nu2_c_closed_form(m, n, t.values));
  }
  // anchor values
  CHECK(nu2_c_via_period_doubling(1, 1) == ExtNat(1));
  CHECK(nu2_c_via_period_doubling(3, 2) == ExtNat(3));
  CHECK(nu2_c_via_period_doubling(7, 6) == ExtNat(4));
  CHECK_THROWS_AS(nu2_c_via_period_doubling(2, 1), std::domain_error);
}

TEST_CASE("m = -1 exclusion: infinite valuation exactly when t_n = t_{n-1}") {
  SequencePrefix t = ptm(600);
  SequencePrefix c = s_km(2, -1, 600);
  for (std::size_t n = 1; n <= 600; ++n) {
    if (t.values[n] == t.values[n - 1]) {
      CHECK(c.values[n] == 0);
      CHECK(nu_p(c.values[n], 2) == ExtNat::infinity());
    } else {
      CHECK(nu_p(c.values[n], 2) == ExtNat(1));
    }
  }
}

TEST_CASE("nu_p residue form for d_m") {
  // n = 0
  ResidueForm r0 = nu_p_d_closed_form(3, 1, 0);
  CHECK(r0.valuation == ExtNat(0));
  CHECK(r0.residue == 1);
  // p=3, m=1, n=1: d_1(1) = 3
  ResidueForm r1 = nu_p_d_closed_form(3, 1, 1);
  CHECK(r1.valuation == ExtNat(1));
  CHECK(r1.residue == 3);
  CHECK(r1.modulus == 9);
  // p=5, m=1, n=10: digits [0,2], inverse of 2 is 3, residue 15 mod 25
  ResidueForm r2 = nu_p_d_closed_form(5, 1, 10);
  CHECK(r2.valuation == ExtNat(1));
  CHECK(r2.residue == 15);
  CHECK(r2.modulus == 25);
  CHECK_THROWS_AS(nu_p_d_closed_form(3, 0, 1), std::domain_error);
  CHECK_THROWS_AS(nu_p_d_closed_form(4, 1, 1), std::invalid_argument);
}

TEST_CASE("residue form against coefficients (small sweep)") {
  for (std::uint64_t p : {3ull, 5ull}) {
    for (long m : {-4L, -1L, 1L, 2L, 5L}) {
      SequencePrefix d = s_km(p, m, 250);
      for (std::size_t n = 1; n <= 250; ++n) {
        ResidueForm rf = nu_p_d_closed_form(p, m, n);
        CHECK(nu_p(d.values[n], p) == rf.valuation);
        Integer got;
        mpz_mod(got.get_mpz_t(), d.values[n].get_mpz_t(), rf.modulus.get_mpz_t());
        CHECK(got == rf.residue);
      }
    }
  }
}

TEST_CASE("ValuationProfile dispatches on p") {
  ValuationProfile v2(2, 3, 100);
  CHECK(v2.closed_form(2) == ExtNat(3));
  CHECK_THROWS_AS(v2.residue_form(2), std::domain_error);
  ValuationProfile v3(3, 2, 100);
  CHECK(v3.closed_form(7) == ExtNat(1));
  CHECK(v3.closed_form(0) == ExtNat(0));
  CHECK(v3.residue_form(1).residue == 6);  // pm = 6 mod 9
}

TEST_CASE("y and z sequences") {
  YZSequences yz3 = y_z_sequences(3, 2000);
  CHECK(yz3.y.values[1] == 1);
  CHECK(yz3.y.values[2] == 2);
  YZSequences yz5 = y_z_sequences(5, 2000);
  CHECK(yz5.y.values[10] == 3);
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    YZSequences yz = y_z_sequences(p, 2000);
    for (std::size_t n = 1; n <= 2000; ++n) {
      // y from the digit definition
      DigitExpansion e = digits(static_cast<std::uint64_t>(n), p);
      CHECK(yz.y.values[n] == static_cast<unsigned long>(inverse_mod_p(e.n_s, p)));
      CHECK(yz.y.values[n] + yz.z.values[n] == static_cast<unsigned long>(p));
      CHECK(yz.y.values[n] >= 1);
      CHECK(yz.y.values[n] <= static_cast<unsigned long>(p - 1));
    }
  }
}

TEST_CASE("y sums") {
  CHECK(y_sum_check(3, 1));  // 1 + 2 = 3
  CHECK(y_sum_check(5, 2));  // sums to 60
  CHECK(y_sum_check(3, 6));
  CHECK(y_sum_check(7, 3));
}

TEST_CASE("digit gaps") {
  // u_3(1): c_3(1) = 6, odd part 3, 3 - 1 = 2 -> gap 1
  CHECK(digit_gap(Integer(6), 2) == ExtNat(1));
  // power of two: odd part 1, gap infinite
  CHECK(digit_gap(Integer(8), 2) == ExtNat::infinity());
  // p = 3: 15 = 3 * 5, unit 5 = 12_3, subtract 2 -> 3 -> gap 1
  CHECK(digit_gap(Integer(15), 3) == ExtNat(1));
  CHECK_THROWS_AS(digit_gap(Integer(0), 2), std::domain_error);
}

TEST_CASE("gap statistics for m = 3 (frozen prefix and published point)") {
  GapStatistics g = gap_statistics(3, 1000, 2);
  // u_3(1..10) computed independently from c_3 = 6, 24, 74, 198, 474, ...
  const std::uint64_t expected[] = {1, 1, 2, 1, 2, 1, 1, 1, 2, 2};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(g.gaps[n] == ExtNat(expected[n - 1]));
  CHECK(g.max_gap == ExtNat(2));
  CHECK(g.distinct_count == 2);
}

TEST_CASE("gap statistics for p >= 3 run and stay finite") {
  GapStatistics g = gap_statistics(2, 500, 3);
  CHECK(g.gaps.size() == 501);
  CHECK(g.distinct_count >= 1);
  for (std::size_t n = 1; n <= 500; ++n) CHECK(g.gaps[n] >= ExtNat(1));
}
