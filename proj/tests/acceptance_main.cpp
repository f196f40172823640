/* Acceptance suite: one line per criterion, PASS/FAIL with runtime.
 * Exit code is the number of failed criteria. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "partlab/automata.hpp"
#include "partlab/congruence.hpp"
#include "partlab/report.hpp"
#include "partlab/sequences.hpp"
#include "partlab/valuation.hpp"

using namespace partlab;

namespace {

unsigned jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Criterion {
  int id;
  std::string label;
  std::function<bool(std::string&)> run;
};

bool report_ok(const CheckReport& r, std::string& detail) {
  detail = summary_line(r);
  return r.passed();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "oracle equivalence k<=5 m<=3 n<=200", [](std::string& d) {
                        return report_ok(check_oracle_equivalence(5, 3, 200), d);
                      }});

  criteria.push_back({2, "nu_2(c_m(n)) closed form, m in -20..20, n<=5000", [](std::string& d) {
                        return report_ok(check_mainthm(-20, 20, 5000, jobs()), d);
                      }});

  criteria.push_back(
      {3, "d_m(n) valuation and residue, p in {3,5,7}, |m|<=12, n<=3000", [](std::string& d) {
         const std::uint64_t ps[] = {3, 5, 7};
         return report_ok(check_parycor2(ps, 12, 3000, jobs()), d);
       }});

  criteria.push_back({4, "congruence search pair lists (k_exp 5 and 6)", [](std::string& d) {
                        const auto ps = std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29};
                        const auto got5 = speccong_search(ps, 2, 100, 5, 1000, jobs());
                        const std::vector<std::pair<std::uint64_t, long>> want5 = {
                            {3, 26}, {3, 27}, {3, 53}, {3, 54}, {3, 80}, {3, 81},
                            {5, 24}, {5, 25}, {5, 49}, {5, 50}, {5, 74}, {5, 75},
                            {5, 99}, {5, 100}, {7, 48}, {7, 49}, {7, 97}, {7, 98}};
                        const auto got6 = speccong_search(ps, 2, 100, 6, 1000, jobs());
                        const std::vector<std::pair<std::uint64_t, long>> want6 = {{3, 80},
                                                                                  {3, 81}};
                        d = "k_exp=5 found " + std::to_string(got5.size()) +
                            " pairs, k_exp=6 found " + std::to_string(got6.size());
                        return got5 == want5 && got6 == want6;
                      }});

  criteria.push_back({5, "digit-gap table rows at X=10^5 (15 published columns)",
                      [](std::string& d) {
                        const auto rows = gap_table(100000, 4, 100, jobs());
                        struct Want {
                          long m;
                          std::uint64_t M;
                          std::size_t L;
                        };
                        const std::vector<Want> want = {
                            {3, 2, 2},  {15, 4, 3}, {23, 3, 3}, {27, 2, 2}, {35, 2, 2},
                            {39, 3, 3}, {47, 4, 3}, {59, 2, 2}, {63, 6, 4}, {67, 2, 2},
                            {79, 4, 3}, {87, 3, 3}, {91, 2, 2}, {95, 5, 3}, {99, 2, 2}};
                        d = "rows found: " + std::to_string(rows.size());
                        if (rows.size() != want.size()) return false;
                        for (std::size_t i = 0; i < want.size(); ++i) {
                          if (rows[i].m != want[i].m || rows[i].max_gap != ExtNat(want[i].M) ||
                              rows[i].distinct != want[i].L)
                            return false;
                        }
                        return true;
                      }});

  criteria.push_back({6, "Churchhouse congruences, k<=3, odd t<=100, exact 2^5 witness",
                      [](std::string& d) {
                        CheckReport r = churchhouse_congruences(3, 99);
                        bool ok = report_ok(r, d);
                        SequencePrefix b = binary_partitions(32);
                        ok = ok && (b.values[16] - b.values[4] == 32) &&
                             nu_p(Integer(b.values[16] - b.values[4]), 2) == ExtNat(5);
                        return ok;
                      }});

  criteria.push_back({7, "binomial congruence with chi, p in {3,5,7,11}, m<=60",
                      [](std::string& d) {
                        const std::uint64_t ps[] = {3, 5, 7, 11};
                        CheckReport r = check_parylem4_grid(ps, 60);
                        bool ok = report_ok(r, d);
                        // explicit witness: 5^3 divides C(10,5) - C(2,1) = 250
                        ok = ok && (binomial(10, 5) - binomial(2, 1) == 250) &&
                             binom_congruence(5, 2, 1).pass;
                        const std::uint64_t wp[] = {5, 7, 11, 13};
                        ok = ok && check_wolstenholme(wp).passed();
                        return ok;
                      }});

  criteria.push_back({8, "vartheta identity and closed form, p in {3,5,7}, m<=10, n<=300",
                      [](std::string& d) {
                        for (std::uint64_t p : {3ull, 5ull, 7ull}) {
                          for (long m = 1; m <= 10; ++m) {
                            CheckReport r = check_modp_lemma(p, m, 300);
                            if (!r.passed()) {
                              report_ok(r, d);
                              return false;
                            }
                          }
                        }
                        d = "all 30 (p, m) grids clean";
                        return true;
                      }});

  criteria.push_back({9, "DFAO agreement to 10^5 plus kernel saturation", [](std::string& d) {
                        CheckReport a = check_dfao_agreement(100000);
                        CheckReport k = check_kernel_saturation(20000);
                        d = summary_line(a) + " ; " + summary_line(k);
                        return a.passed() && k.passed();
                      }});

  criteria.push_back({10, "functional equations to order 2000 and y-sum formulas",
                      [](std::string& d) {
                        for (std::uint64_t p : {3ull, 5ull, 7ull}) {
                          CheckReport r = verify_functional_equations(p, 2000);
                          if (!r.passed()) {
                            report_ok(r, d);
                            return false;
                          }
                        }
                        const std::pair<std::uint64_t, unsigned> grid[] = {{3, 6}, {5, 4}, {7, 3}};
                        CheckReport y = check_y_sum(grid);
                        d = "equations pass for p in {3,5,7}; " + summary_line(y);
                        return y.passed();
                      }});

  criteria.push_back({11, "conjecture suites report zero counterexamples", [](std::string& d) {
                        ConjectureGrid g1;
                        g1.N = 500;
                        g1.k_max = 5;
                        CheckReport c1 = conjecture_checks(ConjectureSelector::conj1, g1);
                        ConjectureGrid g2;
                        g2.N = 300;
                        g2.p_set = {3, 5};
                        g2.m_max = 12;
                        CheckReport c2 = conjecture_checks(ConjectureSelector::conj2, g2);
                        ConjectureGrid g4;
                        g4.N = 2000;
                        g4.s_max = 4;
                        g4.shift_m_max = 2;
                        bool ok = c1.passed() && c2.passed();
                        for (ConjectureSelector sel :
                             {ConjectureSelector::phi4_a, ConjectureSelector::phi4_b,
                              ConjectureSelector::phi4_pow2, ConjectureSelector::phi4_shift}) {
                          CheckReport r = conjecture_checks(sel, g4);
                          ok = ok && r.passed() && r.conjecture;
                        }
                        d = "conj1, conj2, phi4-a/b/pow2/shift flagged CONJECTURE";
                        return ok && c1.conjecture && c2.conjecture;
                      }});

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d/11] %s %s (%.1fs) %s\n", c.id, ok ? "PASS" : "FAIL", c.label.c_str(), dt,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures;
}
