/* partlab — compute colored k-ary partition sequences, evaluate p-adic
 * valuations, verify congruences, search for new ones, and export the
 * digit automata.
 *
 * Subcommands: compute, verify, search, table1, automaton, sum-check.
 * Exit codes: 0 success/verified, 1 counterexample found, 2 usage error.
 * Data goes to stdout (or --out); progress and timing go to stderr.
 * Output is buffered and written only on success, never partially, and a
 * given configuration always produces byte-identical output. */

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "partlab/automata.hpp"
#include "partlab/congruence.hpp"
#include "partlab/digits.hpp"
#include "partlab/report.hpp"
#include "partlab/sequences.hpp"
#include "partlab/valuation.hpp"

#include <json.hpp>

namespace {

using namespace partlab;

struct RunConfig {
  std::string command;
  std::string seq;
  std::string check;
  std::string family;
  std::uint64_t k = 2;
  std::uint64_t p = 0;
  long m = 0;
  unsigned s = 0;
  std::size_t N = 100;
  std::size_t X = 100000;
  unsigned k_exp = 5;
  std::size_t threshold = 4;
  std::string dir = "lsb";
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  std::string m_range;
  std::string p_set;

  std::vector<std::pair<std::string, std::string>> header() const {
    std::vector<std::pair<std::string, std::string>> h;
    h.emplace_back("command", command);
    if (!seq.empty()) h.emplace_back("seq", seq);
    if (!check.empty()) h.emplace_back("check", check);
    if (!family.empty()) h.emplace_back("family", family);
    h.emplace_back("k", std::to_string(k));
    if (p) h.emplace_back("p", std::to_string(p));
    h.emplace_back("m", std::to_string(m));
    if (s) h.emplace_back("s", std::to_string(s));
    h.emplace_back("N", std::to_string(N));
    if (command == "table1") {
      h.emplace_back("X", std::to_string(X));
      h.emplace_back("threshold", std::to_string(threshold));
    }
    if (command == "search" || check == "speccong")
      h.emplace_back("k_exp", std::to_string(k_exp));
    if (!m_range.empty()) h.emplace_back("m_range", m_range);
    if (!p_set.empty()) h.emplace_back("p_set", p_set);
    h.emplace_back("dir", dir);
    h.emplace_back("format", format);
    h.emplace_back("jobs", std::to_string(jobs));
    return h;
  }
};

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  f << payload;
}

std::string header_text(const RunConfig& cfg, const std::string& comment) {
  std::ostringstream os;
  for (const auto& [k, v] : cfg.header()) os << comment << " " << k << "=" << v << "\n";
  return os.str();
}

nlohmann::ordered_json header_json(const RunConfig& cfg) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : cfg.header()) j[k] = v;
  return j;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("range", "expected LO..HI, got '" + text + "'");
  return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

std::vector<std::uint64_t> parse_prime_set(const std::string& text) {
  // "3..29" (all primes in range) or "3,5,7"
  std::vector<std::uint64_t> ps;
  if (text.find("..") != std::string::npos) {
    auto [lo, hi] = parse_range(text);
    for (long v = lo; v <= hi; ++v)
      if (is_prime(static_cast<std::uint64_t>(v)) && v >= 3)
        ps.push_back(static_cast<std::uint64_t>(v));
  } else {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) ps.push_back(std::stoull(tok));
  }
  if (ps.empty()) throw CLI::ValidationError("p-set", "no primes in '" + text + "'");
  return ps;
}

/* Sequence table: name -> (values, valuation base for the nu column). */
struct ComputedSequence {
  std::vector<Integer> values;
  std::uint64_t nu_base = 2;
  bool nu_is_phi = false;  // composite base: report phi_k instead of nu_p
};

ComputedSequence compute_sequence(const RunConfig& cfg) {
  const std::string& s = cfg.seq;
  auto need_p = [&]() -> std::uint64_t {
    if (!cfg.p) throw CLI::ValidationError("--p", "sequence '" + s + "' needs a prime --p");
    return cfg.p;
  };
  auto need_m = [&]() -> long {
    if (cfg.m == 0)
      throw CLI::ValidationError("--m", "sequence '" + s + "' needs a nonzero --m");
    return cfg.m;
  };
  if (s == "b") return {binary_partitions(cfg.N).values, 2, false};
  if (s == "t") return {ptm(cfg.N).values, 2, false};
  if (s == "c") return {s_km(2, need_m(), cfg.N).values, 2, false};
  if (s == "d") return {s_km(need_p(), need_m(), cfg.N).values, cfg.p, false};
  if (s == "s") {
    const bool composite = !is_prime(cfg.k);
    return {s_km(cfg.k, need_m(), cfg.N).values, cfg.k, composite};
  }
  if (s == "a") return {a_pm(need_p(), need_m(), cfg.N).values, cfg.p, false};
  if (s == "u") return {u_m_partial_sums(need_m(), cfg.N).values, 2, false};
  if (s == "tm") return {t_m_convolution(need_m(), cfg.N).values, 2, false};
  if (s == "Dp" || s == "dp") return {d_p_cap(need_p(), cfg.N).values, cfg.p, false};
  if (s == "dminus1") return {d_minus1(need_p(), cfg.N).values, cfg.p, false};
  if (s == "theta") return {vartheta(need_p(), need_m(), cfg.N).values, cfg.p, false};
  if (s == "y" || s == "z") {
    YZSequences yz = y_z_sequences(need_p(), cfg.N);
    return {(s == "y" ? yz.y : yz.z).values, cfg.p, false};
  }
  throw CLI::ValidationError(
      "--seq", "unknown sequence '" + s +
                   "'; available: b t c d s a u tm Dp dminus1 theta y z");
}

int cmd_compute(const RunConfig& cfg) {
  ComputedSequence seq = compute_sequence(cfg);
  const std::string nu_col =
      seq.nu_is_phi ? "phi_" + std::to_string(seq.nu_base) : "nu_" + std::to_string(seq.nu_base);
  auto valuation = [&](const Integer& v) {
    return seq.nu_is_phi ? phi_k(v, seq.nu_base) : nu_p(v, seq.nu_base);
  };
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["config"] = header_json(cfg);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < seq.values.size(); ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["value"] = to_decimal(seq.values[n]);
      row[nu_col] = valuation(seq.values[n]).str();
      rows.push_back(row);
    }
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    const char* comment = "#";
    os << header_text(cfg, comment);
    const char sep = (cfg.format == "csv") ? ',' : '\t';
    os << "n" << sep << "value" << sep << nu_col << "\n";
    for (std::size_t n = 0; n < seq.values.size(); ++n)
      os << n << sep << to_decimal(seq.values[n]) << sep << valuation(seq.values[n]).str()
         << "\n";
  }
  emit(cfg, os.str());
  return 0;
}

CheckReport run_named_check(const RunConfig& cfg) {
  const std::string& c = cfg.check;
  long m_lo = cfg.m, m_hi = cfg.m;
  if (!cfg.m_range.empty()) std::tie(m_lo, m_hi) = parse_range(cfg.m_range);
  std::vector<std::uint64_t> ps =
      cfg.p_set.empty() ? std::vector<std::uint64_t>{cfg.p ? cfg.p : 3}
                        : parse_prime_set(cfg.p_set);

  if (c == "mainthm") {
    if (cfg.m_range.empty()) {
      m_lo = -20;
      m_hi = 20;
    }
    return check_mainthm(m_lo, m_hi, cfg.N, cfg.jobs);
  }
  if (c == "parycor2") {
    if (cfg.p_set.empty()) ps = {3, 5, 7};
    return check_parycor2(ps, cfg.m_range.empty() ? 12 : std::max(std::abs(m_lo), std::abs(m_hi)),
                          cfg.N, cfg.jobs);
  }
  if (c == "parylem1") return check_parylem1(cfg.p ? cfg.p : 3, cfg.m ? cfg.m : 1, cfg.N);
  if (c == "parylem2") return check_parylem2(cfg.p ? cfg.p : 3, cfg.m ? cfg.m : 1, cfg.N);
  if (c == "parylem3") return check_parylem3(cfg.p ? cfg.p : 3, cfg.s, cfg.N);
  if (c == "parylem4") {
    const std::uint64_t primes[] = {3, 5, 7, 11};
    return check_parylem4_grid(primes, cfg.m ? static_cast<std::uint64_t>(cfg.m) : 60);
  }
  if (c == "wolstenholme") {
    const std::uint64_t primes[] = {5, 7, 11, 13};
    return check_wolstenholme(primes);
  }
  if (c == "modp") return check_modp_lemma(cfg.p ? cfg.p : 3, cfg.m ? cfg.m : 1, cfg.N);
  if (c == "parythm3") return check_parythm3(cfg.p ? cfg.p : 3, cfg.m ? cfg.m : 1, cfg.N);
  if (c == "churchhouse") return churchhouse_congruences(cfg.k_exp == 5 ? 3 : cfg.k_exp, 99);
  if (c == "cor0") return check_cor0(cfg.m ? cfg.m : 1, cfg.N);
  if (c == "a-pm-theorem") return check_a_pm_theorem(cfg.p ? cfg.p : 3, cfg.s ? cfg.s : 1, cfg.N);
  if (c == "oracle") return check_oracle_equivalence(5, 3, std::min<std::size_t>(cfg.N, 200));
  if (c == "dfao-agree") return check_dfao_agreement(cfg.N);
  if (c == "kernel") return check_kernel_saturation(std::max<std::size_t>(cfg.N, 11000));
  if (c == "ysum") {
    const std::pair<std::uint64_t, unsigned> grid[] = {{3, 6}, {5, 4}, {7, 3}};
    return check_y_sum(grid);
  }
  if (c == "funceq") {
    CheckReport total;
    total.name = "funceq";
    total.grid = "p in {3,5,7} order=" + std::to_string(cfg.N);
    for (std::uint64_t p : (cfg.p ? std::vector<std::uint64_t>{cfg.p}
                                  : std::vector<std::uint64_t>{3, 5, 7})) {
      CheckReport r = verify_functional_equations(p, cfg.N);
      total.points_checked += r.points_checked;
      for (auto& ce : r.counterexamples) total.counterexamples.push_back(std::move(ce));
    }
    return total;
  }
  if (c == "speccong") {
    if (cfg.p_set.empty()) ps = parse_prime_set("3..29");
    if (cfg.m_range.empty()) {
      m_lo = 2;
      m_hi = 100;
    }
    return speccong_report(ps, m_lo, m_hi, cfg.k_exp, cfg.N, cfg.jobs);
  }
  if (c == "conj1" || c == "conj2" || c == "phi4-a" || c == "phi4-b" || c == "phi4-pow2" ||
      c == "phi4-shift") {
    ConjectureGrid grid;
    grid.N = cfg.N;
    if (cfg.s) grid.s_max = cfg.s;
    if (!cfg.p_set.empty()) grid.p_set = ps;
    if (cfg.m) grid.m_max = cfg.m;
    return conjecture_checks(conjecture_selector_from_name(c), grid);
  }
  throw CLI::ValidationError(
      "check", "unknown check '" + c +
                   "'; available: mainthm parycor2 parylem1 parylem2 parylem3 parylem4 "
                   "wolstenholme modp parythm3 churchhouse cor0 a-pm-theorem oracle "
                   "dfao-agree kernel ysum funceq speccong conj1 conj2 phi4-a phi4-b "
                   "phi4-pow2 phi4-shift");
}

int emit_report(const RunConfig& cfg, const CheckReport& r) {
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["config"] = header_json(cfg);
    j["report"] = nlohmann::ordered_json::parse(to_json(r));
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << header_text(cfg, "#") << to_csv(r);
  } else {
    os << header_text(cfg, "#");
    if (r.conjecture) os << "CONJECTURE check: a finite search, not a proof\n";
    os << summary_line(r) << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    for (const auto& ce : r.counterexamples) {
      os << "counterexample: " << ce.params;
      for (const auto& [label, value] : ce.values) os << " " << label << "=" << value;
      os << "\n";
    }
  }
  emit(cfg, os.str());
  std::cerr << "runtime: " << r.runtime_seconds << "s\n";
  return r.passed() ? 0 : 1;
}

int cmd_table1(const RunConfig& cfg) {
  auto rows = gap_table(cfg.X, cfg.threshold, 100, cfg.jobs);
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["config"] = header_json(cfg);
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json o;
      o["m"] = row.m;
      o["M"] = row.max_gap.str();
      o["L"] = row.distinct;
      out.push_back(o);
    }
    j["rows"] = out;
    os << j.dump(2) << "\n";
  } else {
    os << header_text(cfg, "#");
    const char sep = (cfg.format == "csv") ? ',' : '\t';
    os << "m" << sep << "M" << sep << "L\n";
    for (const auto& row : rows)
      os << row.m << sep << row.max_gap.str() << sep << row.distinct << "\n";
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_automaton(const RunConfig& cfg) {
  const ReadDirection dir =
      (cfg.dir == "msb") ? ReadDirection::msb_first : ReadDirection::lsb_first;
  Dfao a;
  if (cfg.family == "nu2c") {
    if (cfg.m % 2 == 0) throw CLI::ValidationError("--m", "m must be odd for nu2c");
    a = build_nu2_automaton(cfg.m, dir);
  } else if (cfg.family == "yp") {
    a = build_yp_automaton(cfg.p ? cfg.p : 3, dir);
  } else {
    throw CLI::ValidationError("family", "unknown automaton family '" + cfg.family +
                                             "'; available: nu2c yp");
  }
  std::ostringstream os;
  os << header_text(cfg, "//") << export_dot(a);
  emit(cfg, os.str());
  return 0;
}

int cmd_sum_check(const RunConfig& cfg) {
  const std::uint64_t p = cfg.p ? cfg.p : 3;
  const unsigned e = static_cast<unsigned>(cfg.N);
  const bool ok = y_sum_check(p, e);
  std::ostringstream os;
  os << header_text(cfg, "#") << "sum_{k<" << p << "^" << e << "} y_" << p << "(k) == " << p
     << "*(" << p << "^" << e << "-1)/2: " << (ok ? "PASS" : "FAIL") << "\n";
  emit(cfg, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored k-ary partition laboratory"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "base k >= 2");
    sub->add_option("--p", cfg.p, "prime p");
    sub->add_option("--m", cfg.m, "color multiplier m");
    sub->add_option("--s", cfg.s, "exponent parameter s / alpha");
    sub->add_option("--N", cfg.N, "index bound N");
    sub->add_option("--X", cfg.X, "sweep bound X");
    sub->add_option("--k-exp", cfg.k_exp, "congruence exponent k");
    sub->add_option("--m-range", cfg.m_range, "m range LO..HI");
    sub->add_option("--p-set", cfg.p_set, "prime set, e.g. 3..29 or 3,5,7");
    sub->add_option("--dir", cfg.dir, "digit direction")->check(CLI::IsMember({"lsb", "msb"}));
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "dot", "text"}));
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--threshold", cfg.threshold, "table row threshold on L");
  };

  CLI::App* compute = app.add_subcommand("compute", "emit a sequence prefix with valuations");
  compute->add_option("--seq", cfg.seq, "sequence name")->required();
  add_common(compute);

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("check", cfg.check, "check name")->required();
  add_common(verify);

  CLI::App* search = app.add_subcommand("search", "search (p, m) pairs for the d_m(pn) = d_m(n) congruence");
  add_common(search);

  CLI::App* table1 = app.add_subcommand("table1", "digit-gap table rows with L <= threshold");
  add_common(table1);

  CLI::App* automaton = app.add_subcommand("automaton", "export a digit automaton as DOT");
  automaton->add_option("family", cfg.family, "automaton family: nu2c or yp")->required();
  add_common(automaton);

  CLI::App* sumcheck = app.add_subcommand("sum-check", "verify the y_p power-block sum formula");
  add_common(sumcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      cfg.command = "compute";
      return cmd_compute(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      // `verify speccong --k 5` reads --k as the congruence exponent: the
      // search has no base parameter, so the shorthand is unambiguous.
      if (cfg.check == "speccong" && verify->count("--k") != 0 &&
          verify->count("--k-exp") == 0)
        cfg.k_exp = static_cast<unsigned>(cfg.k);
      return emit_report(cfg, run_named_check(cfg));
    }
    if (search->parsed()) {
      cfg.command = "search";
      cfg.check = "speccong";
      if (search->count("--k") != 0 && search->count("--k-exp") == 0)
        cfg.k_exp = static_cast<unsigned>(cfg.k);
      return emit_report(cfg, run_named_check(cfg));
    }
    if (table1->parsed()) {
      cfg.command = "table1";
      return cmd_table1(cfg);
    }
    if (automaton->parsed()) {
      cfg.command = "automaton";
      cfg.format = "dot";
      return cmd_automaton(cfg);
    }
    if (sumcheck->parsed()) {
      cfg.command = "sum-check";
      return cmd_sum_check(cfg);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
