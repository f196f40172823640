#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace partlab {

/* Outcome of one verification run over a parameter grid. A report with no
 * counterexamples asserts that every point of the declared grid was
 * checked (no silent skips). Witness values are carried as decimal
 * strings because they routinely exceed machine words. */
struct Counterexample {
  std::string params;                                       // e.g. "p=3 m=8 n=17"
  std::vector<std::pair<std::string, std::string>> values;  // (label, decimal)
};

struct CheckReport {
  std::string name;
  std::string grid;
  bool conjecture = false;  // CONJECTURE banner: never claims proof
  std::uint64_t points_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;  // informational, e.g. unattained witnesses
  std::vector<std::pair<std::string, std::string>> metadata;  // stable order
  double runtime_seconds = 0.0;

  bool passed() const { return counterexamples.empty(); }
  void add_metadata(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
  }
};

/* Serializers with stable field order. Runtime is excluded by default so
 * that identical configurations produce byte-identical artifacts; pass
 * include_runtime = true for diagnostic copies. */
std::string to_csv(const CheckReport& r, bool include_runtime = false);
std::string to_json(const CheckReport& r, bool include_runtime = false);

/* One-line human summary: "PASS name (points=..)" / "FAIL name ...". */
std::string summary_line(const CheckReport& r);

}  // namespace partlab
