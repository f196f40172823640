#include "partlab/automata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "partlab/series.hpp"
#include "partlab/valuation.hpp"

namespace partlab {

namespace {

std::vector<std::uint32_t> digit_string(std::uint64_t n, std::uint64_t k, ReadDirection dir) {
  std::vector<std::uint32_t> ds;  // canonical, no leading zeros
  while (n > 0) {
    ds.push_back(static_cast<std::uint32_t>(n % k));
    n /= k;
  }
  if (dir == ReadDirection::msb_first) std::reverse(ds.begin(), ds.end());
  return ds;
}

}  // namespace

long dfao_eval(const Dfao& a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("dfao_eval: n must be >= 1 (empty digit string)");
  std::uint32_t state = a.initial;
  for (std::uint32_t d : digit_string(n, a.alphabet_size, a.direction))
    state = a.transitions[state][d];
  const auto& out = a.outputs[state];
  if (!out.has_value()) throw std::logic_error("dfao_eval: final state carries no output");
  return *out;
}

Dfao build_nu2_automaton(long m, ReadDirection dir) {
  if (m % 2 == 0)
    throw std::domain_error(
        "build_nu2_automaton: m even has a constant valuation; no automaton is built");
  if (m == -1) throw std::domain_error("build_nu2_automaton: m = -1 excluded (infinite values)");
  const long big = static_cast<long>(nu_p(Integer(m) + 1, 2).value()) + 1;

  Dfao a;
  a.alphabet_size = 2;
  a.direction = dir;
  if (dir == ReadDirection::lsb_first) {
    // w(2n+1) = 1: a trailing 1 resolves immediately (absorbing "one").
    // w(4n) = w(n): two trailing zeros strip and restart ("shift" -> start).
    // w(4n+2) = big: a 0 then a 1 resolves to big (absorbing "big").
    a.outputs = {std::nullopt, 1, std::nullopt, big};
    a.transitions = {{2, 1}, {1, 1}, {0, 3}, {3, 3}};
    a.state_names = {"start", "one", "shift", "big"};
    a.initial = 0;
  } else {
    // Reading from the top digit, the machine only tracks the parity of
    // the current run of trailing zeros: w(n) = 1 iff nu_2(n) is even.
    a.outputs = {1, big};
    a.transitions = {{1, 0}, {0, 0}};
    a.state_names = {"one", "big"};
    a.initial = 0;
  }
  return a;
}

Dfao build_yp_automaton(std::uint64_t p, ReadDirection dir) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("build_yp_automaton: p must be a prime >= 3");
  const std::uint32_t k = static_cast<std::uint32_t>(p);

  Dfao a;
  a.alphabet_size = k;
  a.direction = dir;
  a.initial = 0;
  a.outputs.resize(p);
  a.transitions.assign(p, std::vector<std::uint32_t>(k));
  a.state_names.resize(p);
  a.state_names[0] = "start";
  a.outputs[0] = std::nullopt;
  for (std::uint32_t d = 1; d < k; ++d) {
    a.state_names[d] = "d" + std::to_string(d);
    a.outputs[d] = static_cast<long>(inverse_mod_p(d, p));
  }
  if (dir == ReadDirection::lsb_first) {
    // Skip zeros, lock onto the first nonzero digit n_s, then absorb.
    a.transitions[0][0] = 0;
    for (std::uint32_t d = 1; d < k; ++d) a.transitions[0][d] = d;
    for (std::uint32_t s = 1; s < k; ++s)
      for (std::uint32_t d = 0; d < k; ++d) a.transitions[s][d] = s;
  } else {
    // Remember the most recent nonzero digit; zeros keep the current state,
    // so the walk ends in the state of the lowest nonzero digit.
    for (std::uint32_t s = 0; s < k; ++s) {
      a.transitions[s][0] = s;
      for (std::uint32_t d = 1; d < k; ++d) a.transitions[s][d] = d;
    }
  }
  return a;
}

KernelProbe kernel_probe(std::span<const long> seq, std::uint64_t k, unsigned depth,
                         std::size_t min_overlap) {
  if (k < 2) throw std::invalid_argument("kernel_probe: k must be >= 2");
  if (depth < 1) throw std::invalid_argument("kernel_probe: depth must be >= 1");
  std::uint64_t kd = 1;
  for (unsigned i = 0; i < depth; ++i) {
    if (kd > seq.size() / k) throw std::invalid_argument("kernel_probe: prefix too short");
    kd *= k;
  }
  const std::size_t L = seq.size() / kd;  // common comparison window
  if (L < min_overlap)
    throw std::invalid_argument("kernel_probe: fewer than min_overlap comparable points");

  // All subsequences are compared on the same fixed window, so equality is
  // transitive and the class count is nondecreasing in depth.
  std::set<std::vector<long>> classes;
  std::size_t count_at_prev_depth = 0;
  std::uint64_t ki = 1;
  for (unsigned i = 0; i <= depth; ++i) {
    for (std::uint64_t j = 0; j < ki; ++j) {
      std::vector<long> v(L);
      for (std::size_t t = 0; t < L; ++t) v[t] = seq[ki * t + j];
      classes.insert(std::move(v));
    }
    if (i + 1 == depth) count_at_prev_depth = classes.size();
    if (i < depth) ki *= k;
  }
  KernelProbe probe;
  probe.k = k;
  probe.depth = depth;
  probe.compared_length = L;
  probe.distinct_count = classes.size();
  probe.saturated = (classes.size() == count_at_prev_depth);
  return probe;
}

CheckReport verify_functional_equations_on(std::uint64_t p, std::size_t N,
                                           std::span<const Integer> y1,
                                           std::span<const Integer> z1) {
  CheckReport r;
  r.name = "funceq";
  r.grid = "p=" + std::to_string(p) + " order=" + std::to_string(N);
  if (y1.size() <= N || z1.size() <= N)
    throw std::invalid_argument("verify_functional_equations: prefixes shorter than order");

  TruncatedSeries Y(std::vector<Integer>(y1.begin(), y1.begin() + N + 1));
  TruncatedSeries Z(std::vector<Integer>(z1.begin(), z1.begin() + N + 1));

  TruncatedSeries W(N);
  {
    std::vector<Integer> w(N + 1);
    for (std::uint64_t rdig = 1; rdig < p && rdig - 1 <= N; ++rdig)
      w[rdig - 1] = static_cast<unsigned long>(inverse_mod_p(rdig, p));
    W = TruncatedSeries(std::move(w));
  }
  TruncatedSeries geom(N);  // 1/(1 - x^p) = sum x^{pj}
  {
    std::vector<Integer> g(N + 1);
    for (std::size_t j = 0; j * p <= N; ++j) g[j * p] = 1;
    geom = TruncatedSeries(std::move(g));
  }
  const TruncatedSeries xp1 = TruncatedSeries::monomial(N, p - 1);
  const TruncatedSeries wg = mul(W, geom);
  const TruncatedSeries zero(N);
  const Integer modp(static_cast<unsigned long>(p));

  // Integer-level functional equation for Y.
  TruncatedSeries lhs = sub(Y, add(mul(xp1, substitute_power(Y, p)), wg));
  for (std::size_t n = 0; n <= N; ++n) {
    if (lhs[n] != 0) {
      r.counterexamples.push_back(
          {"integer functional equation, index " + std::to_string(n),
           {{"residual", to_decimal(lhs[n])}}});
      break;
    }
  }
  r.points_checked += N + 1;

  // Algebraic equations over F_p.
  TruncatedSeries eqy = add(sub(mul(xp1, pow(Y, static_cast<long>(p))), Y), wg);
  TruncatedSeries eqz = sub(sub(mul(xp1, pow(Z, static_cast<long>(p))), Z), wg);
  if (SeriesCongruence c = series_congruent(eqy, zero, modp); !c.congruent)
    r.counterexamples.push_back({"Y equation mod p, index " + std::to_string(c.first_failure),
                                 {{"residual", to_decimal(eqy[c.first_failure])}}});
  if (SeriesCongruence c = series_congruent(eqz, zero, modp); !c.congruent)
    r.counterexamples.push_back({"Z equation mod p, index " + std::to_string(c.first_failure),
                                 {{"residual", to_decimal(eqz[c.first_failure])}}});
  r.points_checked += 2 * (N + 1);
  return r;
}

CheckReport verify_functional_equations(std::uint64_t p, std::size_t N) {
  YZSequences yz = y_z_sequences(p, N + 1);
  std::vector<Integer> y1(N + 1), z1(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    y1[n] = yz.y.values[n + 1];
    z1[n] = yz.z.values[n + 1];
  }
  return verify_functional_equations_on(p, N, y1, z1);
}

std::string export_dot(const Dfao& a) {
  std::ostringstream os;
  os << "// dfao alphabet=" << a.alphabet_size
     << " direction=" << (a.direction == ReadDirection::lsb_first ? "lsb" : "msb")
     << " states=" << a.state_count() << " initial=" << a.initial << "\n";
  os << "digraph dfao {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    os << "  " << a.state_names[s] << " [shape=circle, label=\""
       << (a.outputs[s] ? std::to_string(*a.outputs[s]) : "-") << "\"];\n";
  }
  os << "  __start -> " << a.state_names[a.initial] << ";\n";
  for (std::size_t s = 0; s < a.state_count(); ++s)
    for (std::uint32_t d = 0; d < a.alphabet_size; ++d)
      os << "  " << a.state_names[s] << " -> " << a.state_names[a.transitions[s][d]]
         << " [label=\"" << d << "\"];\n";
  os << "}\n";
  return os.str();
}

Dfao parse_dot(const std::string& text) {
  Dfao a;
  std::istringstream is(text);
  std::string line;
  std::map<std::string, std::uint32_t> index;
  if (!std::getline(is, line) || line.rfind("// dfao ", 0) != 0)
    throw std::invalid_argument("parse_dot: missing dfao header comment");
  {
    std::istringstream hs(line.substr(8));
    std::string tok;
    std::size_t states = 0;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "alphabet") a.alphabet_size = static_cast<std::uint32_t>(std::stoul(val));
      if (key == "direction")
        a.direction = (val == "lsb") ? ReadDirection::lsb_first : ReadDirection::msb_first;
      if (key == "states") states = std::stoul(val);
      if (key == "initial") a.initial = static_cast<std::uint32_t>(std::stoul(val));
    }
    a.outputs.resize(states);
    a.state_names.resize(states);
    a.transitions.assign(states, std::vector<std::uint32_t>(a.alphabet_size));
  }
  std::size_t next_state = 0;
  auto strip = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t;");
    return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(is, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '_' || line[0] == '}' || line.rfind("digraph", 0) == 0 ||
        line.rfind("rankdir", 0) == 0)
      continue;
    const auto arrow = line.find("->");
    const auto label_pos = line.find("label=\"");
    if (arrow == std::string::npos) {
      // node line: NAME [shape=circle, label="X"]
      const std::string name = strip(line.substr(0, line.find('[')));
      const std::string label = line.substr(label_pos + 7, line.rfind('"') - label_pos - 7);
      index[name] = static_cast<std::uint32_t>(next_state);
      a.state_names[next_state] = name;
      a.outputs[next_state] = (label == "-") ? std::optional<long>() : std::stol(label);
      ++next_state;
    } else {
      const std::string from = strip(line.substr(0, arrow));
      const std::string to = strip(line.substr(arrow + 2, line.find('[') - arrow - 2));
      const std::uint32_t d =
          static_cast<std::uint32_t>(std::stoul(line.substr(label_pos + 7)));
      a.transitions[index.at(from)][d] = index.at(to);
    }
  }
  if (next_state != a.outputs.size())
    throw std::invalid_argument("parse_dot: state count mismatch");
  return a;
}

}  // namespace partlab
