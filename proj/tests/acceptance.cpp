// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <numeric>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "rank3/rank3.hpp"

using namespace rank3;

namespace {

constexpr std::uint32_t kLemmaNMax = 200;
constexpr double kLemmaSeconds = 120.0;
constexpr std::uint32_t kOracleNMax = 24;
constexpr std::uint32_t kTheoremQMax = 1024;
constexpr double kTheoremSeconds = 300.0;
constexpr std::uint32_t kCoarseningQMax = 1024;

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RANK3_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::set<std::uint32_t> as_set(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

oracle::Classes as_classes(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return {as_set(a), as_set(b)};
}

SrgParams expect_srg(const BitGraph& g) {
  const auto res = srg_params(g);
  if (const auto* p = std::get_if<SrgParams>(&res)) return *p;
  throw std::runtime_error("not strongly regular: " + std::get<NotStronglyRegular>(res).reason);
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome lemma_exhaustion() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify_lemma(kLemmaNMax, kDefaultActionCap, worker_count());
  const double secs = seconds_since(start);
  const int rc = run_cli("verify --lemma --n-max " + std::to_string(kLemmaNMax) + " --summary");
  const bool ok = report.violation_count == 0 && secs < kLemmaSeconds && rc == 0;
  return {ok, std::to_string(report.pairs.size()) + " pairs, " + std::to_string(report.partition_count) + " partitions, " +
                  std::to_string(report.violation_count) + " violations, " + std::to_string(secs) + " s, cli exit " +
                  std::to_string(rc)};
}

Outcome lemma_oracle() {
  std::uint32_t pairs = 0;
  for (std::uint32_t n = 2; n <= kOracleNMax; ++n) {
    for (std::uint32_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      ++pairs;
      std::set<oracle::Classes> got;
      for (const auto& part : enumerate_two_orbit_partitions(AffineActionContext(n, a)))
        got.insert(as_classes(part.first, part.second));
      if (got != oracle::brute_force_two_orbit_partitions(n, a))
        return {false, "mismatch at n=" + std::to_string(n) + " a=" + std::to_string(a)};
    }
  }
  return {true, std::to_string(pairs) + " (n, a) pairs equal"};
}

Outcome theorem_exhaustion() {
  const auto qs = nt::prime_powers_up_to(kTheoremQMax);
  const auto start = std::chrono::steady_clock::now();
  const auto summary = verify_theorem(qs, kDefaultClassifierCap, worker_count());
  const double secs = seconds_since(start);
  const int rc = run_cli("verify --theorem --q-max " + std::to_string(kTheoremQMax));
  const bool ok = summary.unmatched_total == 0 && summary.fields.size() == qs.size() && secs < kTheoremSeconds && rc == 0;
  return {ok, std::to_string(summary.fields.size()) + " fields, " + std::to_string(summary.unmatched_total) +
                  " unmatched, " + std::to_string(secs) + " s, cli exit " + std::to_string(rc)};
}

Outcome srg_cross_checks() {
  const auto f9 = FiniteField::build(3, 2);
  const auto f16 = FiniteField::build(2, 4);
  const auto f49 = FiniteField::build(7, 2);
  const SrgParams paley9 = expect_srg(build_cayley(f9, paley_connection_set(f9)).graph);
  const SrgParams vls16 = expect_srg(build_cayley(f16, vls_connection_set(f16, 3)).graph);
  const SrgParams peisert49 = expect_srg(build_cayley(f49, peisert_connection_set(f49, 1)).graph);
  if (paley9 != SrgParams{9, 4, 1, 2}) return {false, "Paley GF(9)"};
  if (vls16 != SrgParams{16, 5, 0, 2}) return {false, "VLS GF(16)"};
  if (peisert49 != SrgParams{49, 24, 11, 12} || peisert49 != paley_parameter_formula(49)) return {false, "Peisert GF(49)"};
  std::uint32_t count = 0;
  for (const auto q : nt::prime_powers_up_to(kTheoremQMax)) {
    if (q % 4 != 1) continue;
    const auto [p, r] = *nt::prime_power(q);
    const auto f = FiniteField::build(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r));
    if (expect_srg(build_cayley(f, paley_connection_set(f)).graph) != paley_parameter_formula(q))
      return {false, "Paley GF(" + std::to_string(q) + ")"};
    ++count;
  }
  return {true, "fixed cases exact, " + std::to_string(count) + " Paley fields match the closed form"};
}

Outcome peisert_paley_nine() {
  const auto f9 = FiniteField::build(3, 2);
  const auto paley = build_cayley(f9, paley_connection_set(f9)).graph;
  const auto v1 = build_cayley(f9, peisert_connection_set(f9, 1)).graph;
  const auto v3 = build_cayley(f9, peisert_connection_set(f9, 3)).graph;
  const bool a = is_isomorphic_small(v1, paley);
  const bool b = is_isomorphic_small(v1, v3);
  return {a && b, std::string("variant1~paley ") + (a ? "yes" : "no") + ", variant1~variant3 " + (b ? "yes" : "no")};
}

Outcome coarsening_remark() {
  std::vector<std::uint32_t> checked;
  for (const auto q : nt::prime_powers_up_to(kCoarseningQMax)) {
    const auto [p, r] = *nt::prime_power(q);
    if (q % 4 != 1 || p % 4 != 3 || r % 2 != 0) continue;
    const auto f = FiniteField::build(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r));
    const auto coarse = coarsenings_of_quartic_partition(f);
    std::set<oracle::Classes> classified;
    for (const auto& entry : classify_field(f).entries) classified.insert(as_classes(entry.partition.first, entry.partition.second));
    std::set<oracle::Classes> distinct;
    const std::string at = " at q=" + std::to_string(q);
    for (const auto& c : coarse) {
      const auto classes = as_classes(c.first, c.second);
      distinct.insert(classes);
      if (!classified.contains(classes)) return {false, c.family.describe() + " not classified" + at};
      std::vector<FieldElement> elems;
      for (const auto i : c.first) elems.push_back(f.exp(i));
      const auto set = connection_set_from_elements(f, elems, c.family);
      if (expect_srg(build_cayley(f, set).graph) != paley_parameter_formula(q)) return {false, c.family.describe() + " parameters" + at};
    }
    if (distinct.size() != 3) return {false, "coarsenings coincide" + at};
    checked.push_back(q);
  }
  std::string list;
  for (const auto q : checked) list += (list.empty() ? "" : ",") + std::to_string(q);
  return {!checked.empty(), "q in {" + list + "}"};
}

Outcome degenerate_four() {
  const auto f4 = FiniteField::build(2, 2);
  for (const auto& entry : classify_field(f4).entries) {
    if (entry.partition.first.size() != 1) continue;
    if (!(entry.family == FamilyLabel::generalized_paley(3, 1))) return {false, "singleton labeled " + entry.family.describe()};
    std::vector<FieldElement> elems;
    const auto& cls = entry.complemented ? entry.partition.second : entry.partition.first;
    for (const auto i : cls) elems.push_back(f4.exp(i));
    const auto g = build_cayley(f4, connection_set_from_elements(f4, elems, entry.family)).graph;
    for (std::uint32_t u = 0; u < g.order(); ++u)
      if (g.degree(u) != 1) return {false, "graph not 1-regular"};
    return {true, "singleton class is " + entry.family.describe() + ", 1-regular graph on 4 vertices"};
  }
  return {false, "no singleton partition"};
}

Outcome graph6_round_trip() {
  BitGraph c5(5);
  for (std::uint32_t u = 0; u < 5; ++u) c5.add_edge(u, (u + 1) % 5);
  const std::string text = export_graph6(c5);
  const auto [n, adj] = oracle::decode_graph6(text);
  if (n != 5) return {false, "decoded order " + std::to_string(n)};
  for (std::uint32_t u = 0; u < 5; ++u)
    for (std::uint32_t w = 0; w < 5; ++w)
      if (adj[u][w] != c5.adjacent(u, w)) return {false, "adjacency differs"};
  return {true, "\"" + text + "\""};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lemma exhaustion n<=200", lemma_exhaustion},
      {"lemma oracle equivalence n<=24", lemma_oracle},
      {"theorem exhaustion q<=1024", theorem_exhaustion},
      {"construction srg cross-checks", srg_cross_checks},
      {"peisert/paley coincidence at 9", peisert_paley_nine},
      {"quartic coarsenings", coarsening_remark},
      {"degenerate GF(4)", degenerate_four},
      {"graph6 round trip", graph6_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failed += out.ok ? 0 : 1;
    std::cout << (out.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << out.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
