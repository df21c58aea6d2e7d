#include "rank3/zn_action.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include "rank3/error.hpp"
#include "rank3/number_theory.hpp"

namespace rank3 {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

std::uint32_t mulmod(std::uint64_t x, std::uint64_t y, std::uint32_t n) noexcept {
  return static_cast<std::uint32_t>((x * y) % n);
}

}  // namespace

AffineActionContext::AffineActionContext(std::uint32_t n, std::uint32_t a) : n_(n), a_(n > 0 ? a % n : 0) {
  if (n < 2) throw Error(Errc::InvalidArgument, "modulus n must be >= 2, got " + std::to_string(n));
  if (std::gcd(a_, n_) != 1) {
    throw Error(Errc::InvalidArgument, "a = " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
  m_ord_ = static_cast<std::uint32_t>(nt::multiplicative_order(a_, n_));
  powers_.resize(m_ord_);
  std::uint32_t x = 1 % n_;
  for (std::uint32_t s = 0; s < m_ord_; ++s) {
    powers_[s] = x;
    x = mulmod(x, a_, n_);
  }
}

std::uint32_t apply(const AffineActionContext& ctx, AffineMapZn g, std::uint32_t u) noexcept {
  const std::uint32_t n = ctx.modulus();
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(ctx.unit_power(g.s)) * u + g.t) % n);
}

AffineMapZn compose(const AffineActionContext& ctx, AffineMapZn g, AffineMapZn h) noexcept {
  const std::uint32_t n = ctx.modulus();
  return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(ctx.unit_power(g.s)) * h.t + g.t) % n),
          (g.s + h.s) % ctx.alpha_order()};
}

AffineMapZn inverse(const AffineActionContext& ctx, AffineMapZn g) noexcept {
  const std::uint32_t n = ctx.modulus();
  const std::uint32_t s = (ctx.alpha_order() - g.s % ctx.alpha_order()) % ctx.alpha_order();
  const std::uint32_t shifted = mulmod(ctx.unit_power(s), g.t % n, n);
  return {(n - shifted) % n, s};
}

OrbitPartition make_partition(std::uint32_t n, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
  if (a.empty() || b.empty()) throw Error(Errc::MalformedPartition, "partition class is empty");
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto* cls : {&a, &b}) {
    for (std::uint32_t x : *cls) {
      if (x >= n) throw Error(Errc::MalformedPartition, "element " + std::to_string(x) + " outside Z_" + std::to_string(n));
      if (seen[x]++) throw Error(Errc::MalformedPartition, "element " + std::to_string(x) + " appears twice");
    }
  }
  if (a.size() + b.size() != n) throw Error(Errc::MalformedPartition, "classes do not cover Z_" + std::to_string(n));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b.size() < a.size() || (a.size() == b.size() && b.front() < a.front())) std::swap(a, b);
  OrbitPartition part{std::move(a), std::move(b), 0, {}};
  part.radical_index = radical(part.first, n);
  return part;
}

std::uint32_t radical(std::span<const std::uint32_t> set, std::uint32_t n) {
  if (set.empty()) throw Error(Errc::EmptySet, "radical of the empty set");
  std::vector<std::uint8_t> member(n, 0);
  for (std::uint32_t x : set) {
    if (x >= n) throw Error(Errc::InvalidArgument, "element " + std::to_string(x) + " outside Z_" + std::to_string(n));
    member[x] = 1;
  }
  for (std::uint64_t d : nt::divisors(n)) {
    const bool stable = std::all_of(set.begin(), set.end(), [&](std::uint32_t x) { return member[(x + d) % n] != 0; });
    if (stable) return static_cast<std::uint32_t>(d);
  }
  return n;
}

std::vector<std::vector<std::uint32_t>> orbits(const AffineActionContext& ctx, std::span<const AffineMapZn> generators) {
  const std::uint32_t n = ctx.modulus();
  UnionFind uf(n);
  for (const AffineMapZn& g : generators) {
    for (std::uint32_t u = 0; u < n; ++u) uf.unite(u, apply(ctx, g, u));
  }
  std::vector<std::int64_t> slot(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t root = uf.find(u);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(u);
  }
  return out;
}

std::vector<OrbitPartition> enumerate_two_orbit_partitions(const AffineActionContext& ctx, std::uint32_t cap) {
  const std::uint32_t n = ctx.modulus();
  if (n > cap) throw Error(Errc::CapExceeded, "n = " + std::to_string(n) + " exceeds action cap " + std::to_string(cap));

  std::set<OrbitPartition> found;
  const auto exps = nt::divisors(ctx.alpha_order());
  std::vector<std::int32_t> label(n);
  for (std::uint64_t k64 : nt::divisors(n)) {
    const auto k = static_cast<std::uint32_t>(k64);
    if (k < 2) continue;  // Z_n itself is transitive
    // Orbits of <(k,0), (t,s)> are preimages of the cycles of u -> b*u + t on Z_k.
    for (std::uint64_t s64 : exps) {
      const auto s = static_cast<std::uint32_t>(s64);
      const std::uint32_t b = ctx.unit_power(s) % k;
      for (std::uint32_t t = 0; t < k; ++t) {
        std::fill(label.begin(), label.begin() + k, -1);
        std::int32_t cycles = 0;
        for (std::uint32_t start = 0; start < k && cycles <= 2; ++start) {
          if (label[start] >= 0) continue;
          std::uint32_t u = start;
          while (label[u] < 0) {
            label[u] = cycles;
            u = static_cast<std::uint32_t>((static_cast<std::uint64_t>(b) * u + t) % k);
          }
          ++cycles;
        }
        if (cycles != 2) continue;
        std::vector<std::uint32_t> zero, one;
        for (std::uint32_t x = 0; x < n; ++x) (label[x % k] == 0 ? zero : one).push_back(x);
        OrbitPartition part = make_partition(n, std::move(zero), std::move(one));
        if (found.count(part) != 0) continue;
        part.generators = {AffineMapZn{k % n, 0}, AffineMapZn{t, s % ctx.alpha_order()}};
        found.insert(std::move(part));
      }
    }
  }
  return {found.begin(), found.end()};
}

std::string LemmaCase::tag() const {
  switch (kind) {
    case Kind::Case1: return "case1";
    case Kind::Case2: return "case2";
    case Kind::Violation: return "violation";
  }
  return "violation";
}

LemmaCase classify_partition(const AffineActionContext& ctx, const OrbitPartition& part) {
  const std::uint32_t n = ctx.modulus();
  const OrbitPartition canon = make_partition(n, part.first, part.second);
  const auto& o1 = canon.first;
  const auto& o2 = canon.second;

  LemmaCase out;
  const std::uint32_t m = canon.radical_index;
  const std::uint32_t m2 = radical(o2, n);
  if (m != m2) {
    out.reason = "rad(O1) = " + std::to_string(m) + "Z_n differs from rad(O2) = " + std::to_string(m2) + "Z_n";
    return out;
  }
  out.m = m;

  if (nt::is_prime(m) && o1.size() == n / m) {
    if (nt::multiplicative_order(ctx.unit() % m, m) != m - 1) {
      out.reason = "alpha does not permute the nonzero classes of Z_" + std::to_string(m) + " transitively";
      return out;
    }
    out.kind = LemmaCase::Kind::Case1;
    out.offset = o1.front() % m;
    return out;
  }

  if (m == 4 && o1.size() == o2.size()) {
    if (ctx.unit() % 4 != 3) {
      out.reason = "index-4 radical but alpha does not act as x -> -x on Z_n/4Z_n";
      return out;
    }
    std::set<std::uint32_t> residues;
    for (std::uint32_t x : o1) residues.insert(x % 4);
    if (residues.size() == 2 && residues.count(0) != 0 && (residues.count(1) != 0 || residues.count(3) != 0)) {
      out.kind = LemmaCase::Kind::Case2;
      out.variant = residues.count(1) != 0 ? 1 : 3;
      return out;
    }
    out.reason = "index-4 radical with coset pattern outside {0, i} | {2, -i}";
    return out;
  }

  out.reason = "radical index " + std::to_string(m) + " with |O1| = " + std::to_string(o1.size()) + " matches neither case";
  return out;
}

namespace {

LemmaPairResult run_pair(std::uint32_t n, std::uint32_t a, std::uint32_t cap) {
  const AffineActionContext ctx(n, a);
  LemmaPairResult res;
  res.n = n;
  res.a = a;
  res.alpha_order = ctx.alpha_order();
  res.partitions = enumerate_two_orbit_partitions(ctx, cap);
  for (const auto& part : res.partitions) {
    LemmaCase c = classify_partition(ctx, part);
    switch (c.kind) {
      case LemmaCase::Kind::Case1: ++res.case1; break;
      case LemmaCase::Kind::Case2: ++res.case2; break;
      case LemmaCase::Kind::Violation: ++res.violations; break;
    }
    res.cases.push_back(std::move(c));
  }
  return res;
}

std::vector<LemmaPairResult> run_range(std::uint32_t n_max, std::uint32_t cap, unsigned worker, unsigned workers) {
  std::vector<LemmaPairResult> out;
  for (std::uint32_t n = 2 + worker; n <= n_max; n += workers) {
    for (std::uint32_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) == 1) out.push_back(run_pair(n, a, cap));
    }
  }
  return out;
}

}  // namespace

LemmaReport verify_lemma(std::uint32_t n_max, std::uint32_t cap, unsigned threads) {
  if (n_max > cap) {
    throw Error(Errc::CapExceeded, "n_max = " + std::to_string(n_max) + " exceeds action cap " + std::to_string(cap));
  }
  threads = std::max(1u, threads);
  std::vector<std::future<std::vector<LemmaPairResult>>> jobs;
  for (unsigned w = 0; w < threads; ++w) {
    jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, run_range, n_max, cap, w, threads));
  }
  LemmaReport report;
  report.n_max = n_max;
  for (auto& job : jobs) {
    auto part = job.get();
    std::move(part.begin(), part.end(), std::back_inserter(report.pairs));
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const LemmaPairResult& x, const LemmaPairResult& y) { return std::pair{x.n, x.a} < std::pair{y.n, y.a}; });
  for (const auto& pair : report.pairs) {
    report.partition_count += pair.partitions.size();
    report.violation_count += pair.violations;
  }
  return report;
}

nlohmann::json to_json(const LemmaCase& c) {
  nlohmann::json j{{"lemma_case", c.tag()}, {"m", c.m}};
  switch (c.kind) {
    case LemmaCase::Kind::Case1: j["offset"] = c.offset; break;
    case LemmaCase::Kind::Case2: j["variant"] = c.variant; break;
    case LemmaCase::Kind::Violation: j["reason"] = c.reason; break;
  }
  return j;
}

nlohmann::json to_json(const LemmaReport& report, bool with_classes) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pair : report.pairs) {
    nlohmann::json entry{{"n", pair.n},
                         {"a", pair.a},
                         {"alpha_order", pair.alpha_order},
                         {"partition_count", pair.partitions.size()},
                         {"case1", pair.case1},
                         {"case2", pair.case2},
                         {"violations", pair.violations}};
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < pair.partitions.size(); ++i) {
      const bool violated = pair.cases[i].kind == LemmaCase::Kind::Violation;
      if (!with_classes && !violated) continue;
      nlohmann::json pj = to_json(pair.cases[i]);
      pj["classes"] = {pair.partitions[i].first, pair.partitions[i].second};
      parts.push_back(std::move(pj));
    }
    if (with_classes) {
      entry["partitions"] = std::move(parts);
    } else {
      std::vector<std::string> tags;
      for (const auto& c : pair.cases) tags.push_back(c.tag());
      entry["lemma_cases"] = std::move(tags);
      if (!parts.empty()) entry["violating_partitions"] = std::move(parts);
    }
    pairs.push_back(std::move(entry));
  }
  return {{"n_max", report.n_max},
          {"partition_count", report.partition_count},
          {"pairs", std::move(pairs)},
          {"violations", report.violation_count}};
}

}  // namespace rank3
