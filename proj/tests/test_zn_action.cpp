#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rank3/error.hpp"
#include "rank3/number_theory.hpp"
#include "rank3/zn_action.hpp"

using rank3::AffineActionContext;
using rank3::AffineMapZn;
using rank3::Errc;
using rank3::LemmaCase;
using rank3::OrbitPartition;
using Set = std::vector<std::uint32_t>;

namespace {

oracle::Classes as_classes(const OrbitPartition& part) {
  return {std::set<std::uint32_t>(part.first.begin(), part.first.end()),
          std::set<std::uint32_t>(part.second.begin(), part.second.end())};
}

std::set<oracle::Classes> as_class_set(const std::vector<OrbitPartition>& parts) {
  std::set<oracle::Classes> out;
  for (const auto& part : parts) out.insert(as_classes(part));
  return out;
}

bool contains(const std::vector<OrbitPartition>& parts, const Set& a, const Set& b) {
  const oracle::Classes want{{a.begin(), a.end()}, {b.begin(), b.end()}};
  return as_class_set(parts).count(want) != 0;
}

}  // namespace

TEST_CASE("context") {
  const AffineActionContext ctx(15, 2);
  CHECK(ctx.alpha_order() == 4);
  CHECK(ctx.unit_power(3) == 8);
  CHECK_THROWS_AS(AffineActionContext(8, 2), rank3::Error);
  CHECK_THROWS_AS(AffineActionContext(1, 1), rank3::Error);
  CHECK(AffineActionContext(2, 1).alpha_order() == 1);
}

TEST_CASE("affine maps compose and invert") {
  std::mt19937 rng(1);
  for (std::uint32_t n : {5u, 8u, 12u, 15u, 63u}) {
    for (std::uint32_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const AffineActionContext ctx(n, a);
      std::uniform_int_distribution<std::uint32_t> t(0, n - 1), s(0, ctx.alpha_order() - 1);
      for (int trial = 0; trial < 10; ++trial) {
        const AffineMapZn g{t(rng), s(rng)}, h{t(rng), s(rng)};
        const std::uint32_t u = t(rng);
        CHECK(apply(ctx, compose(ctx, g, h), u) == apply(ctx, g, apply(ctx, h, u)));
        CHECK(apply(ctx, inverse(ctx, g), apply(ctx, g, u)) == u);
      }
    }
  }
}

TEST_CASE("radical examples") {
  CHECK(rank3::radical(Set{0, 2, 4, 6}, 8) == 2);
  CHECK(rank3::radical(Set{1}, 5) == 5);
  const Set s{0, 1, 4, 5};
  CHECK(oracle::brute_force_radical(s, 8) == 4);
  CHECK(rank3::radical(s, 8) == 4);
  CHECK(rank3::radical(Set{0, 1, 2, 3, 4, 5}, 6) == 1);
  CHECK_THROWS_AS((void)rank3::radical(Set{}, 5), rank3::Error);
  try {
    (void)rank3::radical(Set{}, 5);
  } catch (const rank3::Error& e) {
    CHECK(e.code() == Errc::EmptySet);
  }
}

TEST_CASE("radical is translation invariant and matches brute force") {
  std::mt19937 rng(17);
  for (std::uint32_t n = 2; n <= 64; ++n) {
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::set<std::uint32_t> s;
      const std::uint32_t size = 1 + pick(rng);
      // Half the trials use unions of cosets so nontrivial radicals appear.
      if (trial % 2 == 0) {
        const auto divs = rank3::nt::divisors(n);
        const auto d = static_cast<std::uint32_t>(divs[pick(rng) % divs.size()]);
        for (std::uint32_t i = 0; i < size; ++i) {
          const std::uint32_t base = pick(rng);
          for (std::uint32_t x = base % d; x < n; x += d) s.insert(x);
        }
      } else {
        for (std::uint32_t i = 0; i < size; ++i) s.insert(pick(rng));
      }
      const Set set(s.begin(), s.end());
      const std::uint32_t c = pick(rng);
      Set shifted;
      for (std::uint32_t x : set) shifted.push_back((x + c) % n);
      const std::uint32_t d = rank3::radical(set, n);
      CHECK(d == oracle::brute_force_radical(set, n));
      CHECK(rank3::radical(shifted, n) == d);
      CHECK(n % d == 0);
    }
  }
}

TEST_CASE("orbits examples") {
  {
    const AffineActionContext ctx(5, 2);
    const std::vector<AffineMapZn> gens{{1, 0}};
    CHECK(rank3::orbits(ctx, gens) == std::vector<Set>{{0, 1, 2, 3, 4}});
  }
  {
    // x -> 2x mod 5: 1, 2, 4, 3.
    const AffineActionContext ctx(5, 2);
    const std::vector<AffineMapZn> gens{{0, 1}};
    CHECK(rank3::orbits(ctx, gens) == std::vector<Set>{{0}, {1, 2, 3, 4}});
  }
  {
    // x -> -x + 1 mod 4 swaps 0 <-> 1 and 2 <-> 3.
    const AffineActionContext ctx(4, 3);
    const std::vector<AffineMapZn> gens{{1, 1}};
    CHECK(rank3::orbits(ctx, gens) == std::vector<Set>{{0, 1}, {2, 3}});
  }
}

TEST_CASE("make_partition canonical order and errors") {
  const auto part = rank3::make_partition(6, {5, 3, 1}, {4, 0, 2});
  CHECK(part.first == Set{0, 2, 4});
  CHECK(part.second == Set{1, 3, 5});
  CHECK(part.radical_index == 2);
  const auto small = rank3::make_partition(5, {0, 1, 2, 3}, {4});
  CHECK(small.first == Set{4});
  CHECK_THROWS_AS((void)rank3::make_partition(4, {0, 1}, {1, 2, 3}), rank3::Error);
  CHECK_THROWS_AS((void)rank3::make_partition(4, {0, 1}, {2}), rank3::Error);
  CHECK_THROWS_AS((void)rank3::make_partition(4, {}, {0, 1, 2, 3}), rank3::Error);
}

TEST_CASE("enumerate examples") {
  const auto p5 = rank3::enumerate_two_orbit_partitions(AffineActionContext(5, 2));
  CHECK(contains(p5, {0}, {1, 2, 3, 4}));
  const auto p4 = rank3::enumerate_two_orbit_partitions(AffineActionContext(4, 3));
  CHECK(contains(p4, {0, 1}, {2, 3}));
  CHECK(contains(p4, {0, 3}, {1, 2}));
  CHECK(contains(p4, {0, 2}, {1, 3}));
  CHECK(p4.size() == 3);
  // X = Z_4 alone: only 2Z_4 has two orbits.
  const auto trivial = rank3::enumerate_two_orbit_partitions(AffineActionContext(4, 1));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().first == Set{0, 2});
  CHECK_THROWS_AS((void)rank3::enumerate_two_orbit_partitions(AffineActionContext(5000, 1)), rank3::Error);
}

TEST_CASE("enumeration witnesses generate the partition") {
  for (std::uint32_t n = 2; n <= 40; ++n) {
    for (std::uint32_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const AffineActionContext ctx(n, a);
      for (const auto& part : rank3::enumerate_two_orbit_partitions(ctx)) {
        const auto orb = rank3::orbits(ctx, part.generators);
        REQUIRE(orb.size() == 2);
        CHECK(as_classes(part) == oracle::Classes{{orb[0].begin(), orb[0].end()}, {orb[1].begin(), orb[1].end()}});
      }
    }
  }
}

TEST_CASE("enumeration agrees with brute-force subgroup closure for small n") {
  for (std::uint32_t n = 2; n <= 14; ++n) {
    for (std::uint32_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      CAPTURE(n);
      CAPTURE(a);
      CHECK(as_class_set(rank3::enumerate_two_orbit_partitions(AffineActionContext(n, a))) ==
            oracle::brute_force_two_orbit_partitions(n, a));
    }
  }
}

TEST_CASE("classify_partition examples") {
  {
    const AffineActionContext ctx(5, 2);
    const auto c = rank3::classify_partition(ctx, rank3::make_partition(5, {0}, {1, 2, 3, 4}));
    CHECK(c.kind == LemmaCase::Kind::Case1);
    CHECK(c.m == 5);
    CHECK(c.offset == 0);
    // Translate of the same shape, produced by x -> 2x - 1.
    const auto shifted = rank3::classify_partition(ctx, rank3::make_partition(5, {1}, {0, 2, 3, 4}));
    CHECK(shifted.kind == LemmaCase::Kind::Case1);
    CHECK(shifted.offset == 1);
  }
  {
    const AffineActionContext ctx(4, 3);
    const auto c2 = rank3::classify_partition(ctx, rank3::make_partition(4, {0, 1}, {2, 3}));
    CHECK(c2.kind == LemmaCase::Kind::Case2);
    CHECK(c2.variant == 1);
    const auto c3 = rank3::classify_partition(ctx, rank3::make_partition(4, {0, 3}, {1, 2}));
    CHECK(c3.kind == LemmaCase::Kind::Case2);
    CHECK(c3.variant == 3);
    const auto c1 = rank3::classify_partition(ctx, rank3::make_partition(4, {0, 2}, {1, 3}));
    CHECK(c1.kind == LemmaCase::Kind::Case1);
    CHECK(c1.m == 2);
  }
  {
    // Not an orbit partition of any subgroup: {0,1} | {2,3} needs alpha = -1 on Z_4.
    const AffineActionContext ctx(4, 1);
    const auto v = rank3::classify_partition(ctx, rank3::make_partition(4, {0, 1}, {2, 3}));
    CHECK(v.kind == LemmaCase::Kind::Violation);
    CHECK_FALSE(v.reason.empty());
    // {0} | rest of Z_5 needs a primitive root; a = 4 has order 2.
    const auto w = rank3::classify_partition(AffineActionContext(5, 4), rank3::make_partition(5, {0}, {1, 2, 3, 4}));
    CHECK(w.kind == LemmaCase::Kind::Violation);
  }
  CHECK_THROWS_AS((void)rank3::classify_partition(AffineActionContext(4, 3), OrbitPartition{{0, 1}, {1, 2, 3}, 0, {}}),
                  rank3::Error);
}

TEST_CASE("verify_lemma small range") {
  const auto report = rank3::verify_lemma(10);
  CHECK(report.violation_count == 0);
  std::size_t pairs = 0;
  for (std::uint32_t n = 2; n <= 10; ++n) {
    for (std::uint32_t a = 1; a < n; ++a) pairs += std::gcd(a, n) == 1 ? 1 : 0;
  }
  CHECK(report.pairs.size() == pairs);
  for (const auto& pair : report.pairs) {
    if (pair.n == 4 && pair.a == 1) {
      REQUIRE(pair.cases.size() == 1);
      CHECK(pair.cases.front().kind == LemmaCase::Kind::Case1);
      CHECK(pair.cases.front().m == 2);
    }
  }
  CHECK_THROWS_AS((void)rank3::verify_lemma(5000), rank3::Error);
  const auto threaded = rank3::verify_lemma(10, rank3::kDefaultActionCap, 3);
  CHECK(rank3::to_json(threaded) == rank3::to_json(report));
}

TEST_CASE("lemma invariants on every enumerated partition") {
  for (std::uint32_t n = 2; n <= 96; ++n) {
    std::vector<std::uint32_t> primitive_roots;
    for (std::uint32_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const AffineActionContext ctx(n, a);
      const auto parts = rank3::enumerate_two_orbit_partitions(ctx);
      if (rank3::nt::is_prime(n) && ctx.alpha_order() == n - 1) {
        CHECK(contains(parts, {0}, [n] {
          Set rest(n - 1);
          std::iota(rest.begin(), rest.end(), 1u);
          return rest;
        }()));
      }
      for (const auto& part : parts) {
        CHECK(rank3::radical(part.first, n) == rank3::radical(part.second, n));
        const auto c = rank3::classify_partition(ctx, part);
        REQUIRE(c.kind != LemmaCase::Kind::Violation);
        if (c.kind == LemmaCase::Kind::Case1) {
          CHECK(part.first.size() == n / c.m);
          // O1 - offset is the subgroup mZ_n.
          for (std::uint32_t x : part.first) CHECK((x + n - c.offset) % c.m == 0);
        } else {
          CHECK(n % 4 == 0);
          CHECK(part.first.size() == n / 2);
          CHECK(part.second.size() == n / 2);
        }
      }
    }
  }
}

TEST_CASE("lemma report json") {
  const auto report = rank3::verify_lemma(5);
  const auto j = rank3::to_json(report);
  CHECK(j["violations"] == 0);
  CHECK(j["n_max"] == 5);
  const auto& first = j["pairs"][0];
  CHECK(first["n"] == 2);
  CHECK(first["partitions"][0]["classes"] == nlohmann::json::array({{0}, {1}}));
  CHECK(first["partitions"][0]["lemma_case"] == "case1");
  const auto summary = rank3::to_json(report, false);
  CHECK_FALSE(summary["pairs"][0].contains("partitions"));
  CHECK(summary["pairs"][0]["lemma_cases"] == nlohmann::json::array({"case1"}));
}
