#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace rank3 {

inline constexpr std::uint32_t kDefaultActionCap = 4096;

/// The group X = Z_n x| <alpha>, alpha: x -> a*x, acting on Z_n.
class AffineActionContext {
 public:
  /// InvalidArgument unless n >= 2 and gcd(a, n) = 1.
  AffineActionContext(std::uint32_t n, std::uint32_t a);

  [[nodiscard]] std::uint32_t modulus() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t unit() const noexcept { return a_; }
  /// Order of alpha, i.e. of a modulo n.
  [[nodiscard]] std::uint32_t alpha_order() const noexcept { return m_ord_; }
  /// a^s mod n.
  [[nodiscard]] std::uint32_t unit_power(std::uint32_t s) const noexcept { return powers_[s % m_ord_]; }

  friend bool operator==(const AffineActionContext&, const AffineActionContext&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t a_;
  std::uint32_t m_ord_;
  std::vector<std::uint32_t> powers_;
};

/// The element (t, alpha^s) of X: u -> a^s * u + t.
struct AffineMapZn {
  std::uint32_t t = 0;
  std::uint32_t s = 0;

  friend bool operator==(const AffineMapZn&, const AffineMapZn&) = default;
  friend auto operator<=>(const AffineMapZn&, const AffineMapZn&) = default;
};

[[nodiscard]] std::uint32_t apply(const AffineActionContext& ctx, AffineMapZn g, std::uint32_t u) noexcept;
/// (g * h)(u) = g(h(u)).
[[nodiscard]] AffineMapZn compose(const AffineActionContext& ctx, AffineMapZn g, AffineMapZn h) noexcept;
[[nodiscard]] AffineMapZn inverse(const AffineActionContext& ctx, AffineMapZn g) noexcept;

/// Two-class partition {O1, O2} of Z_n in canonical order: |O1| <= |O2|, ties
/// broken by the smaller minimum element. Both classes are sorted.
struct OrbitPartition {
  std::vector<std::uint32_t> first;
  std::vector<std::uint32_t> second;
  /// Index m of rad(O1) in Z_n.
  std::uint32_t radical_index = 0;
  /// Generators of a subgroup of X whose orbits are exactly these classes
  /// (empty when the partition was not produced by enumeration).
  std::vector<AffineMapZn> generators;

  friend bool operator==(const OrbitPartition& x, const OrbitPartition& y) noexcept {
    return x.first == y.first && x.second == y.second;
  }
  friend bool operator<(const OrbitPartition& x, const OrbitPartition& y) noexcept {
    return x.first.size() != y.first.size() ? x.first.size() < y.first.size() : x.first < y.first;
  }
};

/// Canonicalizes two classes into an OrbitPartition of Z_n.
/// MalformedPartition if the classes are empty, overlap or fail to cover Z_n.
[[nodiscard]] OrbitPartition make_partition(std::uint32_t n, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b);

/// The divisor d of n with rad(S) = {u : S + u = S} = dZ_n. d = n is the trivial radical.
/// EmptySet for empty S; InvalidArgument for elements outside Z_n.
[[nodiscard]] std::uint32_t radical(std::span<const std::uint32_t> set, std::uint32_t n);

/// Orbits of <generators> on Z_n (union-find closure), each sorted, ordered by minimum element.
[[nodiscard]] std::vector<std::vector<std::uint32_t>> orbits(const AffineActionContext& ctx, std::span<const AffineMapZn> generators);

/// Every distinct orbit partition of a subgroup Y <= X with exactly two orbits,
/// sorted by (|O1|, O1). Candidates are the 2-generator forms <(k,0), (t,s)>
/// with k | n, t in Z_k and s | ord(alpha). CapExceeded if n > cap.
[[nodiscard]] std::vector<OrbitPartition> enumerate_two_orbit_partitions(const AffineActionContext& ctx,
                                                                        std::uint32_t cap = kDefaultActionCap);

struct LemmaCase {
  enum class Kind { Case1, Case2, Violation };

  Kind kind = Kind::Violation;
  /// Case1: the prime index m of the radical. Case2: 4.
  std::uint32_t m = 0;
  /// Case2: i in {1, 3} with O1 = 4Z_n u (i + 4Z_n).
  std::uint32_t variant = 0;
  /// Case1: O1 = offset + mZ_n. Zero is the literal statement.
  std::uint32_t offset = 0;
  std::string reason;

  [[nodiscard]] std::string tag() const;
};

/// Matches a two-orbit partition against the two admissible shapes.
/// MalformedPartition if `part` is not a two-class partition of Z_n.
[[nodiscard]] LemmaCase classify_partition(const AffineActionContext& ctx, const OrbitPartition& part);

struct LemmaPairResult {
  std::uint32_t n = 0;
  std::uint32_t a = 0;
  std::uint32_t alpha_order = 0;
  std::vector<OrbitPartition> partitions;
  std::vector<LemmaCase> cases;
  std::uint32_t case1 = 0;
  std::uint32_t case2 = 0;
  std::uint32_t violations = 0;
};

struct LemmaReport {
  std::uint32_t n_max = 0;
  std::vector<LemmaPairResult> pairs;
  std::uint64_t partition_count = 0;
  std::uint64_t violation_count = 0;
};

/// Runs enumeration + classification for every n in [2, n_max] and every unit a mod n.
/// CapExceeded if n_max > cap. `threads` workers split the n range.
[[nodiscard]] LemmaReport verify_lemma(std::uint32_t n_max, std::uint32_t cap = kDefaultActionCap, unsigned threads = 1);

/// {n_max, pairs: [{n, a, alpha_order, partitions: [{classes, lemma_case, ...}], ...}], violations}.
/// With `with_classes == false` only the case tags and counts are kept per pair.
[[nodiscard]] nlohmann::json to_json(const LemmaReport& report, bool with_classes = true);
[[nodiscard]] nlohmann::json to_json(const LemmaCase& c);

}  // namespace rank3
