#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rank3/families.hpp"
#include "rank3/finite_field.hpp"

namespace rank3 {

inline constexpr std::uint32_t kDefaultSrgCap = 1024;
inline constexpr std::uint32_t kMaxIsomorphismOrder = 16;

/// Dense adjacency as one bitrow of 64-bit words per vertex.
class BitGraph {
 public:
  explicit BitGraph(std::uint32_t order);

  static BitGraph from_edges(std::uint32_t order, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }
  [[nodiscard]] std::span<const std::uint64_t> row(std::uint32_t u) const noexcept { return {bits_.data() + u * words_, words_}; }

  [[nodiscard]] bool adjacent(std::uint32_t u, std::uint32_t w) const noexcept {
    return (bits_[u * words_ + w / 64] >> (w % 64)) & 1u;
  }
  void add_arc(std::uint32_t u, std::uint32_t w) noexcept { bits_[u * words_ + w / 64] |= std::uint64_t{1} << (w % 64); }
  void add_edge(std::uint32_t u, std::uint32_t w) noexcept {
    add_arc(u, w);
    add_arc(w, u);
  }

  [[nodiscard]] std::uint32_t degree(std::uint32_t u) const noexcept;
  [[nodiscard]] std::uint32_t common_neighbours(std::uint32_t u, std::uint32_t w) const noexcept;
  [[nodiscard]] bool is_undirected() const noexcept;
  [[nodiscard]] bool has_loops() const noexcept;
  /// Complement on distinct vertex pairs (no loops).
  [[nodiscard]] BitGraph complement() const;

  friend bool operator==(const BitGraph&, const BitGraph&) = default;

 private:
  std::uint32_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Cay(F_q^+, S): vertex u is the element with code u, arcs u -> u + s for s in S.
struct CayleyGraph {
  BitGraph graph;
  ConnectionSet connection;
  bool undirected = false;
};

/// NotSymmetric if S != -S and !allow_directed; FieldMismatch for a foreign set.
[[nodiscard]] CayleyGraph build_cayley(const FiniteField& field, const ConnectionSet& set, bool allow_directed = false);

struct SrgParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  /// k(k - lambda - 1) = (v - k - 1) mu.
  [[nodiscard]] bool feasible() const noexcept { return k * (k - lambda - 1) == (v - k - 1) * mu; }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Witness that a graph is not strongly regular: the pair (u, w) whose count disagrees.
struct NotStronglyRegular {
  std::uint32_t u = 0;
  std::uint32_t w = 0;
  std::string reason;
};

using SrgResult = std::variant<SrgParams, NotStronglyRegular>;

/// Strongly regular parameters by bitrow AND + popcount over all pairs.
/// Directed for asymmetric graphs; CapExceeded above `cap` vertices.
[[nodiscard]] SrgResult srg_params(const BitGraph& graph, std::uint32_t cap = kDefaultSrgCap);

/// (q, (q-1)/2, (q-5)/4, (q-1)/4); BadResidue unless q = 1 mod 4.
[[nodiscard]] SrgParams paley_parameter_formula(std::uint64_t q);

/// Exact isomorphism test by backtracking over colour-refined classes.
/// TooLarge above 16 vertices.
[[nodiscard]] bool is_isomorphic_small(const BitGraph& g1, const BitGraph& g2);

/// Standard graph6 (no header line). Directed if the graph is not undirected.
[[nodiscard]] std::string export_graph6(const BitGraph& graph);
/// "u w" per edge with u < w, or per arc u -> w for digraphs; sorted.
[[nodiscard]] std::string export_edge_list(const BitGraph& graph);

[[nodiscard]] nlohmann::json to_json(const SrgParams& params);

}  // namespace rank3
