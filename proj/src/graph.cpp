#include "rank3/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "rank3/error.hpp"

namespace rank3 {

BitGraph::BitGraph(std::uint32_t order) : order_(order), words_((order + 63) / 64), bits_(order * words_, 0) {}

BitGraph BitGraph::from_edges(std::uint32_t order, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  BitGraph g(order);
  for (const auto& [u, w] : edges) {
    if (u >= order || w >= order) throw Error(Errc::InvalidArgument, "edge endpoint outside vertex range");
    g.add_edge(u, w);
  }
  return g;
}

std::uint32_t BitGraph::degree(std::uint32_t u) const noexcept {
  std::uint32_t d = 0;
  for (std::uint64_t word : row(u)) d += static_cast<std::uint32_t>(std::popcount(word));
  return d;
}

std::uint32_t BitGraph::common_neighbours(std::uint32_t u, std::uint32_t w) const noexcept {
  const auto a = row(u);
  const auto b = row(w);
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::uint32_t>(std::popcount(a[i] & b[i]));
  return c;
}

bool BitGraph::is_undirected() const noexcept {
  for (std::uint32_t u = 0; u < order_; ++u) {
    for (std::uint32_t w = u + 1; w < order_; ++w) {
      if (adjacent(u, w) != adjacent(w, u)) return false;
    }
  }
  return true;
}

bool BitGraph::has_loops() const noexcept {
  for (std::uint32_t u = 0; u < order_; ++u) {
    if (adjacent(u, u)) return true;
  }
  return false;
}

BitGraph BitGraph::complement() const {
  BitGraph out(order_);
  for (std::uint32_t u = 0; u < order_; ++u) {
    for (std::uint32_t w = 0; w < order_; ++w) {
      if (u != w && !adjacent(u, w)) out.add_arc(u, w);
    }
  }
  return out;
}

CayleyGraph build_cayley(const FiniteField& field, const ConnectionSet& set, bool allow_directed) {
  if (set.p != field.characteristic() || set.r != field.degree()) {
    throw Error(Errc::FieldMismatch, "connection set belongs to a different field");
  }
  std::vector<std::uint32_t> shifts;
  shifts.reserve(set.indices.size());
  for (std::uint32_t i : set.indices) {
    if (i >= field.unit_order()) throw Error(Errc::InvalidArgument, "connection index outside Z_{q-1}");
    shifts.push_back(field.exp_code(i));
  }
  const bool symmetric = is_symmetric(field, set.indices);
  if (!symmetric && !allow_directed) throw Error(Errc::NotSymmetric, "connection set S != -S; pass allow_directed for a digraph");

  CayleyGraph out{BitGraph(field.order()), set, symmetric};
  for (std::uint32_t u = 0; u < field.order(); ++u) {
    for (std::uint32_t s : shifts) out.graph.add_arc(u, field.add_codes(u, s));
  }
  return out;
}

SrgResult srg_params(const BitGraph& graph, std::uint32_t cap) {
  const std::uint32_t v = graph.order();
  if (v > cap) throw Error(Errc::CapExceeded, "SRG check on " + std::to_string(v) + " vertices exceeds cap " + std::to_string(cap));
  if (!graph.is_undirected()) throw Error(Errc::Directed, "strong regularity needs an undirected graph");
  if (graph.has_loops()) return NotStronglyRegular{0, 0, "graph has loops"};
  if (v == 0) return SrgParams{};

  const std::uint32_t k = graph.degree(0);
  for (std::uint32_t u = 1; u < v; ++u) {
    if (graph.degree(u) != k) return NotStronglyRegular{0, u, "not regular"};
  }
  std::int64_t lambda = -1;
  std::int64_t mu = -1;
  for (std::uint32_t u = 0; u < v; ++u) {
    for (std::uint32_t w = u + 1; w < v; ++w) {
      const std::int64_t c = graph.common_neighbours(u, w);
      std::int64_t& slot = graph.adjacent(u, w) ? lambda : mu;
      if (slot < 0) {
        slot = c;
      } else if (slot != c) {
        return NotStronglyRegular{u, w, graph.adjacent(u, w) ? "adjacent pair with a different lambda" : "non-adjacent pair with a different mu"};
      }
    }
  }
  SrgParams params{v, k, static_cast<std::uint64_t>(std::max<std::int64_t>(lambda, 0)), static_cast<std::uint64_t>(std::max<std::int64_t>(mu, 0))};
  if (!params.feasible()) throw std::logic_error("SRG counts violate k(k-lambda-1) = (v-k-1)mu");
  return params;
}

SrgParams paley_parameter_formula(std::uint64_t q) {
  if (q % 4 != 1) throw Error(Errc::BadResidue, "Paley parameters need q ≡ 1 mod 4, got q = " + std::to_string(q));
  return {q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
}

namespace {

/// Colour refinement run jointly on both graphs so that colours are comparable.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine(const BitGraph& g1, const BitGraph& g2) {
  const std::uint32_t v = g1.order();
  std::vector<std::uint32_t> c1(v), c2(v);
  for (std::uint32_t u = 0; u < v; ++u) {
    c1[u] = g1.degree(u);
    c2[u] = g2.degree(u);
  }
  for (std::uint32_t round = 0; round < v; ++round) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    auto signature = [](const BitGraph& g, const std::vector<std::uint32_t>& colour, std::uint32_t u) {
      std::vector<std::uint32_t> sig;
      for (std::uint32_t w = 0; w < g.order(); ++w) {
        if (g.adjacent(u, w)) sig.push_back(colour[w]);
      }
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), colour[u]);
      return sig;
    };
    std::vector<std::vector<std::uint32_t>> s1(v), s2(v);
    for (std::uint32_t u = 0; u < v; ++u) {
      s1[u] = signature(g1, c1, u);
      s2[u] = signature(g2, c2, u);
      ids.emplace(s1[u], 0);
      ids.emplace(s2[u], 0);
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<std::uint32_t> n1(v), n2(v);
    for (std::uint32_t u = 0; u < v; ++u) {
      n1[u] = ids[s1[u]];
      n2[u] = ids[s2[u]];
    }
    const bool stable = std::set<std::uint32_t>(n1.begin(), n1.end()).size() == std::set<std::uint32_t>(c1.begin(), c1.end()).size() &&
                        std::set<std::uint32_t>(n2.begin(), n2.end()).size() == std::set<std::uint32_t>(c2.begin(), c2.end()).size();
    c1 = std::move(n1);
    c2 = std::move(n2);
    if (stable) break;
  }
  return {c1, c2};
}

class IsoSearch {
 public:
  IsoSearch(const BitGraph& g1, const BitGraph& g2, std::vector<std::uint32_t> c1, std::vector<std::uint32_t> c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)), image_(g1.order()), used_(g1.order(), false) {}

  bool run(std::uint32_t depth = 0) {
    const std::uint32_t v = g1_.order();
    if (depth == v) return true;
    for (std::uint32_t cand = 0; cand < v; ++cand) {
      if (used_[cand] || c2_[cand] != c1_[depth]) continue;
      bool ok = true;
      for (std::uint32_t prev = 0; prev < depth && ok; ++prev) {
        ok = g1_.adjacent(depth, prev) == g2_.adjacent(cand, image_[prev]) &&
             g1_.adjacent(prev, depth) == g2_.adjacent(image_[prev], cand);
      }
      if (!ok) continue;
      image_[depth] = cand;
      used_[cand] = true;
      if (run(depth + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

 private:
  const BitGraph& g1_;
  const BitGraph& g2_;
  std::vector<std::uint32_t> c1_, c2_;
  std::vector<std::uint32_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic_small(const BitGraph& g1, const BitGraph& g2) {
  if (g1.order() > kMaxIsomorphismOrder || g2.order() > kMaxIsomorphismOrder) {
    throw Error(Errc::TooLarge, "isomorphism test is limited to " + std::to_string(kMaxIsomorphismOrder) + " vertices");
  }
  if (g1.order() != g2.order()) return false;
  auto [c1, c2] = refine(g1, g2);
  auto h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return false;
  return IsoSearch(g1, g2, std::move(c1), std::move(c2)).run();
}

std::string export_graph6(const BitGraph& graph) {
  if (!graph.is_undirected()) throw Error(Errc::Directed, "graph6 encodes undirected graphs only");
  const std::uint64_t n = graph.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63u) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63u) + 63));
  }
  std::uint32_t acc = 0;
  int filled = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      acc = (acc << 1u) | (graph.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string export_edge_list(const BitGraph& graph) {
  std::ostringstream os;
  const bool undirected = graph.is_undirected();
  for (std::uint32_t u = 0; u < graph.order(); ++u) {
    for (std::uint32_t w = undirected ? u + 1 : 0; w < graph.order(); ++w) {
      if (graph.adjacent(u, w)) os << u << ' ' << w << '\n';
    }
  }
  return os.str();
}

nlohmann::json to_json(const SrgParams& params) {
  return {{"v", params.v}, {"k", params.k}, {"lambda", params.lambda}, {"mu", params.mu}};
}

}  // namespace rank3
