#include "rank3/families.hpp"

#include <algorithm>

#include "rank3/error.hpp"
#include "rank3/number_theory.hpp"

namespace rank3 {
namespace {

std::vector<std::uint32_t> residue_classes(std::uint32_t n, std::uint32_t modulus, std::initializer_list<std::uint32_t> residues) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (std::find(residues.begin(), residues.end(), i % modulus) != residues.end()) out.push_back(i);
  }
  return out;
}

ConnectionSet make_set(const FiniteField& field, std::vector<std::uint32_t> indices, FamilyLabel label) {
  ConnectionSet set;
  set.p = field.characteristic();
  set.r = field.degree();
  set.indices = std::move(indices);
  set.family = label;
  set.symmetric = is_symmetric(field, set.indices);
  return set;
}

std::string q_text(const FiniteField& field) {
  return "q = " + std::to_string(field.characteristic()) + "^" + std::to_string(field.degree());
}

}  // namespace

std::string FamilyLabel::describe() const {
  switch (kind) {
    case Kind::Paley: return "paley";
    case Kind::GeneralizedPaley: return "vls(ell=" + std::to_string(ell) + ",k=" + std::to_string(k) + ")";
    case Kind::Peisert: return "peisert(" + std::to_string(variant) + ")";
    case Kind::Unmatched: return "unmatched";
  }
  return "unmatched";
}

std::vector<FieldElement> ConnectionSet::elements(const FiniteField& field) const {
  if (field.characteristic() != p || field.degree() != r) {
    throw Error(Errc::FieldMismatch, "connection set belongs to a different field");
  }
  std::vector<FieldElement> out;
  out.reserve(indices.size());
  for (std::uint32_t i : indices) out.push_back(field.exp(i));
  return out;
}

bool is_symmetric(const FiniteField& field, std::span<const std::uint32_t> indices) {
  std::vector<std::uint8_t> member(field.unit_order(), 0);
  for (std::uint32_t i : indices) member[i % field.unit_order()] = 1;
  return std::all_of(indices.begin(), indices.end(),
                     [&](std::uint32_t i) { return member[field.dlog(field.neg(field.exp(i)))] != 0; });
}

ConnectionSet connection_set_from_elements(const FiniteField& field, std::span<const FieldElement> elements, FamilyLabel label) {
  if (elements.empty()) throw Error(Errc::EmptySet, "connection set is empty");
  std::vector<std::uint32_t> indices;
  for (const FieldElement& x : elements) {
    if (!field.contains(x)) throw Error(Errc::FieldMismatch, "connection set element from a different field");
    if (x.is_zero()) throw Error(Errc::ContainsZero, "connection set contains 0 (Cayley graph would have loops)");
    indices.push_back(field.dlog(x));
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return make_set(field, std::move(indices), label);
}

ConnectionSet vls_connection_set(const FiniteField& field, std::uint32_t ell, Symmetry symmetry) {
  const std::uint32_t p = field.characteristic();
  const std::uint32_t r = field.degree();
  if (!nt::is_prime(ell)) throw Error(Errc::NotPrime, "ell = " + std::to_string(ell) + " is not prime");
  if (ell == p) throw Error(Errc::OrderCondition, "ord_ell(p) != ell-1: ord_ell(p) is undefined for ell = p = " + std::to_string(p));
  const std::uint64_t ord = nt::multiplicative_order(p, ell);
  if (ord != ell - 1) {
    throw Error(Errc::OrderCondition, "ord_ell(p) != ell-1: ord_" + std::to_string(ell) + "(" + std::to_string(p) +
                                          ") = " + std::to_string(ord) + ", need " + std::to_string(ell - 1));
  }
  if (r % (ell - 1) != 0) {
    throw Error(Errc::DegreeCondition, "(ell-1) does not divide r: " + std::to_string(ell - 1) + " does not divide " + std::to_string(r));
  }
  ConnectionSet set = make_set(field, residue_classes(field.unit_order(), ell, {0}),
                               FamilyLabel::generalized_paley(ell, r / (ell - 1)));
  if (!set.symmetric && symmetry == Symmetry::Undirected) {
    throw Error(Errc::NotSymmetric, "<omega^" + std::to_string(ell) + "> is not closed under negation in GF(" +
                                        std::to_string(field.order()) + ") (q ≡ 3 mod 4)");
  }
  return set;
}

ConnectionSet paley_connection_set(const FiniteField& field) {
  if (field.characteristic() == 2) {
    throw Error(Errc::CharCondition, "characteristic 2: 2 does not divide q-1, no index-2 subgroup of squares");
  }
  if (field.order() % 4 != 1) {
    throw Error(Errc::NotSymmetric, "q ≡ 3 mod 4 (" + q_text(field) + " = " + std::to_string(field.order()) +
                                        "): the squares are not closed under negation");
  }
  return make_set(field, residue_classes(field.unit_order(), 2, {0}), FamilyLabel::paley());
}

ConnectionSet peisert_connection_set(const FiniteField& field, std::uint32_t variant) {
  if (variant != 1 && variant != 3) throw Error(Errc::InvalidArgument, "Peisert variant must be 1 or 3");
  if (field.characteristic() % 4 != 3) {
    throw Error(Errc::CharCondition, "p ≢ 3 mod 4 (p = " + std::to_string(field.characteristic()) + ")");
  }
  if (field.degree() % 2 != 0) throw Error(Errc::DegreeCondition, "r must be even, got r = " + std::to_string(field.degree()));
  return make_set(field, residue_classes(field.unit_order(), 4, {0, variant}), FamilyLabel::peisert(variant));
}

std::array<IndexPartition, 3> coarsenings_of_quartic_partition(const FiniteField& field) {
  const std::uint32_t n = field.unit_order();
  if (n % 4 != 0) throw Error(Errc::QuarticUnavailable, "4 does not divide q-1 = " + std::to_string(n));
  std::array<IndexPartition, 3> out{{
      {residue_classes(n, 4, {0, 2}), residue_classes(n, 4, {1, 3}), FamilyLabel::paley()},
      {residue_classes(n, 4, {0, 1}), residue_classes(n, 4, {2, 3}), FamilyLabel::peisert(1)},
      {residue_classes(n, 4, {0, 3}), residue_classes(n, 4, {1, 2}), FamilyLabel::peisert(3)},
  }};
  std::vector<std::uint32_t> squares;
  for (std::uint32_t i = 0; i < n; ++i) {
    const FieldElement x = field.exp(i);
    squares.push_back(field.dlog(field.mul(x, x)));
  }
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  if (squares != out[0].first) throw std::logic_error("Paley coarsening differs from the set of squares");
  return out;
}

std::string_view to_string(LatinSquareTag tag) noexcept {
  switch (tag) {
    case LatinSquareTag::ClassicalPaley: return "ClassicalPaley";
    case LatinSquareTag::LatinSquare: return "LatinSquare";
    case LatinSquareTag::NegativeLatinSquare: return "NegativeLatinSquare";
  }
  return "ClassicalPaley";
}

LatinSquareTag latin_square_tag(const FamilyLabel& label) {
  if (label.kind != FamilyLabel::Kind::GeneralizedPaley) {
    throw Error(Errc::InvalidArgument, "latin square tag needs a generalized Paley label, got " + label.describe());
  }
  if (label.ell == 2) return LatinSquareTag::ClassicalPaley;
  return label.k % 2 == 1 ? LatinSquareTag::LatinSquare : LatinSquareTag::NegativeLatinSquare;
}

nlohmann::json to_json(const FamilyLabel& label) {
  nlohmann::json j{{"name", label.describe()}};
  switch (label.kind) {
    case FamilyLabel::Kind::Paley: j["kind"] = "paley"; break;
    case FamilyLabel::Kind::GeneralizedPaley:
      j["kind"] = "vls";
      j["ell"] = label.ell;
      j["k"] = label.k;
      j["latin_square"] = std::string(to_string(latin_square_tag(label)));
      break;
    case FamilyLabel::Kind::Peisert:
      j["kind"] = "peisert";
      j["variant"] = label.variant;
      break;
    case FamilyLabel::Kind::Unmatched: j["kind"] = "unmatched"; break;
  }
  return j;
}

nlohmann::json to_json(const ConnectionSet& set, const FiniteField& field) {
  return {{"field", field_descriptor(field)},
          {"indices", set.indices},
          {"size", set.indices.size()},
          {"family", to_json(set.family)},
          {"symmetric", set.symmetric}};
}

}  // namespace rank3
