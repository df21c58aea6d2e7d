#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rank3/finite_field.hpp"

namespace rank3 {

/// Which rank-three family a partition or connection set belongs to.
struct FamilyLabel {
  enum class Kind { Paley, GeneralizedPaley, Peisert, Unmatched };

  Kind kind = Kind::Unmatched;
  std::uint32_t ell = 0;      // GeneralizedPaley
  std::uint32_t k = 0;        // GeneralizedPaley: q = p^((ell-1)k)
  std::uint32_t variant = 0;  // Peisert: 1 or 3

  static FamilyLabel paley() noexcept { return {Kind::Paley, 2, 0, 0}; }
  static FamilyLabel generalized_paley(std::uint32_t ell, std::uint32_t k) noexcept { return {Kind::GeneralizedPaley, ell, k, 0}; }
  static FamilyLabel peisert(std::uint32_t variant) noexcept { return {Kind::Peisert, 0, 0, variant}; }
  static FamilyLabel unmatched() noexcept { return {}; }

  /// "paley", "vls(ell=3,k=2)", "peisert(1)", "unmatched".
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

enum class Symmetry { Undirected, AllowDirected };

/// A subset of F_q^* kept in discrete-log form: indices into Z_{q-1}.
struct ConnectionSet {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::vector<std::uint32_t> indices;  // sorted, distinct
  FamilyLabel family;
  bool symmetric = false;

  [[nodiscard]] std::size_t size() const noexcept { return indices.size(); }
  [[nodiscard]] std::vector<FieldElement> elements(const FiniteField& field) const;
};

/// S = -S, checked through field negation.
[[nodiscard]] bool is_symmetric(const FiniteField& field, std::span<const std::uint32_t> indices);

/// Wraps an explicit element set. ContainsZero if 0 is present; EmptySet if empty.
[[nodiscard]] ConnectionSet connection_set_from_elements(const FiniteField& field, std::span<const FieldElement> elements,
                                                         FamilyLabel label = FamilyLabel::unmatched());

/// <omega^ell>: the index-ell subgroup of F_q^*, labeled GeneralizedPaley{ell, r/(ell-1)}.
/// Errors: NotPrime(ell), OrderCondition (ord_ell(p) != ell-1), DegreeCondition ((ell-1) does not
/// divide r), NotSymmetric (only possible for ell = 2, q = 3 mod 4, unless AllowDirected).
[[nodiscard]] ConnectionSet vls_connection_set(const FiniteField& field, std::uint32_t ell,
                                               Symmetry symmetry = Symmetry::Undirected);

/// Nonzero squares. CharCondition for p = 2, NotSymmetric for q = 3 mod 4.
[[nodiscard]] ConnectionSet paley_connection_set(const FiniteField& field);

/// C u C*omega^variant with C = <omega^4>, variant in {1, 3}.
/// Errors: CharCondition (p != 3 mod 4), DegreeCondition (r odd), InvalidArgument (variant).
[[nodiscard]] ConnectionSet peisert_connection_set(const FiniteField& field, std::uint32_t variant);

/// Two-class partition of Z_{q-1} (index space) with the family it yields.
struct IndexPartition {
  std::vector<std::uint32_t> first;
  std::vector<std::uint32_t> second;
  FamilyLabel family;
};

/// The three ways to pair the classes C, C*omega, C*omega^2, C*omega^3 of <omega^4> into halves:
/// Paley {0,2 | 1,3}, Peisert 1 {0,1 | 2,3}, Peisert 3 {0,3 | 1,2} (residues mod 4).
/// QuarticUnavailable unless 4 | q-1.
[[nodiscard]] std::array<IndexPartition, 3> coarsenings_of_quartic_partition(const FiniteField& field);

enum class LatinSquareTag { ClassicalPaley, LatinSquare, NegativeLatinSquare };

[[nodiscard]] std::string_view to_string(LatinSquareTag tag) noexcept;

/// Parameter bookkeeping for generalized Paley labels; InvalidArgument for other kinds.
[[nodiscard]] LatinSquareTag latin_square_tag(const FamilyLabel& label);

[[nodiscard]] nlohmann::json to_json(const FamilyLabel& label);
/// {field: descriptor, indices: [...], family, symmetric}.
[[nodiscard]] nlohmann::json to_json(const ConnectionSet& set, const FiniteField& field);

}  // namespace rank3
