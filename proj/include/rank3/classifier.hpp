#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rank3/families.hpp"
#include "rank3/finite_field.hpp"
#include "rank3/zn_action.hpp"

namespace rank3 {

inline constexpr std::uint32_t kDefaultClassifierCap = 4096;

/// GammaL(1,q) acting on F_q^* read through dlog: multiplication by omega is
/// translation by 1 and Frobenius is multiplication by p on Z_{q-1}.
/// DegenerateModulus for q = 2.
[[nodiscard]] AffineActionContext gammal1_context(const FiniteField& field);

struct ClassificationEntry {
  OrbitPartition partition;  // index space
  LemmaCase lemma;
  FamilyLabel family;
  /// The family set matched O2 rather than O1.
  bool complemented = false;
  /// The matched class is offset + (family set) in Z_{q-1}, i.e. omega^offset * S.
  std::uint32_t offset = 0;
  /// The matched connection set is closed under negation.
  bool undirected = false;
  std::string reason;  // why an entry is unmatched

  [[nodiscard]] bool matched() const noexcept { return family.kind != FamilyLabel::Kind::Unmatched; }
};

struct ClassificationReport {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  nlohmann::json field;  // descriptor
  std::vector<ClassificationEntry> entries;
  std::uint32_t unmatched_count = 0;
};

/// Enumerates all two-orbit partitions of F_q^* under subgroups of GammaL(1,q)
/// and matches each, up to complement and translation, against the
/// Van Lint-Schrijver, Paley and Peisert sets. Empty report for q = 2.
/// CapExceeded if q > cap.
[[nodiscard]] ClassificationReport classify_field(const FiniteField& field, std::uint32_t cap = kDefaultClassifierCap);

/// Smallest (offset, complemented) with O1 = offset + family or O2 = offset + family in Z_n.
struct TranslateMatch {
  std::uint32_t offset = 0;
  bool complemented = false;
};
[[nodiscard]] std::optional<TranslateMatch> match_up_to_translation(std::uint32_t n, const OrbitPartition& part,
                                                                    std::span<const std::uint32_t> family);

struct FieldSummary {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::size_t partitions = 0;
  std::uint32_t unmatched = 0;
  std::vector<std::string> families;  // distinct labels in first-seen order
};

struct TheoremSummary {
  std::vector<FieldSummary> fields;
  std::vector<ClassificationReport> reports;
  std::uint64_t unmatched_total = 0;
};

/// classify_field for each q (every q must be a prime power <= cap).
/// InvalidArgument for a non prime power, CapExceeded above cap.
[[nodiscard]] TheoremSummary verify_theorem(std::span<const std::uint64_t> q_list, std::uint32_t cap = kDefaultClassifierCap,
                                            unsigned threads = 1);

/// {q, p, r, field, partitions: [{classes, lemma_case, family, complemented, offset, ...}], unmatched}.
[[nodiscard]] nlohmann::json to_json(const ClassificationReport& report);
/// {fields: [{q, p, r, partitions, unmatched, families}], unmatched}; full reports with `with_reports`.
[[nodiscard]] nlohmann::json to_json(const TheoremSummary& summary, bool with_reports = false);

}  // namespace rank3
