#include "rank3/classifier.hpp"

#include <algorithm>
#include <future>

#include "rank3/error.hpp"
#include "rank3/number_theory.hpp"

namespace rank3 {

AffineActionContext gammal1_context(const FiniteField& field) {
  if (field.order() == 2) throw Error(Errc::DegenerateModulus, "q = 2: F_q^* has one element, no two-orbit partitions");
  const std::uint32_t n = field.unit_order();
  return AffineActionContext(n, field.characteristic() % n);
}

std::optional<TranslateMatch> match_up_to_translation(std::uint32_t n, const OrbitPartition& part,
                                                      std::span<const std::uint32_t> family) {
  if (family.empty()) return std::nullopt;
  auto try_class = [&](const std::vector<std::uint32_t>& cls) -> std::optional<std::uint32_t> {
    if (cls.size() != family.size()) return std::nullopt;
    std::vector<std::uint8_t> member(n, 0);
    for (std::uint32_t x : cls) member[x] = 1;
    std::vector<std::uint32_t> offsets;
    for (std::uint32_t x : cls) offsets.push_back((x + n - family.front() % n) % n);
    std::sort(offsets.begin(), offsets.end());
    for (std::uint32_t c : offsets) {
      if (std::all_of(family.begin(), family.end(), [&](std::uint32_t f) { return member[(f + c) % n] != 0; })) return c;
    }
    return std::nullopt;
  };
  const auto direct = try_class(part.first);
  const auto flipped = try_class(part.second);
  if (direct && (!flipped || *direct <= *flipped)) return TranslateMatch{*direct, false};
  if (flipped) return TranslateMatch{*flipped, true};
  return std::nullopt;
}

namespace {

ClassificationEntry classify_entry(const FiniteField& field, const AffineActionContext& ctx, OrbitPartition part) {
  ClassificationEntry entry;
  entry.lemma = classify_partition(ctx, part);
  entry.partition = std::move(part);
  const std::uint32_t n = ctx.modulus();

  auto accept = [&](const ConnectionSet& set, FamilyLabel label) {
    const auto hit = match_up_to_translation(n, entry.partition, set.indices);
    if (!hit) return false;
    entry.family = label;
    entry.offset = hit->offset;
    entry.complemented = hit->complemented;
    entry.undirected = is_symmetric(field, entry.complemented ? entry.partition.second : entry.partition.first);
    return true;
  };

  try {
    switch (entry.lemma.kind) {
      case LemmaCase::Kind::Case1: {
        const std::uint32_t ell = entry.lemma.m;
        const ConnectionSet set = vls_connection_set(field, ell, Symmetry::AllowDirected);
        const FamilyLabel label = ell == 2 ? FamilyLabel::paley() : set.family;
        if (!accept(set, label)) entry.reason = "class is not a translate of <omega^" + std::to_string(ell) + ">";
        break;
      }
      case LemmaCase::Kind::Case2: {
        std::optional<ClassificationEntry> best;
        for (std::uint32_t variant : {1u, 3u}) {
          ClassificationEntry saved = entry;
          if (accept(peisert_connection_set(field, variant), FamilyLabel::peisert(variant))) {
            if (!best || std::pair{entry.offset, entry.complemented} < std::pair{best->offset, best->complemented}) best = entry;
          }
          entry = std::move(saved);
        }
        if (best) {
          entry = std::move(*best);
        } else {
          entry.reason = "class is not a translate of a Peisert set";
        }
        break;
      }
      case LemmaCase::Kind::Violation: entry.reason = "lemma violation: " + entry.lemma.reason; break;
    }
  } catch (const Error& err) {
    entry.family = FamilyLabel::unmatched();
    entry.reason = err.what();
  }
  return entry;
}

}  // namespace

ClassificationReport classify_field(const FiniteField& field, std::uint32_t cap) {
  if (field.order() > cap) {
    throw Error(Errc::CapExceeded, "q = " + std::to_string(field.order()) + " exceeds classifier cap " + std::to_string(cap));
  }
  ClassificationReport report;
  report.p = field.characteristic();
  report.r = field.degree();
  report.q = field.order();
  report.field = field_descriptor(field);
  if (field.order() == 2) return report;

  const AffineActionContext ctx = gammal1_context(field);
  for (OrbitPartition& part : enumerate_two_orbit_partitions(ctx, cap)) {
    report.entries.push_back(classify_entry(field, ctx, std::move(part)));
    if (!report.entries.back().matched()) ++report.unmatched_count;
  }
  return report;
}

namespace {

FieldSummary summarize(const ClassificationReport& report) {
  FieldSummary s{report.q, report.p, report.r, report.entries.size(), report.unmatched_count, {}};
  for (const auto& e : report.entries) {
    const std::string name = e.family.describe();
    if (std::find(s.families.begin(), s.families.end(), name) == s.families.end()) s.families.push_back(name);
  }
  return s;
}

}  // namespace

TheoremSummary verify_theorem(std::span<const std::uint64_t> q_list, std::uint32_t cap, unsigned threads) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> params;
  for (std::uint64_t q : q_list) {
    const auto pp = nt::prime_power(q);
    if (!pp) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    if (q > cap) throw Error(Errc::CapExceeded, "q = " + std::to_string(q) + " exceeds classifier cap " + std::to_string(cap));
    params.emplace_back(static_cast<std::uint32_t>(pp->first), pp->second);
  }

  std::vector<ClassificationReport> reports(params.size());
  threads = std::max(1u, threads);
  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < params.size(); i += threads) {
      reports[i] = classify_field(FiniteField::build(params[i].first, params[i].second, cap), cap);
    }
  };
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < threads; ++w) jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, worker, w));
  for (auto& job : jobs) job.get();

  TheoremSummary summary;
  for (const auto& report : reports) {
    summary.fields.push_back(summarize(report));
    summary.unmatched_total += report.unmatched_count;
  }
  summary.reports = std::move(reports);
  return summary;
}

nlohmann::json to_json(const ClassificationReport& report) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j = to_json(e.lemma);
    j["classes"] = {e.partition.first, e.partition.second};
    j["family"] = to_json(e.family);
    j["complemented"] = e.complemented;
    j["offset"] = e.offset;
    j["undirected"] = e.undirected;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : e.partition.generators) gens.push_back({g.t, g.s});
    j["generators"] = std::move(gens);
    if (!e.matched()) j["reason"] = e.reason;
    parts.push_back(std::move(j));
  }
  return {{"q", report.q},
          {"p", report.p},
          {"r", report.r},
          {"field", report.field},
          {"partitions", std::move(parts)},
          {"unmatched", report.unmatched_count}};
}

nlohmann::json to_json(const TheoremSummary& summary, bool with_reports) {
  nlohmann::json fields = nlohmann::json::array();
  for (const auto& f : summary.fields) {
    fields.push_back({{"q", f.q}, {"p", f.p}, {"r", f.r}, {"partitions", f.partitions}, {"unmatched", f.unmatched}, {"families", f.families}});
  }
  nlohmann::json j{{"fields", std::move(fields)}, {"unmatched", summary.unmatched_total}};
  if (with_reports) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : summary.reports) reports.push_back(to_json(r));
    j["reports"] = std::move(reports);
  }
  return j;
}

}  // namespace rank3
