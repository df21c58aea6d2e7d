// rank3: construct, classify and verify one-dimensional affine rank three graphs.
//
//   rank3 construct --family vls --p 2 --r 4 --ell 3 --format graph6
//   rank3 classify --p 3 --r 2
//   rank3 verify --lemma --n-max 200
//   rank3 verify --theorem --q-max 1024
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank3/rank3.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string family;
  std::uint32_t p = 0;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> k;
  std::uint32_t ell = 0;
  std::uint32_t variant = 1;
  std::string n_max = "100";
  std::string q_max = "1024";
  std::vector<std::uint64_t> q_list;
  std::uint64_t field_cap = rank3::kDefaultFieldCap;
  std::uint32_t action_cap = rank3::kDefaultActionCap;
  std::uint32_t q_cap = rank3::kDefaultClassifierCap;
  std::uint32_t srg_cap = rank3::kDefaultSrgCap;
  std::string output;
  std::string format = "json";
  bool allow_directed = false;
  bool lemma = false;
  bool theorem = false;
  bool summary = false;
  bool with_reports = false;
  unsigned threads = 1;
};

/// Accepts "123" or "10^9"; saturates at uint64 max so that caps reject it.
std::uint64_t parse_count(const std::string& text, const std::string& flag) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ptr != s.data() + s.size() || s.empty()) throw rank3::Error(rank3::Errc::InvalidArgument, flag + ": not an integer: " + text);
    if (ec == std::errc::result_out_of_range) return std::numeric_limits<std::uint64_t>::max();
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string::npos) return parse_u64(text);
  const std::uint64_t base = parse_u64(std::string_view(text).substr(0, caret));
  const std::uint64_t exp = parse_u64(std::string_view(text).substr(caret + 1));
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw rank3::Error(rank3::Errc::InvalidArgument, "cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  [[nodiscard]] bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::uint32_t resolve_degree(const RunConfig& cfg) {
  if (cfg.family == "vls" && cfg.k) {
    if (cfg.ell < 2) throw rank3::Error(rank3::Errc::InvalidArgument, "--k needs --ell");
    const std::uint32_t r = (cfg.ell - 1) * *cfg.k;
    if (cfg.r && *cfg.r != r) throw rank3::Error(rank3::Errc::DegreeCondition, "--r disagrees with (ell-1)*k");
    return r;
  }
  if (!cfg.r) throw rank3::Error(rank3::Errc::InvalidArgument, "--r is required");
  return *cfg.r;
}

int cmd_construct(const RunConfig& cfg) {
  const rank3::FiniteField field = rank3::FiniteField::build(cfg.p, resolve_degree(cfg), cfg.field_cap);
  rank3::ConnectionSet set;
  if (cfg.family == "paley") {
    set = rank3::paley_connection_set(field);
  } else if (cfg.family == "vls") {
    if (cfg.ell == 0) throw rank3::Error(rank3::Errc::InvalidArgument, "--ell is required for --family vls");
    set = rank3::vls_connection_set(field, cfg.ell, cfg.allow_directed ? rank3::Symmetry::AllowDirected : rank3::Symmetry::Undirected);
  } else if (cfg.family == "peisert") {
    set = rank3::peisert_connection_set(field, cfg.variant);
  } else {
    throw rank3::Error(rank3::Errc::InvalidArgument, "unknown family '" + cfg.family + "' (paley | vls | peisert)");
  }

  const rank3::CayleyGraph cay = rank3::build_cayley(field, set, cfg.allow_directed);
  nlohmann::json srg = nullptr;
  if (cay.undirected) {
    const auto result = rank3::srg_params(cay.graph, cfg.srg_cap);
    if (const auto* params = std::get_if<rank3::SrgParams>(&result)) {
      srg = rank3::to_json(*params);
    } else {
      const auto& bad = std::get<rank3::NotStronglyRegular>(result);
      srg = {{"strongly_regular", false}, {"witness", {bad.u, bad.w}}, {"reason", bad.reason}};
    }
  }

  nlohmann::json summary{{"connection_set", rank3::to_json(set, field)}, {"vertices", field.order()}, {"undirected", cay.undirected}, {"srg", srg}};
  if (set.family.kind == rank3::FamilyLabel::Kind::GeneralizedPaley) {
    summary["latin_square"] = std::string(rank3::to_string(rank3::latin_square_tag(set.family)));
  }

  Output out(cfg.output);
  if (cfg.format == "json") {
    if (cay.undirected) summary["graph6"] = rank3::export_graph6(cay.graph);
    out.stream() << summary.dump(2) << '\n';
  } else if (cfg.format == "graph6" || cfg.format == "edges") {
    out.stream() << (cfg.format == "graph6" ? rank3::export_graph6(cay.graph) + "\n" : rank3::export_edge_list(cay.graph));
    (out.to_file() ? std::cout : std::cerr) << summary.dump(2) << '\n';
  } else if (cfg.format == "text") {
    auto& os = out.stream();
    os << "field      GF(" << field.characteristic() << "^" << field.degree() << "), q = " << field.order() << '\n';
    os << "family     " << set.family.describe() << '\n';
    os << "|S|        " << set.size() << '\n';
    os << "indices   ";
    for (std::uint32_t i : set.indices) os << ' ' << i;
    os << '\n';
    if (!srg.is_null() && srg.contains("v")) {
      os << "srg        (" << srg["v"] << ", " << srg["k"] << ", " << srg["lambda"] << ", " << srg["mu"] << ")\n";
    }
  } else {
    throw rank3::Error(rank3::Errc::InvalidArgument, "unknown format '" + cfg.format + "'");
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
  if (!cfg.r) throw rank3::Error(rank3::Errc::InvalidArgument, "--r is required");
  const auto q = rank3::nt::checked_pow(cfg.p, *cfg.r, cfg.q_cap);
  if (rank3::nt::is_prime(cfg.p) && !q) {
    throw rank3::Error(rank3::Errc::CapExceeded, "q exceeds classifier cap " + std::to_string(cfg.q_cap));
  }
  const rank3::FiniteField field = rank3::FiniteField::build(cfg.p, *cfg.r, cfg.field_cap);
  const rank3::ClassificationReport report = rank3::classify_field(field, cfg.q_cap);
  Output out(cfg.output);
  if (cfg.format == "text") {
    auto& os = out.stream();
    os << "GF(" << report.p << "^" << report.r << "): " << report.entries.size() << " two-orbit partitions, "
       << report.unmatched_count << " unmatched\n";
    for (const auto& e : report.entries) {
      os << "  |O1| = " << e.partition.first.size() << "  " << e.lemma.tag() << " m=" << e.lemma.m << "  " << e.family.describe()
         << (e.complemented ? " (complement)" : "") << " offset=" << e.offset << (e.undirected ? "" : " directed") << '\n';
    }
  } else {
    out.stream() << rank3::to_json(report).dump(2) << '\n';
  }
  return report.unmatched_count == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.lemma == cfg.theorem) throw rank3::Error(rank3::Errc::InvalidArgument, "pass exactly one of --lemma / --theorem");
  Output out(cfg.output);
  if (cfg.lemma) {
    const std::uint64_t n_max = parse_count(cfg.n_max, "--n-max");
    if (n_max > cfg.action_cap) {
      throw rank3::Error(rank3::Errc::CapExceeded, "n_max = " + cfg.n_max + " exceeds action cap " + std::to_string(cfg.action_cap));
    }
    const auto report = rank3::verify_lemma(static_cast<std::uint32_t>(n_max), cfg.action_cap, cfg.threads);
    out.stream() << rank3::to_json(report, !cfg.summary).dump(cfg.summary ? 2 : -1) << '\n';
    if (out.to_file()) {
      std::cout << "lemma: n <= " << n_max << ", " << report.pairs.size() << " (n, a) pairs, " << report.partition_count
                << " partitions, " << report.violation_count << " violations\n";
    }
    return report.violation_count == 0 ? kExitOk : kExitVerifyFailed;
  }

  std::vector<std::uint64_t> q_list = cfg.q_list;
  if (q_list.empty()) {
    const std::uint64_t q_max = parse_count(cfg.q_max, "--q-max");
    if (q_max > cfg.q_cap) {
      throw rank3::Error(rank3::Errc::CapExceeded, "q_max = " + cfg.q_max + " exceeds classifier cap " + std::to_string(cfg.q_cap));
    }
    q_list = rank3::nt::prime_powers_up_to(q_max);
  }
  const auto summary = rank3::verify_theorem(q_list, cfg.q_cap, cfg.threads);
  out.stream() << rank3::to_json(summary, cfg.with_reports).dump(2) << '\n';
  if (out.to_file()) {
    std::cout << "theorem: " << summary.fields.size() << " fields, " << summary.unmatched_total << " unmatched partitions\n";
  }
  return summary.unmatched_total == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional affine rank three graphs: construction, classification, verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* construct = app.add_subcommand("construct", "Build a Paley, VLS or Peisert graph and report its SRG parameters");
  construct->add_option("--family", cfg.family, "paley | vls | peisert")->required();
  construct->add_option("--p", cfg.p, "Characteristic")->required();
  construct->add_option("--r", cfg.r, "Extension degree");
  construct->add_option("--k", cfg.k, "VLS multiplier, r = (ell-1)k");
  construct->add_option("--ell", cfg.ell, "VLS prime ell");
  construct->add_option("--variant", cfg.variant, "Peisert variant (1 or 3)");
  construct->add_option("--format", cfg.format, "json | graph6 | edges | text");
  construct->add_option("--output,-o", cfg.output, "Output file (graph data); summary goes to stdout");
  construct->add_flag("--allow-directed", cfg.allow_directed, "Permit asymmetric connection sets (digraph)");
  construct->add_option("--field-cap", cfg.field_cap, "Largest field order");
  construct->add_option("--srg-cap", cfg.srg_cap, "Largest vertex count for the SRG check");

  auto* classify = app.add_subcommand("classify", "Classify every two-orbit partition of GF(p^r)^*");
  classify->add_option("--p", cfg.p, "Characteristic")->required();
  classify->add_option("--r", cfg.r, "Extension degree")->required();
  classify->add_option("--format", cfg.format, "json | text");
  classify->add_option("--output,-o", cfg.output, "Report file");
  classify->add_option("--q-cap", cfg.q_cap, "Largest field order");
  classify->add_option("--field-cap", cfg.field_cap, "Largest field order accepted by the field builder");

  auto* verify = app.add_subcommand("verify", "Exhaustively verify the partition lemma or the classification");
  verify->add_flag("--lemma", cfg.lemma, "Check every n <= n-max and unit a");
  verify->add_flag("--theorem", cfg.theorem, "Classify every prime power q <= q-max");
  verify->add_option("--n-max", cfg.n_max, "Largest n for --lemma (integer or b^e)");
  verify->add_option("--q-max", cfg.q_max, "Largest q for --theorem (integer or b^e)");
  verify->add_option("--q-list", cfg.q_list, "Explicit field orders for --theorem")->delimiter(',');
  verify->add_option("--n-cap", cfg.action_cap, "Cap on n");
  verify->add_option("--q-cap", cfg.q_cap, "Cap on q");
  verify->add_flag("--summary", cfg.summary, "Lemma report without class arrays");
  verify->add_flag("--reports", cfg.with_reports, "Include full per-field reports in the theorem summary");
  verify->add_option("--threads", cfg.threads, "Worker threads");
  verify->add_option("--output,-o", cfg.output, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(cfg);
    if (*classify) return cmd_classify(cfg);
    return cmd_verify(cfg);
  } catch (const rank3::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
