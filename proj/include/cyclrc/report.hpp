#ifndef CYCLRC_REPORT_HPP
#define CYCLRC_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclrc/bounds.hpp"
#include "cyclrc/cyclic.hpp"
#include "cyclrc/lrc.hpp"

namespace cyclrc::report {

struct AnalyzeOptions {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::vector<std::uint32_t> zeros;
  std::optional<std::string> locator;  // "p^m", validated against the inferred field
  linalg::SearchLimits limits;
  const bounds::KqTable* kq_table = nullptr;
  bool with_bounds = true;
};

/// Everything cmd_analyze prints: parameters, measured results with explicit
/// unknown markers, dual data, bounds and certificates. All fields regenerate
/// deterministically from (q, n, zeros).
struct CodeReport {
  std::uint64_t q = 0, n = 0;
  std::string locator_name;
  std::vector<std::uint32_t> seeds, complete, representatives;
  std::vector<std::uint32_t> dual_complete, dual_representatives;
  std::vector<gf::Elem> generator_poly;

  std::uint64_t k = 0;
  std::optional<std::uint64_t> d, d_dual, r, w;
  bool locality_defined = true;
  std::map<std::string, std::string> unknown;  // field -> reason

  std::optional<bool> optimal;  // Singleton-like equality
  std::optional<long long> singleton;
  std::optional<long long> shortening;
  std::optional<std::uint64_t> shortening_t;
  std::optional<long long> lp_k;
  std::optional<double> lp_log_q;

  std::vector<lrc::Certificate> certificates;
  // sample recovering set for coordinate 0: (position, coefficient code)
  std::vector<std::pair<std::uint32_t, gf::Elem>> recovering_set_sample;
};

CodeReport analyze(const AnalyzeOptions& opts);

nlohmann::json to_json(const CodeReport& rep, bool with_timestamp = true);
std::string to_text(const CodeReport& rep);

/// Rebuilds the analysis from the parameters stored in a report JSON.
CodeReport reanalyze_from_json(const nlohmann::json& j, const linalg::SearchLimits& limits = {});

struct BoundReport {
  std::uint64_t q = 0, n = 0, d = 0, r = 0;
  std::uint64_t singleton_k = 0;
  bounds::ShorteningBound shortening;
  bounds::LpBound lp;
};

BoundReport evaluate_bounds(std::uint64_t q, std::uint64_t n, std::uint64_t d, std::uint64_t r,
                            const bounds::KqTable* table = nullptr);

nlohmann::json to_json(const BoundReport& rep, bool with_timestamp = true);
std::string to_text(const BoundReport& rep);
std::string to_csv(const BoundReport& rep);

}  // namespace cyclrc::report

#endif  // CYCLRC_REPORT_HPP
