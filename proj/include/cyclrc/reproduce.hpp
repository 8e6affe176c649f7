#ifndef CYCLRC_REPRODUCE_HPP
#define CYCLRC_REPRODUCE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "cyclrc/linalg.hpp"

namespace cyclrc::report {

struct FieldCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproductionResult {
  std::string id;
  std::vector<FieldCheck> fields;
  bool pass() const;
};

/// The built-in expected values for every reproduction item.
nlohmann::json default_fixture();

/// Recomputes the published tables and worked examples and diffs them against
/// the fixture. target is one of "table1", "examples", "all".
std::vector<ReproductionResult> reproduce(const std::string& target,
                                          const nlohmann::json& fixture,
                                          const linalg::SearchLimits& limits = {});

std::string to_text(const std::vector<ReproductionResult>& results);
nlohmann::json to_json(const std::vector<ReproductionResult>& results);

}  // namespace cyclrc::report

#endif  // CYCLRC_REPRODUCE_HPP
