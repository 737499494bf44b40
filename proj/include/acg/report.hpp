#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace acg {

enum class CheckStatus { pass, fail, skipped_capacity };

std::string to_string(CheckStatus status);
/// Throws FormatError for an unknown status string.
CheckStatus parse_check_status(const std::string& text);

struct CheckRecord {
  std::string id;
  /// Human-readable statement of the claim being checked.
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;
  std::string detail;

  bool operator==(const CheckRecord&) const = default;
};

struct EngineParameters {
  std::uint64_t enumeration_bound = 0;
  std::optional<std::uint64_t> dixon_prime;

  bool operator==(const EngineParameters&) const = default;
};

struct VerificationReport {
  std::string group;
  std::string suite;
  std::vector<CheckRecord> checks;
  EngineParameters engine;
  /// Wall-clock time; kept apart from the deterministic body.
  double elapsed_ms = 0.0;

  /// Records a check. `witness` is only evaluated when `ok` is false.
  void check(std::string id, std::string anchor, bool ok, const std::function<std::string()>& witness,
             std::string detail = {});
  void pass(std::string id, std::string anchor, std::string detail = {});
  void skip_capacity(std::string id, std::string anchor, std::string detail);
  void fail(std::string id, std::string anchor, std::string witness, std::string detail = {});
  void append(const VerificationReport& other);

  std::size_t count(CheckStatus status) const;
  bool passed() const { return count(CheckStatus::fail) == 0; }
  /// First failing record, if any.
  const CheckRecord* first_failure() const;

  bool operator==(const VerificationReport&) const = default;
};

nlohmann::json to_json(const VerificationReport& report);
/// Throws FormatError on malformed input.
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace acg
