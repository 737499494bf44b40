#include "acg/report.hpp"

#include "acg/errors.hpp"

namespace acg {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_capacity: return "skipped-capacity";
  }
  return "unknown";
}

CheckStatus parse_check_status(const std::string& text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "skipped-capacity") return CheckStatus::skipped_capacity;
  throw FormatError("unknown check status '" + text + "'", 0);
}

void VerificationReport::check(std::string id, std::string anchor, bool ok,
                               const std::function<std::string()>& witness, std::string detail) {
  if (ok) {
    pass(std::move(id), std::move(anchor), std::move(detail));
  } else {
    fail(std::move(id), std::move(anchor), witness(), std::move(detail));
  }
}

void VerificationReport::pass(std::string id, std::string anchor, std::string detail) {
  checks.push_back({std::move(id), std::move(anchor), CheckStatus::pass, std::nullopt, std::move(detail)});
}

void VerificationReport::skip_capacity(std::string id, std::string anchor, std::string detail) {
  checks.push_back({std::move(id), std::move(anchor), CheckStatus::skipped_capacity, std::nullopt, std::move(detail)});
}

void VerificationReport::fail(std::string id, std::string anchor, std::string witness, std::string detail) {
  checks.push_back({std::move(id), std::move(anchor), CheckStatus::fail, std::move(witness), std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  if (other.engine.dixon_prime) engine.dixon_prime = other.engine.dixon_prime;
}

std::size_t VerificationReport::count(CheckStatus status) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == status ? 1 : 0;
  return n;
}

const CheckRecord* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return &c;
  }
  return nullptr;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry{{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}};
    entry["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  nlohmann::json engine{{"enumeration_bound", report.engine.enumeration_bound}};
  engine["dixon_prime"] =
      report.engine.dixon_prime ? nlohmann::json(*report.engine.dixon_prime) : nlohmann::json(nullptr);
  return {{"group", report.group},
          {"suite", report.suite},
          {"engine", engine},
          {"checks", checks},
          {"timing", {{"elapsed_ms", report.elapsed_ms}}}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.group = j.at("group").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    const auto& engine = j.at("engine");
    r.engine.enumeration_bound = engine.at("enumeration_bound").get<std::uint64_t>();
    if (engine.contains("dixon_prime") && !engine["dixon_prime"].is_null()) {
      r.engine.dixon_prime = engine["dixon_prime"].get<std::uint64_t>();
    }
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.id = c.at("id").get<std::string>();
      rec.anchor = c.at("anchor").get<std::string>();
      rec.status = parse_check_status(c.at("status").get<std::string>());
      if (c.contains("witness") && !c["witness"].is_null()) rec.witness = c["witness"].get<std::string>();
      if (c.contains("detail")) rec.detail = c["detail"].get<std::string>();
      r.checks.push_back(std::move(rec));
    }
    if (j.contains("timing")) r.elapsed_ms = j["timing"].value("elapsed_ms", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what(), 0);
  }
}

}  // namespace acg
