#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acg/perm_group.hpp"
#include "acg/report.hpp"
#include "acg/zoo.hpp"
#include "json.hpp"

namespace acg::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { exit_pass = 0, exit_violation = 1, exit_capacity = 2, exit_input = 3 };

struct GroupFile {
  std::string name;
  PermGroup group;
};

/// Group file text: `name: <string>`, then `degree: <n>`, then one generator
/// per nonempty line in cycle notation. `#` starts a comment. Errors are
/// FormatError carrying the 1-based line number.
GroupFile parse_group_text(std::string_view text);
/// Throws FormatError (line 0) if the file cannot be read.
GroupFile parse_group_file(const std::filesystem::path& path);
/// Canonical form: generators as given, each in canonical cycle notation.
std::string serialize_group(const GroupFile& file);

/// Suite ids in their canonical order.
const std::vector<std::string>& suite_names();
/// Comma separated ids, or "all". Unknown ids throw PreconditionError.
std::vector<std::string> parse_suite_selection(std::string_view text);
bool is_character_suite(const std::string& suite);

struct Limits {
  std::uint64_t structural = 2000;
  std::uint64_t character = 300;
};

/// Runs one suite on one group. CapacityError becomes a skipped-capacity
/// record and TheoremViolation a failed record with its witness.
VerificationReport run_suite(const std::string& suite, const std::string& name, const PermGroup& group,
                             const Limits& limits = {});

struct CorpusEntry {
  std::string name;
  PermGroup group;
  std::optional<GroupManifest> manifest;
};

struct InputError {
  std::string source;
  std::string message;
};

struct GroupResult {
  std::string name;
  std::uint64_t order = 0;
  /// Suites not run because the group is above their order limit.
  std::vector<std::string> excluded;
  std::vector<VerificationReport> reports;
};

struct AggregateReport {
  std::vector<std::string> suites;
  Limits limits;
  std::vector<GroupResult> groups;  // sorted by name
  std::vector<InputError> input_errors;

  std::size_t count(CheckStatus status) const;
  int exit_code() const;
};

nlohmann::json to_json(const AggregateReport& report);

/// Group files (*.grp) in `dir`, sorted by name, with `<stem>.manifest.json`
/// sidecars when present. Unreadable files are reported, not thrown.
std::vector<CorpusEntry> load_directory(const std::filesystem::path& dir, std::vector<InputError>& errors);
std::vector<CorpusEntry> builtin_entries();

/// Parallel across groups only; the result does not depend on `jobs`.
AggregateReport verify(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& suites,
                       const Limits& limits, unsigned jobs);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acg::cli
