#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "arcsym/bounds.hpp"
#include "arcsym/symmetry.hpp"

namespace arcsym {

/// One checked statement inside a case.
struct Claim {
  std::string claim;
  Status status = Status::kPass;
  std::string expected;
  std::string actual;
  std::string witness;
};

struct CaseResult {
  std::string case_id;
  std::vector<Claim> claims;
  double elapsed_ms = 0;

  bool failed() const;
};

struct CasebookOptions {
  std::filesystem::path catalog_dir;
  SearchBounds bounds;
  bool allow_long = false;  // no long-running case is registered at present
};

/// Registered case ids in run order.
const std::vector<std::string>& case_ids();
/// One-line description of a case.
const std::string& case_description(const std::string& id);

/// Throws InvalidArgument for an unknown id.
CaseResult run_case(const std::string& id, const CasebookOptions& options);
std::vector<CaseResult> run_all(const CasebookOptions& options);

enum class ReportFormat { kJson, kText };

/**
 * JSON lines, one per claim: {"case","claim","status","expected","actual",
 * "witness","elapsed_ms"} with keys in that order, or a readable text table.
 * `with_timing` = false drops elapsed_ms, making reports byte-comparable.
 */
void emit_report(const std::vector<CaseResult>& results, std::ostream& out,
                 ReportFormat format = ReportFormat::kJson, bool with_timing = true);

/// Writes the report to `path` (throws Error on I/O failure).
void emit_report(const std::vector<CaseResult>& results, const std::filesystem::path& path,
                 ReportFormat format = ReportFormat::kJson, bool with_timing = true);

/// 0 if no claim failed, 1 otherwise.
int exit_code(const std::vector<CaseResult>& results);

}  // namespace arcsym
