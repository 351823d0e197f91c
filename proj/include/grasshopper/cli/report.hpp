#pragma once

// Machine-readable command reports.
//
// Schema (version 1):
//   {
//     "schema_version": 1,
//     "artifact_version": "0.1.0",
//     "command": "<subcommand>",
//     "inputs": {...},            // echo of the parsed arguments
//     "inputs_digest": "<16 hex>",// FNV-1a 64 of the canonical inputs dump
//     "seed": <uint> | null,
//     "ok": true | false,         // false iff an assertion failed
//     "results": {...},           // command specific; big numbers as strings
//     "timings_ms": {"total": <double>, ...},
//     "error": {"kind", "message", "cap"?}   // only on error exits
//   }
// Everything except "timings_ms" is a deterministic function of
// (command, inputs, seed).

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include <json.hpp>

namespace grasshopper::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitAssertionFailed = 1,
  kExitInputError = 2,
  kExitCapacityError = 3,
  kExitInternalError = 4,
};

struct Report {
  nlohmann::json document;
  /// Human-readable lines for stderr.
  std::string summary;
  int exit_code = kExitOk;

  bool ok() const { return exit_code == kExitOk; }
  /// Marks an assertion failure and appends `why` to the summary.
  void fail(const std::string& why);
};

std::string inputs_digest(const nlohmann::json& inputs);

/// Report skeleton with inputs echoed and digested.
Report begin_report(const std::string& command, nlohmann::json inputs,
                    std::optional<std::uint64_t> seed = std::nullopt);

/// Sets "ok" and the total timing.
void finish_report(Report& report, double total_ms);

/// Report for an exception escaping a command; maps the exception type to
/// an exit code.
Report error_report(const std::string& command, const std::exception_ptr& error);

}  // namespace grasshopper::cli
