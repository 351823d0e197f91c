#include "grasshopper/cli/report.hpp"

#include <cstdio>

#include "grasshopper/errors.hpp"

namespace grasshopper::cli {

void Report::fail(const std::string& why) {
  exit_code = kExitAssertionFailed;
  summary += "FAIL: " + why + "\n";
}

std::string inputs_digest(const nlohmann::json& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

Report begin_report(const std::string& command, nlohmann::json inputs,
                    std::optional<std::uint64_t> seed) {
  Report report;
  auto& doc = report.document;
  doc["schema_version"] = kSchemaVersion;
  doc["artifact_version"] = kArtifactVersion;
  doc["command"] = command;
  doc["inputs_digest"] = inputs_digest(inputs);
  doc["inputs"] = std::move(inputs);
  doc["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  doc["results"] = nlohmann::json::object();
  doc["timings_ms"] = nlohmann::json::object();
  return report;
}

void finish_report(Report& report, double total_ms) {
  report.document["ok"] = report.ok();
  report.document["timings_ms"]["total"] = total_ms;
}

Report error_report(const std::string& command, const std::exception_ptr& error) {
  Report report = begin_report(command, nlohmann::json::object());
  nlohmann::json info;
  try {
    std::rethrow_exception(error);
  } catch (const CapacityError& e) {
    info = {{"kind", "capacity"}, {"cap", e.cap()}, {"message", e.what()}};
    report.exit_code = kExitCapacityError;
  } catch (const InputError& e) {
    info = {{"kind", "input"}, {"message", e.what()}};
    report.exit_code = kExitInputError;
  } catch (const TheoremViolation& e) {
    info = {{"kind", "theorem_violation"}, {"message", e.what()}};
    report.exit_code = kExitAssertionFailed;
  } catch (const std::exception& e) {
    info = {{"kind", "internal"}, {"message", e.what()}};
    report.exit_code = kExitInternalError;
  }
  report.document["error"] = info;
  report.document["ok"] = false;
  report.summary = "error (" + info["kind"].get<std::string>() + "): " +
                   info["message"].get<std::string>() + "\n";
  return report;
}

}  // namespace grasshopper::cli
