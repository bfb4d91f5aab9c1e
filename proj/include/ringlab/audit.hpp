#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/classify.hpp"

namespace ringlab {

// Corpus audit: every spec file is built and run through the property suite
// and the implication audit; failures are isolated per ring. Files are
// processed in sorted-name order and the aggregate is byte-deterministic
// for a fixed corpus and configuration.
//
// status per ring: "pass", "fail" (an invariant or implication did not
// hold), or "error" with an error class:
//   input  unreadable/invalid spec or tables
//   cap    a size or enumeration cap was exceeded
struct AuditOptions {
  AnalysisCaps caps;
  int jobs = 1;
};

nlohmann::ordered_json run_corpus_audit(
    const std::vector<std::filesystem::path>& spec_files,
    const AuditOptions& opts);

// Sorted *.json files directly inside dir.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

// Worst-case exit code for an aggregate: invariant failure (2) beats input
// error (1) beats cap exceeded (3) beats pass (0).
int audit_exit_code(const nlohmann::ordered_json& aggregate);

}  // namespace ringlab
