#pragma once

#include <string>
#include <vector>

#include "tanglerep/checks.hpp"
#include "tanglerep/schur_weyl.hpp"

namespace tanglerep {

inline constexpr const char* kToolVersion = "0.1.0";

/// Dimension-table row: the level ladder of one (m, n, f, field) point.
struct DimsRow {
  long m = 0, n = 0, f = 0;
  std::string field_label;
  long dim_total = 0;
  long dim_algebra = 0;
  long dim_ideal = 0;
  long dim_w = 0;
  long dim_quotient = 0;
  long dim_ht = 0;
};

/// One relation-suite run on one grid point.
struct SuiteOutcome {
  std::string suite;
  long m = 0, n = 0;
  std::string field_label;
  std::vector<CheckResult> results;
};

/// Everything one command run emits. A command populates the payload
/// vectors it produced and leaves the others empty. Timings never enter the
/// envelope, so equal configurations render byte-identical output.
struct ReportEnvelope {
  std::string config;
  std::vector<SuiteOutcome> suites;
  std::vector<DimsRow> dims;
  std::vector<DualityReport> reports;
  std::vector<std::string> notes;
};

/// Pretty-printed JSON with a fixed key order, ending in a newline.
std::string envelope_json(const ReportEnvelope& e);
/// Header plus one row per payload entry; notes become trailing comment
/// lines.
std::string envelope_csv(const ReportEnvelope& e);
/// Aligned plain-text rendering.
std::string envelope_table(const ReportEnvelope& e);

} // namespace tanglerep
