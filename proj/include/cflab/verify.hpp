#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cflab/registry.hpp"

namespace cflab {

struct VerificationReport {
  std::string id;
  std::optional<FloatApprox> cf_value;
  std::optional<FloatApprox> rhs_value;
  int matched_digits = 0;
  std::vector<std::string> methods_used;
  bool pass = false;
  std::vector<std::string> anomalies;
  std::string error;
  /// Convergent index at which eval_cf stopped.
  long cf_iterations = 0;
  Precision cf_precision = 0;
};

struct VerifyOptions {
  /// Record exceptions in the report instead of throwing.
  bool keep_going = true;
  long max_cf_iter = 100000;
  long max_series_terms = 100000;
};

/// Largest digits request accepted by verify.
constexpr int kMaxVerifyDigits = 1000;

VerificationReport verify(const ConjectureEntry& entry, int digits, const VerifyOptions& opts = {});

struct VerifySummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int with_anomalies = 0;
};

/// Reports in id order regardless of scheduling.
std::vector<VerificationReport> verify_all(const std::vector<ConjectureEntry>& entries, int digits,
                                           int parallelism, const VerifyOptions& opts = {});

VerifySummary summarize(const std::vector<VerificationReport>& reports);

/// Deterministic JSON (no timing data).
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, int digits);

}  // namespace cflab
