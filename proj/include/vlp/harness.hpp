#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vlp/json_io.hpp"
#include "vlp/model.hpp"

namespace vlp {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus s);

// One check run on one instance. Repeated executions of the same check on
// the same instance are aggregated: the witness carries "executions" and,
// on failure, the first counterexample together with the problem so the
// failure can be replayed from the record alone.
struct CheckRecord {
  std::string check;
  std::string instance;
  CheckStatus status = CheckStatus::Pass;
  Json witness;  // null when there is nothing to report
  double elapsed_ms = 0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  // Total executions per check name over all instances.
  std::map<std::string, std::size_t> executions;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Fail) == 0; }
  // Sorts by (instance, check).
  void normalize();
  void append(VerificationReport other);
};

struct HarnessOptions {
  std::size_t dual_samples = 50;
  std::size_t primal_samples = 50;
  std::size_t membership_samples = 50;
  // Random U matrices per instance for the lambda-existence equivalence.
  std::size_t lambda_pairs = 2;
  // When false, elapsed_ms is always 0 so reports are byte-identical
  // between runs.
  bool timing = false;
};

// Every property check over one instance.
VerificationReport run_instance_suite(const VlpProblem& p,
                                      const std::string& instance,
                                      std::uint64_t seed,
                                      const HarnessOptions& opts = {});

std::vector<std::string> fixture_names();
// Throws PreconditionError for an unknown name.
const VlpProblem& fixture_problem(const std::string& name);
// Pinned expectations of the fixture followed by the instance suite.
VerificationReport run_fixture(const std::string& name,
                               const HarnessOptions& opts = {});

// `count` generated instances from random_instance. Throws
// PreconditionError when count is 0.
VerificationReport run_random_campaign(std::uint64_t seed, std::size_t count,
                                       const HarnessOptions& opts = {});

enum class ReportFormat { Human, Json };

// JSON: array of {"check", "instance", "status", "witness", "elapsed_ms"}.
// Human: one line per record.
std::string emit_report(const VerificationReport& r, ReportFormat format);
// Inverse of the JSON form of emit_report. Throws ParseError.
VerificationReport parse_report(std::string_view text);

}  // namespace vlp
