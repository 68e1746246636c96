#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bernalg {

class CheckLog {
 public:
  void check(bool ok, const std::string& what);
  void note(const std::string& text) { note_ = text; }
  int count() const { return count_; }
  int failures() const { return failures_; }
  const std::string& first_failure() const { return first_failure_; }
  const std::string& note() const { return note_; }

 private:
  int count_ = 0;
  int failures_ = 0;
  std::string first_failure_;
  std::string note_;
};

/// One acceptance criterion: a body that records checks, and a wall-clock limit.
struct Criterion {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  std::function<void(CheckLog&)> body;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  int checks = 0;
  std::string detail;  // first failure, or a short note
};

/// Criteria 1 to 16. Criterion 17 covers the whole run and is appended by
/// run_acceptance.
const std::vector<Criterion>& acceptance_criteria();

/// Exceptions thrown by the body count as a failed check.
CriterionResult run_criterion(const Criterion& c);

inline constexpr double kSelftestLimitSeconds = 120.0;

/// Runs every criterion in order and appends criterion 17: all passed and the
/// total time stayed under kSelftestLimitSeconds.
std::vector<CriterionResult> run_acceptance();

/// "PASS  3  title  (0.012 s of 1 s, 61 checks)" plus the detail on failure.
std::string format_result(const CriterionResult& r);

}  // namespace bernalg
